// Copyright 2026 The cvtele Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CVTELE_CLI_COMMANDS_HPP
#define CVTELE_CLI_COMMANDS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cvtele/cli/output.hpp"

namespace cvtele::cli {

/// Exit codes: 0 success, 1 usage, 2 domain, 3 numerical.
enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitDomain = 2, kExitNumerical = 3 };

struct RunConfig {
    std::optional<std::string> state;
    std::optional<double> t;
    std::optional<double> r;
    std::optional<double> c;
    std::optional<double> s;
    std::optional<double> t_min;
    std::optional<double> t_max;
    std::optional<double> t_step;
    std::uint64_t seed = 42;
    std::int64_t samples = 1'000'000;
    int cutoff = 12;
    std::string format = "csv";
    int digits = 12;
    // kick-scan
    double extent = 4.0;
    double resolution = 0.05;
    double epsilon = 1e-9;
    // verdict
    std::optional<double> achieved;
    bool demo = false;
    // max-fidelity
    int restarts = 10;
    // table
    std::vector<std::string> states;
    // Execution only; never echoed.
    int workers = 0;
};

const std::vector<std::string>& command_names();

/// Config keys echoed for `command`; together they reproduce the run.
Json echo_config(const std::string& command, const RunConfig& config);

/// Inverse of echo_config; unknown keys are a usage error.
RunConfig config_from_json(const std::string& command, const Json& config);

/// Validates, runs and collects results. Warnings (e.g. vec normalization) go to `warnings`.
Report run_command(const std::string& command, const RunConfig& config,
                   std::vector<std::string>* warnings = nullptr);

std::string render(const Report& report, const RunConfig& config);

/// Maps an exception from run_command to an exit code.
int exit_code_for(const std::exception& e);

}  // namespace cvtele::cli

#endif
