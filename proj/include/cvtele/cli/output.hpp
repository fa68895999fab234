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

#ifndef CVTELE_CLI_OUTPUT_HPP
#define CVTELE_CLI_OUTPUT_HPP

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

namespace cvtele::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kVersion = "1.0.0";
// Bumped whenever a command's column names or order change.
inline constexpr int kCsvSchema = 1;

/// monostate renders as an empty CSV field / JSON null.
using Cell = std::variant<std::monostate, double, std::int64_t, std::string, bool>;

struct Report {
    std::string command;
    Json config = Json::object();
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    Json diagnostics = Json::object();
};

/// Fixed-point with `digits` decimals; "-0.000" is printed as "0.000".
std::string format_real(double v, int digits);

/// Real numbers in `j` rounded to `digits` decimals (recursively).
Json round_reals(const Json& j, int digits);

std::string render_csv(const Report& report, int digits);
std::string render_json(const Report& report, int digits);

}  // namespace cvtele::cli

#endif
