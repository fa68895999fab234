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

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "cvtele/cli/commands.hpp"
#include "cvtele/errors.hpp"

using namespace cvtele::cli;

namespace {

void add_format(CLI::App* sub, RunConfig& c) {
    sub->add_option("--format", c.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--digits", c.digits, "decimal digits for real output")->check(CLI::Range(0, 17));
    sub->add_option("--workers", c.workers, "worker threads (0 = OpenMP default)")
        ->check(CLI::NonNegativeNumber);
}

void add_state(CLI::App* sub, RunConfig& c, bool required = true) {
    auto* o = sub->add_option("--state", c.state,
                              "coh:<re>[,<im>] | fock:<n> | superpos01 | vec:<c0>;<c1>;...");
    if (required) {
        o->required();
    }
}

void add_t_or_r(CLI::App* sub, RunConfig& c) {
    auto* t = sub->add_option("--t", c.t, "teleportation parameter t");
    auto* r = sub->add_option("--r", c.r, "squeeze parameter r (t = 2 exp(-2r))");
    t->excludes(r);
}

void add_grid(CLI::App* sub, RunConfig& c) {
    sub->add_option("--t-min", c.t_min, "first grid value of t");
    sub->add_option("--t-max", c.t_max, "last grid value of t");
    sub->add_option("--t-step", c.t_step, "grid step in t");
}

void add_seed(CLI::App* sub, RunConfig& c) {
    sub->add_option("--seed", c.seed, "random seed");
}

void add_samples(CLI::App* sub, RunConfig& c) {
    sub->add_option("--samples", c.samples, "Monte Carlo sample count (>= 100)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Phase-space model of continuous-variable teleportation"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    RunConfig cfg;
    std::string replay_path;

    auto* fid = app.add_subcommand("fidelity", "closed-form and quadrature fidelity F(t)");
    add_state(fid, cfg);
    add_t_or_r(fid, cfg);
    add_grid(fid, cfg);
    add_format(fid, cfg);

    auto* simulate = app.add_subcommand("simulate", "Monte Carlo run of the protocol (coherent input)");
    add_state(simulate, cfg);
    add_t_or_r(simulate, cfg);
    add_seed(simulate, cfg);
    add_samples(simulate, cfg);
    add_format(simulate, cfg);

    auto* resource = app.add_subcommand("resource", "classify a two-mode Gaussian resource");
    auto* r = resource->add_option("--r", cfg.r, "squeeze parameter r");
    auto* c = resource->add_option("--c", cfg.c, "covariance parameter c");
    auto* s = resource->add_option("--s", cfg.s, "covariance parameter s");
    r->excludes(c)->excludes(s);
    add_format(resource, cfg);

    auto* kick = app.add_subcommand("kick-scan", "smallest kick making the quasidistribution nonnegative");
    add_state(kick, cfg);
    add_grid(kick, cfg);
    kick->add_option("--extent", cfg.extent, "half-width of the phase-space grid");
    kick->add_option("--resolution", cfg.resolution, "phase-space grid spacing");
    kick->add_option("--epsilon", cfg.epsilon, "negativity tolerance");
    add_format(kick, cfg);

    auto* verdict = app.add_subcommand("verdict", "compare an achieved fidelity with the kick threshold");
    add_state(verdict, cfg, false);
    verdict->add_option("--achieved", cfg.achieved, "achieved fidelity in [0, 1]");
    verdict->add_flag("--demo", cfg.demo, "use the experimental fidelities 0.58, 0.61, 0.64");
    add_format(verdict, cfg);

    auto* maxf = app.add_subcommand("max-fidelity", "maximise F over pure states in a truncated Fock space");
    add_t_or_r(maxf, cfg);
    maxf->add_option("--cutoff", cfg.cutoff, "Fock-space dimension");
    maxf->add_option("--restarts", cfg.restarts, "random restarts");
    add_seed(maxf, cfg);
    add_format(maxf, cfg);

    auto* table = app.add_subcommand("table", "F(t) curves for plotting");
    table->add_option("--states", cfg.states, "comma-separated state list")->delimiter(',');
    add_grid(table, cfg);
    add_format(table, cfg);

    auto* cheat = app.add_subcommand("cheat", "Monte Carlo run of the kick (cheat) model");
    add_state(cheat, cfg);
    add_seed(cheat, cfg);
    add_samples(cheat, cfg);
    add_format(cheat, cfg);

    auto* replay = app.add_subcommand("replay", "rerun the command recorded in a JSON output file");
    replay->add_option("file", replay_path, "JSON output of an earlier run")->required();
    replay->add_option("--workers", cfg.workers, "worker threads (0 = OpenMP default)")
        ->check(CLI::NonNegativeNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    std::string command;
    for (auto* sub : app.get_subcommands()) {
        command = sub->get_name();
    }

    try {
        if (command == "replay") {
            std::ifstream in(replay_path);
            if (!in) {
                throw cvtele::UsageError("cannot open " + replay_path);
            }
            Json doc;
            try {
                doc = Json::parse(in);
            } catch (const nlohmann::json::exception& e) {
                throw cvtele::UsageError(std::string("replay: invalid JSON: ") + e.what());
            }
            if (!doc.contains("command") || !doc.contains("config")) {
                throw cvtele::UsageError("replay: file lacks command/config");
            }
            int workers = cfg.workers;
            command = doc["command"].get<std::string>();
            cfg = config_from_json(command, doc["config"]);
            cfg.workers = workers;
        }
        std::vector<std::string> warnings;
        Report report = run_command(command, cfg, &warnings);
        for (const auto& w : warnings) {
            std::cerr << "warning: " << w << "\n";
        }
        std::cout << render(report, cfg);
        return kExitOk;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    }
}
