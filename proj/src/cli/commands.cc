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

#include "cvtele/cli/commands.hpp"

#include <cmath>
#include <map>
#include <set>

#include <fmt/format.h>

#include "cvtele/cli/state_parser.hpp"
#include "cvtele/errors.hpp"
#include "cvtele/fidelity.hpp"
#include "cvtele/hv_model.hpp"
#include "cvtele/resource.hpp"
#include "cvtele/teleport_sim.hpp"

namespace cvtele::cli {
namespace {

const std::vector<std::string> kDefaultTableStates = {"coh:0", "fock:1", "fock:2", "fock:3",
                                                      "superpos01"};
const double kDemoFidelities[] = {0.58, 0.61, 0.64};

const std::map<std::string, std::vector<std::string>>& echo_keys() {
    static const std::map<std::string, std::vector<std::string>> keys = {
        {"fidelity", {"state", "t", "r", "t_min", "t_max", "t_step"}},
        {"simulate", {"state", "t", "r", "seed", "samples"}},
        {"resource", {"r", "c", "s"}},
        {"kick-scan", {"state", "t_min", "t_max", "t_step", "extent", "resolution", "epsilon"}},
        {"verdict", {"state", "achieved", "demo"}},
        {"max-fidelity", {"t", "r", "cutoff", "restarts", "seed"}},
        {"table", {"states", "t_min", "t_max", "t_step"}},
        {"cheat", {"state", "seed", "samples"}},
    };
    return keys;
}

const std::vector<std::string>& keys_for(const std::string& command) {
    auto it = echo_keys().find(command);
    if (it == echo_keys().end()) {
        throw UsageError(fmt::format("unknown command '{}'", command));
    }
    return it->second;
}

double t_from_r(double r) { return 2.0 * std::exp(-2.0 * r); }

bool has_grid(const RunConfig& c) { return c.t_min || c.t_max || c.t_step; }

void fill_grid(RunConfig& c, double lo, double hi, double step) {
    if (!c.t_min) c.t_min = lo;
    if (!c.t_max) c.t_max = hi;
    if (!c.t_step) c.t_step = step;
}

// Defaults that depend on the command are made explicit so the echo is complete.
RunConfig resolve(const std::string& command, RunConfig c) {
    if (command == "kick-scan") {
        fill_grid(c, 0.0, 2.0, 0.01);
    } else if (command == "table") {
        fill_grid(c, 0.0, 4.0, 0.05);
        if (c.states.empty()) {
            c.states = kDefaultTableStates;
        }
    } else if (command == "fidelity" && has_grid(c)) {
        fill_grid(c, 0.0, 4.0, 0.05);
    } else if (command == "verdict" && c.demo && !c.state) {
        c.state = "coh:1";
    }
    return c;
}

void require(bool ok, const std::string& message) {
    if (!ok) {
        throw UsageError(message);
    }
}

void require_state(const RunConfig& c, const std::string& command) {
    require(c.state.has_value(), fmt::format("{}: --state is required", command));
}

void require_t_xor_r(const RunConfig& c, const std::string& command, bool grid_allowed) {
    int given = (c.t ? 1 : 0) + (c.r ? 1 : 0) + (grid_allowed && has_grid(c) ? 1 : 0);
    if (grid_allowed) {
        require(given == 1, fmt::format("{}: give exactly one of --t, --r or a t grid", command));
    } else {
        require(given == 1, fmt::format("{}: give exactly one of --t or --r", command));
    }
}

void validate(const std::string& command, const RunConfig& c) {
    require(c.format == "csv" || c.format == "json", "--format must be csv or json");
    require(c.digits >= 0 && c.digits <= 17, "--digits must be in [0, 17]");
    if (command == "simulate" || command == "cheat") {
        require(c.samples >= 100, "--samples must be at least 100");
    }
    if (has_grid(c)) {
        require(c.t_min && c.t_max && c.t_step, "t grid needs --t-min, --t-max and --t-step");
        require(*c.t_step > 0.0, "--t-step must be positive");
        require(*c.t_max >= *c.t_min, "--t-max must not be below --t-min");
    }
    if (command == "fidelity") {
        require_state(c, command);
        require_t_xor_r(c, command, true);
    } else if (command == "simulate") {
        require_state(c, command);
        require_t_xor_r(c, command, false);
    } else if (command == "resource") {
        bool cs = c.c.has_value() || c.s.has_value();
        require(c.r.has_value() != cs, "resource: give either --r or both --c and --s");
        require(!cs || (c.c && c.s), "resource: --c and --s go together");
    } else if (command == "kick-scan" || command == "cheat") {
        require_state(c, command);
    } else if (command == "verdict") {
        require_state(c, command);
        require(c.demo != c.achieved.has_value(), "verdict: give either --achieved or --demo");
        if (c.achieved) {
            require(*c.achieved >= 0.0 && *c.achieved <= 1.0, "--achieved must be in [0, 1]");
        }
    } else if (command == "max-fidelity") {
        require_t_xor_r(c, command, false);
        require(c.restarts >= 1, "--restarts must be at least 1");
    }
}

StateSpec parse(const std::string& text, std::vector<std::string>* warnings) {
    StateExpr e = parse_state(text);
    if (warnings) {
        warnings->insert(warnings->end(), e.warnings.begin(), e.warnings.end());
    }
    return e.parsed;
}

kernels::ExecConfig exec_of(const RunConfig& c) { return kernels::ExecConfig::parallel(c.workers); }

std::vector<double> grid_of(const RunConfig& c) {
    return hv::uniform_grid(*c.t_min, *c.t_max, *c.t_step);
}

Cell opt_cell(const std::optional<double>& v) {
    return v ? Cell(*v) : Cell(std::monostate{});
}

Json complex_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json pair_json(const std::array<double, 2>& a) { return Json::array({a[0], a[1]}); }

Report cmd_fidelity(const RunConfig& c, std::vector<std::string>* warnings) {
    StateSpec state = parse(*c.state, warnings);
    std::vector<double> ts;
    if (c.t) {
        ts = {*c.t};
    } else if (c.r) {
        ts = {t_from_r(*c.r)};
    } else {
        ts = grid_of(c);
    }
    Report rep;
    rep.columns = {"t", "closed_form", "quadrature", "abs_difference"};
    for (double t : ts) {
        auto closed = fidelity::fidelity_closed_form(state, t);
        double quad = fidelity::fidelity_numeric(state, t);
        std::optional<double> diff;
        if (closed) {
            diff = std::abs(*closed - quad);
        }
        rep.rows.push_back({t, opt_cell(closed), quad, opt_cell(diff)});
    }
    rep.diagnostics["state"] = state.descriptor();
    return rep;
}

Report cmd_simulate(const RunConfig& c, std::vector<std::string>* warnings) {
    StateSpec state = parse(*c.state, warnings);
    if (!state.is_coherent()) {
        throw DomainError(fmt::format(
            "simulate samples the Wigner function and supports coherent inputs only; "
            "for {} use the kick model instead: cvtele cheat --state {}",
            *c.state, *c.state));
    }
    resource::ResourceParams params =
        c.r ? resource::from_squeeze(*c.r) : resource::resource_for_t(*c.t);
    sim::RunOptions opts;
    opts.exec = exec_of(c);
    auto run = sim::run_protocol(state, params, c.samples, {c.seed, 0}, opts);
    auto check = sim::empirical_g_check(run);
    double target = fidelity::fidelity_coherent(params.t());
    double z = (run.fidelity_mean - target) / run.fidelity_stderr;

    Report rep;
    rep.columns = {"n_samples", "t", "fidelity_mean", "fidelity_stderr", "closed_form", "z_score"};
    rep.rows.push_back({run.n_samples, params.t(), run.fidelity_mean, run.fidelity_stderr, target, z});
    Json g = Json::object();
    g["expected_g_variance"] = check.expected_g_variance;
    g["g_mean"] = complex_json(run.g_mean);
    g["g_quadrature_variances"] = pair_json(run.g_quadrature_variances);
    g["g_variance_z"] = pair_json(check.g_variance_z);
    g["expected_xi_variance"] = check.expected_xi_variance;
    g["xi_mean"] = complex_json(run.xi_mean);
    g["xi_quadrature_variances"] = pair_json(run.xi_quadrature_variances);
    g["xi_variance_z"] = pair_json(check.xi_variance_z);
    g["xi_mean_z"] = pair_json(check.xi_mean_z);
    g["expected_output_variance"] = check.expected_output_variance;
    g["output_mean"] = complex_json(run.output_mean);
    g["output_quadrature_variances"] = pair_json(run.output_quadrature_variances);
    g["output_variance_z"] = pair_json(check.output_variance_z);
    g["output_mean_z"] = pair_json(check.output_mean_z);
    g["max_abs_z"] = check.max_abs_z();
    rep.diagnostics["seed"] = c.seed;
    rep.diagnostics["resource"] = {{"c", params.c}, {"s", params.s}};
    rep.diagnostics["g_check"] = std::move(g);
    return rep;
}

Report cmd_resource(const RunConfig& c) {
    resource::ResourceParams params =
        c.r ? resource::from_squeeze(*c.r) : resource::ResourceParams{*c.c, *c.s, std::nullopt};
    auto cls = resource::classify(params);
    Report rep;
    rep.columns = {"valid", "pure", "separable", "entangled", "c", "s",
                   "t", "correlation", "f_coherent", "violation"};
    Cell t_cell = std::monostate{};
    Cell f_cell = std::monostate{};
    if (cls.valid && params.c + params.s > 0.0) {
        t_cell = params.t();
        f_cell = fidelity::fidelity_coherent(params.t());
    }
    rep.rows.push_back({cls.valid, cls.valid && cls.pure, cls.valid && cls.separable,
                        cls.valid && !cls.separable, params.c, params.s, t_cell,
                        std::string(resource::to_string(cls.correlation)), f_cell, cls.violation});
    return rep;
}

Report cmd_kick_scan(const RunConfig& c, std::vector<std::string>* warnings) {
    StateSpec state = parse(*c.state, warnings);
    auto ts = grid_of(c);
    hv::SpatialGrid grid{c.extent, c.resolution};
    auto rep_k = hv::min_kick_threshold(state, ts, grid, c.epsilon, exec_of(c));
    Report rep;
    rep.columns = {"t", "min_quasidist"};
    for (size_t i = 0; i < rep_k.t_grid.size(); ++i) {
        rep.rows.push_back({rep_k.t_grid[i], rep_k.min_wigner_per_t[i]});
    }
    rep.diagnostics["state"] = rep_k.state;
    rep.diagnostics["t_star"] = rep_k.t_star;
    rep.diagnostics["monotone"] = rep_k.monotone;
    return rep;
}

Report cmd_verdict(const RunConfig& c, std::vector<std::string>* warnings) {
    StateSpec state = parse(*c.state, warnings);
    std::vector<double> achieved;
    if (c.demo) {
        achieved.assign(std::begin(kDemoFidelities), std::end(kDemoFidelities));
    } else {
        achieved = {*c.achieved};
    }
    Report rep;
    rep.columns = {"state", "achieved", "threshold", "verdict"};
    for (double f : achieved) {
        auto v = hv::verdict(state, f);
        rep.rows.push_back({state.descriptor(), v.achieved, v.threshold,
                            std::string(hv::to_string(v.kind))});
    }
    rep.diagnostics["gold_standard"] = hv::kGoldStandard;
    rep.diagnostics["gaussian_input"] = hv::is_gaussian(state);
    return rep;
}

Report cmd_max_fidelity(const RunConfig& c) {
    double t = c.t ? *c.t : t_from_r(*c.r);
    fidelity::MaxFidelityOptions opts;
    opts.restarts = c.restarts;
    opts.seed = c.seed;
    opts.exec = exec_of(c);
    auto res = fidelity::max_fidelity(t, c.cutoff, opts);
    double bound = fidelity::fidelity_coherent(t);
    Report rep;
    rep.columns = {"t",        "cutoff",   "value",   "bound",   "deficit",
                   "coherent_overlap", "alpha_re", "alpha_im", "restart", "iterations"};
    rep.rows.push_back({t, std::int64_t{c.cutoff}, res.value, bound, bound - res.value,
                        res.coherent_overlap, res.coherent_alpha.real(), res.coherent_alpha.imag(),
                        std::int64_t{res.restart}, std::int64_t{res.iterations}});
    Json coeffs = Json::array();
    for (Complex z : res.coeffs) {
        coeffs.push_back(complex_json(z));
    }
    rep.diagnostics["converged"] = res.converged;
    rep.diagnostics["coefficients"] = std::move(coeffs);
    return rep;
}

Report cmd_table(const RunConfig& c, std::vector<std::string>* warnings) {
    auto ts = grid_of(c);
    Report rep;
    rep.columns = {"state", "t", "fidelity", "method"};
    for (const auto& text : c.states) {
        StateSpec state = parse(text, warnings);
        bool closed = !ts.empty() && fidelity::fidelity_closed_form(state, ts.front()).has_value();
        auto method = closed ? fidelity::CurveMethod::ClosedForm : fidelity::CurveMethod::Quadrature;
        auto curve = fidelity::fidelity_curve(state, ts, method);
        for (size_t i = 0; i < ts.size(); ++i) {
            rep.rows.push_back({text, ts[i], curve.values[i],
                                std::string(fidelity::to_string(method))});
        }
    }
    return rep;
}

Report cmd_cheat(const RunConfig& c, std::vector<std::string>* warnings) {
    StateSpec state = parse(*c.state, warnings);
    hv::CheatOptions opts;
    opts.exec = exec_of(c);
    auto est = hv::cheat_run(state, c.samples, {c.seed, 0}, opts);
    double threshold = hv::threshold_fidelity(state);
    Report rep;
    rep.columns = {"state", "n_samples", "fidelity_mean", "fidelity_stderr", "threshold", "z_score"};
    rep.rows.push_back({state.descriptor(), c.samples, est.mean, est.std_error, threshold,
                        (est.mean - threshold) / est.std_error});
    rep.diagnostics["seed"] = c.seed;
    return rep;
}

template <class T>
void put(Json& j, const char* key, const std::optional<T>& v) {
    if (v) {
        j[key] = *v;
    }
}

}  // namespace

const std::vector<std::string>& command_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [k, v] : echo_keys()) {
            out.push_back(k);
        }
        return out;
    }();
    return names;
}

Json echo_config(const std::string& command, const RunConfig& config) {
    Json all = Json::object();
    put(all, "state", config.state);
    put(all, "t", config.t);
    put(all, "r", config.r);
    put(all, "c", config.c);
    put(all, "s", config.s);
    put(all, "t_min", config.t_min);
    put(all, "t_max", config.t_max);
    put(all, "t_step", config.t_step);
    put(all, "achieved", config.achieved);
    all["seed"] = config.seed;
    all["samples"] = config.samples;
    all["cutoff"] = config.cutoff;
    all["extent"] = config.extent;
    all["resolution"] = config.resolution;
    all["epsilon"] = config.epsilon;
    all["demo"] = config.demo;
    all["restarts"] = config.restarts;
    all["states"] = config.states;

    Json out = Json::object();
    for (const auto& key : keys_for(command)) {
        if (all.contains(key)) {
            out[key] = all[key];
        }
    }
    out["format"] = config.format;
    out["digits"] = config.digits;
    return out;
}

RunConfig config_from_json(const std::string& command, const Json& config) {
    if (!config.is_object()) {
        throw UsageError("config must be a JSON object");
    }
    const auto& keys = keys_for(command);
    std::set<std::string> allowed(keys.begin(), keys.end());
    allowed.insert("format");
    allowed.insert("digits");
    RunConfig c;
    try {
        for (const auto& [key, value] : config.items()) {
            if (!allowed.count(key)) {
                throw UsageError(fmt::format("config key '{}' does not apply to {}", key, command));
            }
            if (key == "state") c.state = value.get<std::string>();
            else if (key == "t") c.t = value.get<double>();
            else if (key == "r") c.r = value.get<double>();
            else if (key == "c") c.c = value.get<double>();
            else if (key == "s") c.s = value.get<double>();
            else if (key == "t_min") c.t_min = value.get<double>();
            else if (key == "t_max") c.t_max = value.get<double>();
            else if (key == "t_step") c.t_step = value.get<double>();
            else if (key == "achieved") c.achieved = value.get<double>();
            else if (key == "seed") c.seed = value.get<std::uint64_t>();
            else if (key == "samples") c.samples = value.get<std::int64_t>();
            else if (key == "cutoff") c.cutoff = value.get<int>();
            else if (key == "extent") c.extent = value.get<double>();
            else if (key == "resolution") c.resolution = value.get<double>();
            else if (key == "epsilon") c.epsilon = value.get<double>();
            else if (key == "demo") c.demo = value.get<bool>();
            else if (key == "restarts") c.restarts = value.get<int>();
            else if (key == "states") c.states = value.get<std::vector<std::string>>();
            else if (key == "format") c.format = value.get<std::string>();
            else if (key == "digits") c.digits = value.get<int>();
        }
    } catch (const nlohmann::json::exception& e) {
        throw UsageError(fmt::format("bad config value: {}", e.what()));
    }
    return c;
}

Report run_command(const std::string& command, const RunConfig& config,
                   std::vector<std::string>* warnings) {
    keys_for(command);
    RunConfig c = resolve(command, config);
    validate(command, c);
    Report rep;
    if (command == "fidelity") rep = cmd_fidelity(c, warnings);
    else if (command == "simulate") rep = cmd_simulate(c, warnings);
    else if (command == "resource") rep = cmd_resource(c);
    else if (command == "kick-scan") rep = cmd_kick_scan(c, warnings);
    else if (command == "verdict") rep = cmd_verdict(c, warnings);
    else if (command == "max-fidelity") rep = cmd_max_fidelity(c);
    else if (command == "table") rep = cmd_table(c, warnings);
    else rep = cmd_cheat(c, warnings);
    rep.command = command;
    rep.config = echo_config(command, c);
    return rep;
}

std::string render(const Report& report, const RunConfig& config) {
    return config.format == "json" ? render_json(report, config.digits)
                                   : render_csv(report, config.digits);
}

int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const UsageError*>(&e)) return kExitUsage;
    if (dynamic_cast<const DomainError*>(&e)) return kExitDomain;
    return kExitNumerical;
}

}  // namespace cvtele::cli
