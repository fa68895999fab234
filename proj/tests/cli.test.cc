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

#include <cmath>

#include <gtest/gtest.h>

#include "cvtele/cli/commands.hpp"
#include "cvtele/cli/output.hpp"
#include "cvtele/cli/state_parser.hpp"
#include "cvtele/errors.hpp"

using namespace cvtele;
using namespace cvtele::cli;

namespace {

RunConfig with_state(const std::string& s) {
    RunConfig c;
    c.state = s;
    return c;
}

double real_at(const Report& r, size_t row, const std::string& column) {
    for (size_t i = 0; i < r.columns.size(); ++i) {
        if (r.columns[i] == column) {
            return std::get<double>(r.rows[row][i]);
        }
    }
    throw std::out_of_range(column);
}

template <class T>
T cell_at(const Report& r, size_t row, const std::string& column) {
    for (size_t i = 0; i < r.columns.size(); ++i) {
        if (r.columns[i] == column) {
            return std::get<T>(r.rows[row][i]);
        }
    }
    throw std::out_of_range(column);
}

size_t syntax_position(const std::string& text) {
    try {
        parse_state(text);
    } catch (const SyntaxError& e) {
        return e.position();
    }
    return std::string::npos;
}

}  // namespace

TEST(StateParser, examples) {
    auto f = parse_state("fock:1");
    ASSERT_EQ(f.parsed.fock_number(), 1);
    ASSERT_EQ(f.source, "fock:1");
    ASSERT_TRUE(f.warnings.empty());

    auto c = parse_state("coh:0.5,-0.25");
    ASSERT_EQ(c.parsed.as_coherent()->alpha, Complex(0.5, -0.25));
    ASSERT_EQ(parse_state("coh:2").parsed.as_coherent()->alpha, Complex(2.0, 0.0));

    auto v = parse_state("vec:1;1");
    ASSERT_TRUE(v.parsed.is_superposition01());
    ASSERT_EQ(v.warnings.size(), 1u);

    ASSERT_TRUE(parse_state("superpos01").parsed.is_superposition01());
}

TEST(StateParser, complex_elements) {
    auto v = parse_state("vec:0.6;0-0.8i");
    const auto& c = v.parsed.as_fock_vector()->coeffs;
    ASSERT_EQ(c[0], Complex(0.6, 0.0));
    ASSERT_EQ(c[1], Complex(0.0, -0.8));
    ASSERT_TRUE(v.warnings.empty());
    auto w = parse_state("vec:0.5+0.5i;-0.5+0.5i");
    ASSERT_NEAR(std::abs(w.parsed.as_fock_vector()->coeffs[1] - Complex(-0.5, 0.5)), 0.0, 1e-15);
    ASSERT_EQ(parse_state("vec:1e-1;0").parsed.fock_number(), 0);
}

TEST(StateParser, errors_carry_positions) {
    ASSERT_EQ(syntax_position("cat:1"), 0u);
    ASSERT_EQ(syntax_position("coh:"), 4u);
    ASSERT_EQ(syntax_position("coh:1,"), 6u);
    ASSERT_EQ(syntax_position("coh:1x"), 5u);
    ASSERT_EQ(syntax_position("fock:-1"), 5u);
    ASSERT_EQ(syntax_position("fock:51"), 5u);
    ASSERT_EQ(syntax_position("vec:"), 4u);
    ASSERT_EQ(syntax_position("vec:1;"), 6u);
    ASSERT_EQ(syntax_position("vec:1+2"), 7u);
    ASSERT_EQ(syntax_position("vec:1+-2i"), 6u);
    ASSERT_EQ(syntax_position("superpos01x"), 10u);
    ASSERT_EQ(syntax_position("vec:0;0"), 4u);
    ASSERT_NE(syntax_position("fock:50"), 0u);
    try {
        parse_state("fock:x");
    } catch (const SyntaxError& e) {
        ASSERT_NE(std::string(e.what()).find("position 5"), std::string::npos);
        ASSERT_NE(std::string(e.what()).find("photon number"), std::string::npos);
    }
}

TEST(StateParser, descriptor_round_trip) {
    for (const char* text : {"coh:0.5,-0.25", "fock:7", "superpos01", "vec:0.6;0+0.8i", "vec:0.5;0.5-0.5i;0;-0.5"}) {
        auto s = parse_state(text).parsed;
        auto again = parse_state(s.descriptor()).parsed;
        ASSERT_EQ(again.descriptor(), s.descriptor());
    }
}

TEST(Output, format_real) {
    ASSERT_EQ(format_real(10.0 / 27.0, 12), "0.370370370370");
    ASSERT_EQ(format_real(0.5, 3), "0.500");
    ASSERT_EQ(format_real(-1e-20, 4), "0.0000");
    ASSERT_EQ(format_real(0.125, 2), "0.12");  // exact tie, to even
    ASSERT_EQ(format_real(0.375, 2), "0.38");
    ASSERT_EQ(format_real(2.5, 0), "2");
    ASSERT_EQ(format_real(std::nan(""), 3), "nan");
}

TEST(Output, csv_layout) {
    Report r;
    r.command = "demo";
    r.columns = {"a", "b", "c", "d"};
    r.rows.push_back({1.5, std::int64_t{3}, std::string("x,y"), std::monostate{}});
    r.config["k"] = 1;
    std::string csv = render_csv(r, 2);
    ASSERT_EQ(csv,
              "# cvtele 1.0.0 csv-schema 1 command demo columns a,b,c,d\n"
              "# config {\"k\":1}\n"
              "a,b,c,d\n"
              "1.50,3,\"x,y\",\n");
}

TEST(Output, json_layout) {
    Report r;
    r.command = "demo";
    r.columns = {"a", "flag"};
    r.rows.push_back({1.0 / 3.0, true});
    r.diagnostics["z"] = 0.123456;
    auto j = Json::parse(render_json(r, 3));
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    ASSERT_EQ(keys, (std::vector<std::string>{"command", "config", "results", "diagnostics", "version"}));
    ASSERT_EQ(j["results"][0]["a"].get<double>(), 0.333);
    ASSERT_EQ(j["results"][0]["flag"].get<bool>(), true);
    ASSERT_EQ(j["diagnostics"]["z"].get<double>(), 0.123);
    ASSERT_EQ(j["version"], kVersion);
}

TEST(Commands, fidelity_examples) {
    auto c = with_state("fock:1");
    c.t = 1.0;
    auto r = run_command("fidelity", c);
    ASSERT_EQ(r.columns, (std::vector<std::string>{"t", "closed_form", "quadrature", "abs_difference"}));
    ASSERT_EQ(format_real(real_at(r, 0, "closed_form"), 12), "0.370370370370");
    ASSERT_EQ(format_real(real_at(r, 0, "quadrature"), 12), "0.370370370370");

    auto c2 = with_state("coh:0");
    c2.t = 2.0;
    ASSERT_EQ(real_at(run_command("fidelity", c2), 0, "closed_form"), 0.5);

    auto c3 = with_state("superpos01");
    c3.t = 0.0;
    ASSERT_EQ(real_at(run_command("fidelity", c3), 0, "closed_form"), 1.0);

    auto c4 = with_state("vec:1;0;1");
    c4.r = 0.0;
    auto r4 = run_command("fidelity", c4);
    ASSERT_TRUE(std::holds_alternative<std::monostate>(r4.rows[0][1]));
    ASSERT_EQ(real_at(r4, 0, "t"), 2.0);

    auto c5 = with_state("fock:2");
    c5.t_step = 0.5;
    auto r5 = run_command("fidelity", c5);
    ASSERT_EQ(r5.rows.size(), 9u);
    ASSERT_EQ(r5.config["t_max"].get<double>(), 4.0);
}

TEST(Commands, simulate) {
    auto c = with_state("coh:1");
    c.r = 0.0;
    c.samples = 1'000'000;
    c.seed = 7;
    auto r = run_command("simulate", c);
    double mean = real_at(r, 0, "fidelity_mean");
    double se = real_at(r, 0, "fidelity_stderr");
    ASSERT_LT(std::abs(mean - 0.5), 3 * se);
    ASSERT_NEAR(real_at(r, 0, "z_score"), (mean - 0.5) / se, 1e-12);
    ASSERT_EQ(r.diagnostics["seed"].get<std::uint64_t>(), 7u);
    ASSERT_TRUE(r.diagnostics["g_check"].contains("max_abs_z"));
    auto again = run_command("simulate", c);
    ASSERT_EQ(render(again, c), render(r, c));
}

TEST(Commands, simulate_rejects_non_coherent) {
    auto c = with_state("fock:1");
    c.t = 1.0;
    try {
        run_command("simulate", c);
        FAIL();
    } catch (const std::exception& e) {
        ASSERT_EQ(exit_code_for(e), kExitDomain);
        ASSERT_NE(std::string(e.what()).find("cvtele cheat"), std::string::npos);
    }
}

TEST(Commands, resource_examples) {
    RunConfig a;
    a.r = 0.5;
    auto ra = run_command("resource", a);
    ASSERT_TRUE(cell_at<bool>(ra, 0, "pure"));
    ASSERT_TRUE(cell_at<bool>(ra, 0, "entangled"));
    ASSERT_EQ(format_real(real_at(ra, 0, "t"), 6), "0.735759");
    ASSERT_EQ(format_real(real_at(ra, 0, "f_coherent"), 6), "0.731059");

    RunConfig b;
    b.c = 0.8;
    b.s = 0.1;
    auto rb = run_command("resource", b);
    ASSERT_TRUE(cell_at<bool>(rb, 0, "separable"));
    ASSERT_FALSE(cell_at<bool>(rb, 0, "entangled"));

    RunConfig c;
    c.c = 2.0;
    c.s = 0.5;
    auto rc = run_command("resource", c);
    ASSERT_FALSE(cell_at<bool>(rc, 0, "valid"));
    ASSERT_EQ(cell_at<std::string>(rc, 0, "violation"), "c <= sqrt(1 + s^2)");
}

TEST(Commands, kick_scan_and_verdict) {
    auto k = run_command("kick-scan", with_state("fock:1"));
    ASSERT_EQ(k.diagnostics["t_star"].get<double>(), 1.0);
    ASSERT_EQ(k.rows.size(), 201u);

    auto v = with_state("superpos01");
    v.achieved = 0.70;
    ASSERT_EQ(cell_at<std::string>(run_command("verdict", v), 0, "verdict"), "GoldStandard");
    auto w = with_state("coh:1");
    w.achieved = 0.64;
    ASSERT_EQ(cell_at<std::string>(run_command("verdict", w), 0, "verdict"), "ClassicallyExplicable");

    RunConfig demo;
    demo.demo = true;
    auto d = run_command("verdict", demo);
    ASSERT_EQ(d.rows.size(), 3u);
    for (size_t i = 0; i < 3; ++i) {
        ASSERT_EQ(cell_at<std::string>(d, i, "verdict"), "ClassicallyExplicable");
    }
}

TEST(Commands, usage_errors) {
    auto expect_usage = [](const std::string& cmd, const RunConfig& c) {
        try {
            run_command(cmd, c);
            FAIL() << cmd;
        } catch (const std::exception& e) {
            ASSERT_EQ(exit_code_for(e), kExitUsage) << e.what();
        }
    };
    auto both = with_state("coh:0");
    both.t = 1.0;
    both.r = 0.1;
    expect_usage("fidelity", both);
    expect_usage("fidelity", with_state("coh:0"));
    auto few = with_state("coh:0");
    few.t = 1.0;
    few.samples = 99;
    expect_usage("simulate", few);
    auto bad_state = with_state("fock:99");
    bad_state.t = 1.0;
    expect_usage("fidelity", bad_state);
    auto bad_f = with_state("fock:1");
    bad_f.achieved = 1.2;
    expect_usage("verdict", bad_f);
    RunConfig r;
    r.c = 1.0;
    expect_usage("resource", r);
    expect_usage("nonsense", RunConfig{});
    auto fmt_bad = with_state("coh:0");
    fmt_bad.t = 1.0;
    fmt_bad.format = "xml";
    expect_usage("fidelity", fmt_bad);
}

TEST(Commands, exit_code_mapping) {
    ASSERT_EQ(exit_code_for(UsageError("x")), kExitUsage);
    ASSERT_EQ(exit_code_for(DomainError("x")), kExitDomain);
    ASSERT_EQ(exit_code_for(UnsupportedSamplerError("x")), kExitDomain);
    ASSERT_EQ(exit_code_for(NumericalError("x")), kExitNumerical);
    ASSERT_EQ(exit_code_for(std::runtime_error("x")), kExitNumerical);
}

TEST(Commands, json_round_trip) {
    auto c = with_state("vec:1;0+1i");
    c.seed = 11;
    c.samples = 5000;
    c.format = "json";
    c.digits = 9;
    auto first = run_command("cheat", c);
    std::string text = render(first, c);
    auto doc = Json::parse(text);
    auto replay_cfg = config_from_json(doc["command"], doc["config"]);
    replay_cfg.workers = 3;
    auto second = run_command(doc["command"], replay_cfg);
    ASSERT_EQ(render(second, replay_cfg), text);

    for (const auto& cmd : command_names()) {
        RunConfig defaults;
        defaults.state = "fock:1";
        defaults.t = 1.0;
        auto echo = echo_config(cmd, defaults);
        ASSERT_EQ(echo_config(cmd, config_from_json(cmd, echo)), echo) << cmd;
    }
    ASSERT_THROW(config_from_json("resource", Json{{"state", "fock:1"}}), UsageError);
    ASSERT_THROW(config_from_json("fidelity", Json{{"t", "one"}}), UsageError);
}

TEST(Commands, table_and_max_fidelity) {
    RunConfig t;
    t.states = {"coh:0", "vec:1;1;1"};
    t.t_step = 1.0;
    auto r = run_command("table", t);
    ASSERT_EQ(r.rows.size(), 10u);
    ASSERT_EQ(cell_at<std::string>(r, 0, "method"), "closed_form");
    ASSERT_EQ(cell_at<std::string>(r, 9, "method"), "quadrature");

    RunConfig m;
    m.t = 1.0;
    m.cutoff = 8;
    auto mf = run_command("max-fidelity", m);
    ASSERT_NEAR(real_at(mf, 0, "value"), 2.0 / 3.0, 1e-6);
    ASSERT_EQ(mf.diagnostics["coefficients"].size(), 8u);
}
