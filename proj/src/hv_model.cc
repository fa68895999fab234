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

#include "cvtele/hv_model.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "cvtele/fidelity.hpp"
#include "cvtele/phase_space.hpp"

namespace cvtele::hv {
namespace {

using numerics::kPi;

constexpr double kProposalVariance = 0.75;  // 1.5 x the Q-function vacuum variance 1/2
constexpr double kBoundSafety = 1.1;
constexpr double kMinAcceptance = 0.01;

double round12(double x) {
    return std::round(x * 1e12) / 1e12;
}

double proposal_density(Complex beta) {
    return std::exp(-std::norm(beta) / (2.0 * kProposalVariance)) / (2.0 * kPi * kProposalVariance);
}

}  // namespace

std::vector<Complex> SpatialGrid::points() const {
    if (!(extent > 0.0) || !(resolution > 0.0)) {
        throw DomainError("spatial grid needs positive extent and resolution");
    }
    const auto per_axis = static_cast<long>(std::floor(2.0 * extent / resolution + 1e-9)) + 1;
    std::vector<Complex> out;
    out.reserve(static_cast<size_t>(per_axis * per_axis));
    for (long i = 0; i < per_axis; ++i) {
        for (long j = 0; j < per_axis; ++j) {
            out.emplace_back(round12(-extent + i * resolution), round12(-extent + j * resolution));
        }
    }
    return out;
}

std::vector<double> uniform_grid(double lo, double hi, double step) {
    if (!(step > 0.0) || !(hi >= lo)) {
        throw DomainError("uniform_grid needs step > 0 and hi >= lo");
    }
    const auto count = static_cast<long>(std::floor((hi - lo) / step + 1e-9)) + 1;
    std::vector<double> out(static_cast<size_t>(count));
    for (long i = 0; i < count; ++i) {
        out[static_cast<size_t>(i)] = round12(lo + i * step);
    }
    return out;
}

double kicked_quasidist(const StateSpec& state, double t, Complex nu) {
    return phase::s_ordered(state, nu, t);
}

KickReport min_kick_threshold(const StateSpec& state, std::span<const double> t_grid,
                              const SpatialGrid& grid, double epsilon,
                              const kernels::ExecConfig& exec) {
    if (!(epsilon > 0.0)) {
        throw DomainError("min_kick_threshold: epsilon must be positive");
    }
    if (t_grid.empty()) {
        throw DomainError("min_kick_threshold: empty t grid");
    }
    for (size_t i = 0; i < t_grid.size(); ++i) {
        if (!(t_grid[i] >= 0.0) || (i > 0 && !(t_grid[i] > t_grid[i - 1]))) {
            throw DomainError("min_kick_threshold: t grid must be nonnegative and strictly ascending");
        }
    }
    KickReport report;
    report.state = state.descriptor();
    report.t_grid.assign(t_grid.begin(), t_grid.end());
    report.epsilon = epsilon;
    report.spatial_grid = grid;
    const std::vector<Complex> points = grid.points();
    std::optional<double> t_star;
    for (double t : t_grid) {
        auto m = kernels::grid_min(
            points, [&](Complex nu) { return phase::s_ordered_series(state, nu, t); }, exec);
        if (!report.min_wigner_per_t.empty() && m.value < report.min_wigner_per_t.back()) {
            report.monotone = false;
        }
        report.min_wigner_per_t.push_back(m.value);
        if (!t_star && m.value >= -epsilon) {
            t_star = t;
        }
    }
    if (!t_star) {
        std::string what =
            fmt::format("no t in [{}, {}] makes the kicked {} nonnegative on the grid (min {:.3e})",
                        t_grid.front(), t_grid.back(), report.state, report.min_wigner_per_t.back());
        throw ThresholdNotFoundError(what, std::move(report));
    }
    report.t_star = *t_star;
    return report;
}

double threshold_fidelity(const StateSpec& state) {
    if (auto v = fidelity::fidelity_closed_form(state, 1.0)) {
        return *v;
    }
    return fidelity::fidelity_numeric(state, 1.0);
}

QSampler::QSampler(const StateSpec& state) : state_(state) {
    if (state.is_coherent()) {
        kind_ = Kind::Coherent;
        return;
    }
    if (auto n = state.fock_number()) {
        kind_ = Kind::Number;
        number_ = *n;
        return;
    }
    kind_ = Kind::Rejection;
    // sup Q / proposal: grid search, then compass refinement around the best node.
    const double reach = 2.0 * std::sqrt(static_cast<double>(state.cutoff())) + 5.0;
    auto ratio = [&](Complex b) { return phase::husimi_q(state, b) / proposal_density(b); };
    SpatialGrid coarse{reach, 0.05};
    Complex best_at{0.0, 0.0};
    double best = 0.0;
    for (const Complex& b : coarse.points()) {
        double r = ratio(b);
        if (r > best) {
            best = r;
            best_at = b;
        }
    }
    const Complex dirs[] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
    for (double h = 0.025; h > 1e-10;) {
        bool moved = false;
        for (const Complex& d : dirs) {
            double r = ratio(best_at + h * d);
            if (r > best) {
                best = r;
                best_at += h * d;
                moved = true;
                break;
            }
        }
        if (!moved) {
            h *= 0.5;
        }
    }
    bound_ = kBoundSafety * best;
    if (1.0 / bound_ < kMinAcceptance) {
        throw NumericalError(fmt::format(
            "Q-function rejection sampler for {} would accept {:.2e} of proposals (< 1%)",
            state.descriptor(), 1.0 / bound_));
    }
}

Complex QSampler::operator()(numerics::RandomStream& stream) const {
    switch (kind_) {
        case Kind::Coherent: {
            auto [x, y] = numerics::gaussian_pair(stream);
            return state_.as_coherent()->alpha + std::sqrt(0.5) * Complex{x, y};
        }
        case Kind::Number: {
            // |beta|^2 ~ Gamma(n + 1, 1) as a sum of unit exponentials; uniform phase.
            double radius2 = 0.0;
            for (int i = 0; i <= number_; ++i) {
                radius2 -= std::log(stream.uniform());
            }
            return std::polar(std::sqrt(radius2), 2.0 * kPi * stream.uniform());
        }
        case Kind::Rejection: {
            const double sd = std::sqrt(kProposalVariance);
            for (int attempt = 0; attempt < 100000; ++attempt) {
                auto [x, y] = numerics::gaussian_pair(stream);
                Complex b = sd * Complex{x, y};
                double ratio = phase::husimi_q(state_, b) / proposal_density(b);
                if (ratio > bound_) {
                    throw NumericalError("Q-function rejection bound violated; sampler would be biased");
                }
                if (stream.uniform() * bound_ < ratio) {
                    return b;
                }
            }
            throw NumericalError("Q-function rejection sampler failed to accept in 1e5 proposals");
        }
    }
    return {};
}

sim::FidelityEstimate cheat_run(const StateSpec& state, std::int64_t n, numerics::StreamKey seed,
                                const CheatOptions& options) {
    if (n < 2) {
        throw DomainError("cheat_run needs at least 2 samples");
    }
    if (options.block_size < 1) {
        throw DomainError("cheat_run block size must be positive");
    }
    const QSampler sampler(state);
    const std::int64_t blocks = (n + options.block_size - 1) / options.block_size;
    auto parts = kernels::map_blocks<kernels::Moments>(
        static_cast<size_t>(blocks),
        [&](size_t b) {
            numerics::RandomStream stream(numerics::derive_stream(seed, b));
            const std::int64_t begin = static_cast<std::int64_t>(b) * options.block_size;
            const std::int64_t end = std::min(n, begin + options.block_size);
            kernels::Moments m;
            for (std::int64_t i = begin; i < end; ++i) {
                m.add(kPi * phase::wigner(state, sampler(stream)));
            }
            return m;
        },
        options.exec);
    kernels::Moments total;
    for (const auto& p : parts) {
        total.merge(p);
    }
    return {total.mean, total.stderr_of_mean()};
}

bool is_gaussian(const StateSpec& state) {
    if (state.is_coherent()) {
        return true;
    }
    // A finite Fock superposition has infinite-support Gaussian form only for the vacuum.
    auto n = state.fock_number();
    return n && *n == 0;
}

const char* to_string(VerdictKind k) {
    switch (k) {
        case VerdictKind::ClassicallyExplicable:
            return "ClassicallyExplicable";
        case VerdictKind::BeyondPhaseSpaceModel:
            return "BeyondPhaseSpaceModel";
        case VerdictKind::GoldStandard:
            return "GoldStandard";
    }
    return "?";
}

Verdict verdict(const StateSpec& state, double achieved) {
    if (!(achieved >= 0.0 && achieved <= 1.0)) {
        throw DomainError(fmt::format("achieved fidelity {} outside [0, 1]", achieved));
    }
    Verdict v;
    v.achieved = achieved;
    v.threshold = threshold_fidelity(state);
    if (is_gaussian(state)) {
        v.kind = VerdictKind::ClassicallyExplicable;
    } else if (achieved >= kGoldStandard) {
        v.kind = VerdictKind::GoldStandard;
    } else if (achieved > v.threshold) {
        v.kind = VerdictKind::BeyondPhaseSpaceModel;
    } else {
        v.kind = VerdictKind::ClassicallyExplicable;
    }
    return v;
}

}  // namespace cvtele::hv
