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

#include "cvtele/resource.hpp"

#include <cmath>

#include <fmt/format.h>

#include "cvtele/errors.hpp"
#include "cvtele/phase_space.hpp"

namespace cvtele::resource {
namespace {

using numerics::kPi;

// Width matching exp(-2|nu|^2), the envelope of every supported Wigner function.
const double kWignerWidth = 1.0 / std::sqrt(2.0);

}  // namespace

ResourceParams from_squeeze(double r) {
    if (!std::isfinite(r)) {
        throw DomainError("squeeze parameter must be finite");
    }
    return ResourceParams{std::cosh(2.0 * r), std::sinh(2.0 * r), r};
}

ResourceParams resource_for_t(double t) {
    if (!(t > 0.0) || !std::isfinite(t)) {
        throw DomainError(fmt::format("teleportation parameter t must be finite and > 0 (got {})", t));
    }
    if (t <= 2.0) {
        return from_squeeze(-0.5 * std::log(0.5 * t));
    }
    return ResourceParams{2.0 / t, 0.0, std::nullopt};
}

const char* to_string(Correlation c) {
    switch (c) {
        case Correlation::RightSort:
            return "right_sort";
        case Correlation::Boundary:
            return "boundary";
        case Correlation::WrongSortOrSeparable:
            return "wrong_sort_or_separable";
    }
    return "?";
}

ResourceClass classify(const ResourceParams& p, const ClassifyTolerance& tol) {
    ResourceClass out;
    if (!std::isfinite(p.c) || !std::isfinite(p.s)) {
        out.violation = "c and s must be finite";
        return out;
    }
    const double purity_gap = p.c * p.c - (1.0 + p.s * p.s);
    if (!(std::abs(p.s) < p.c)) {
        out.violation = "|s| < c";
    } else if (purity_gap > tol.purity) {
        out.violation = "c <= sqrt(1 + s^2)";
    }
    out.valid = out.violation.empty();
    out.pure = out.valid && std::abs(purity_gap) <= tol.purity;
    out.separable = p.c <= 1.0 - std::abs(p.s) + tol.separability;

    const double sum = p.c + p.s;
    if (sum <= 0.0) {
        out.correlation = Correlation::WrongSortOrSeparable;
    } else {
        // t = 2 exactly when c + s = 1.
        if (std::abs(sum - 1.0) <= tol.separability) {
            out.correlation = Correlation::Boundary;
        } else if (sum > 1.0) {
            out.correlation = Correlation::RightSort;
        } else {
            out.correlation = Correlation::WrongSortOrSeparable;
        }
    }
    return out;
}

void require_valid(const ResourceParams& params, const ClassifyTolerance& tol) {
    ResourceClass cls = classify(params, tol);
    if (!cls.valid) {
        throw DomainError(fmt::format("invalid resource (c = {}, s = {}): violates {}", params.c,
                                      params.s, cls.violation));
    }
}

double wigner_ab(const ResourceParams& p, Complex alpha, Complex beta) {
    require_valid(p);
    const double norm = 4.0 * (p.c * p.c - p.s * p.s) / (kPi * kPi);
    const double quad = -2.0 * p.c * (std::norm(alpha) + std::norm(beta)) -
                        4.0 * p.s * (alpha * beta).real();
    return norm * std::exp(quad);
}

double g_distribution(const ResourceParams& p, Complex nu) {
    const double sum = p.c + p.s;
    if (!(sum > 0.0)) {
        throw DomainError("G(nu) requires c + s > 0");
    }
    return sum / kPi * std::exp(-sum * std::norm(nu));
}

double g_tilde(const ResourceParams& p, Complex nu) {
    if (!(p.c + p.s > 0.0)) {
        throw DomainError("G~(nu) requires c + s > 0");
    }
    return std::exp(-0.5 * p.t() * std::norm(nu));
}

double i_integral_bound(double t) {
    return 1.0 / (1.0 + 0.5 * t);
}

WignerSamples wigner_samples(const StateSpec& state, int order, bool time_reversed) {
    // Coherent envelopes sit at alpha; Fock-vector envelopes at the origin.
    Complex center = state.is_coherent() ? state.as_coherent()->alpha : Complex{};
    if (time_reversed) {
        center = -std::conj(center);
    }
    numerics::PlaneRule rule =
        numerics::plane_rule(numerics::QuadratureSpec::gauss_hermite(order, kWignerWidth, center));
    WignerSamples out;
    out.nodes = rule.nodes;
    out.weighted.resize(rule.size());
    for (size_t i = 0; i < rule.size(); ++i) {
        Complex at = time_reversed ? -std::conj(rule.nodes[i]) : rule.nodes[i];
        out.weighted[i] = rule.weights[i] * phase::wigner(state, at);
    }
    return out;
}

double gaussian_overlap(const WignerSamples& a, const WignerSamples& b, double coef,
                        const kernels::ExecConfig& exec) {
    return kernels::gaussian_pair_sum(a.nodes, a.weighted, b.nodes, b.weighted, coef, exec);
}

double i_integral(const StateSpec& a, const StateSpec& b, double t, const PairQuadrature& quad) {
    if (!(t >= 0.0) || !std::isfinite(t)) {
        throw DomainError("i_integral requires finite t >= 0");
    }
    return gaussian_overlap(wigner_samples(a, quad.order), wigner_samples(b, quad.order), 0.5 * t,
                            quad.exec);
}

double separable_fidelity(const StateSpec& a, const StateSpec& b, const PairQuadrature& quad) {
    return gaussian_overlap(wigner_samples(a, quad.order, true), wigner_samples(b, quad.order), 1.0,
                            quad.exec);
}

}  // namespace cvtele::resource
