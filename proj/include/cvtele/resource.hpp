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

#ifndef CVTELE_RESOURCE_HPP
#define CVTELE_RESOURCE_HPP

#include <optional>
#include <string>
#include <vector>

#include "cvtele/kernels.hpp"
#include "cvtele/numerics.hpp"
#include "cvtele/state.hpp"

namespace cvtele::resource {

/// Two-mode Gaussian resource
///   W_AB = 4(c^2 - s^2)/pi^2 exp(-2c(|a|^2 + |b|^2) - 2s(ab + a^* b^*)).
struct ResourceParams {
    double c = 1.0;
    double s = 0.0;
    std::optional<double> squeeze;

    /// Teleportation parameter t = 2 / (c + s); the width of G.
    double t() const { return 2.0 / (c + s); }
};

/// Pure two-mode squeezed state: c = cosh 2r, s = sinh 2r, t = 2 e^{-2r}.
ResourceParams from_squeeze(double r);

/// Resource with teleportation parameter t: the pure two-mode squeezed state
/// with e^{-2r} = t/2 for t <= 2, otherwise the separable (c, s) = (2/t, 0).
ResourceParams resource_for_t(double t);

enum class Correlation {
    RightSort,             // t < 2
    Boundary,              // t = 2
    WrongSortOrSeparable,  // t > 2, or c + s <= 0
};

const char* to_string(Correlation c);

struct ResourceClass {
    bool valid = false;
    bool pure = false;
    bool separable = false;
    Correlation correlation = Correlation::WrongSortOrSeparable;
    // Empty when valid; otherwise the violated inequality.
    std::string violation;
};

struct ClassifyTolerance {
    // Slack on c^2 - (1 + s^2) for validity and purity.
    double purity = 1e-4;
    // Slack on c - (1 - |s|) for separability.
    double separability = 1e-12;
};

/// Classifies any (c, s); invalid parameters are reported, not rejected.
ResourceClass classify(const ResourceParams& params, const ClassifyTolerance& tol = {});

/// Throws DomainError naming the violated inequality.
void require_valid(const ResourceParams& params, const ClassifyTolerance& tol = {});

double wigner_ab(const ResourceParams& params, Complex alpha, Complex beta);

/// Distribution of the b + a^dag outcome: ((c+s)/pi) exp(-(c+s)|nu|^2).
double g_distribution(const ResourceParams& params, Complex nu);

/// Fourier transform of G under the kernel exp(nu mu^* - nu^* mu): exp(-t|nu|^2/2).
double g_tilde(const ResourceParams& params, Complex nu);

/// Upper bound (1 + t/2)^{-1} on i_integral, the top eigenvalue of
/// (1+t/2)^{-1} [(1-t/2)/(1+t/2)]^{d^dag d}.
double i_integral_bound(double t);

struct PairQuadrature {
    // Gauss-Hermite nodes per axis of each two-dimensional factor.
    int order = 24;
    kernels::ExecConfig exec{};
};

/// Wigner function sampled on a Gauss-Hermite rule matched to its Gaussian
/// envelope: `weighted[i]` = weight_i * W(nodes[i]). With `time_reversed`
/// the values are W(-conj(nu)) on the mirrored rule.
struct WignerSamples {
    std::vector<Complex> nodes;
    std::vector<double> weighted;
};
WignerSamples wigner_samples(const StateSpec& state, int order, bool time_reversed = false);

/// Integral of exp(-coef |alpha - beta|^2) A(alpha) B(beta) over both planes.
double gaussian_overlap(const WignerSamples& a, const WignerSamples& b, double coef,
                        const kernels::ExecConfig& exec = {});

/// I = integral of exp(-t|alpha - beta|^2 / 2) W_A(alpha) W_B(beta) for a product state.
double i_integral(const StateSpec& a, const StateSpec& b, double t, const PairQuadrature& quad = {});

/// Coherent-input fidelity with the product resource a (x) b:
/// integral of exp(-|alpha - beta|^2) W_A(-alpha^*) W_B(beta).
double separable_fidelity(const StateSpec& a, const StateSpec& b, const PairQuadrature& quad = {});

}  // namespace cvtele::resource

#endif
