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

#ifndef CVTELE_TELEPORT_SIM_HPP
#define CVTELE_TELEPORT_SIM_HPP

#include <array>
#include <cstdint>
#include <span>
#include <utility>

#include "cvtele/kernels.hpp"
#include "cvtele/random.hpp"
#include "cvtele/resource.hpp"
#include "cvtele/state.hpp"

namespace cvtele::sim {

using numerics::RandomStream;
using numerics::StreamKey;
using resource::ResourceParams;

/// Draws (alpha, beta) from W_AB. The x quadratures have covariance
/// [[c, -s], [-s, c]] / (4(c^2 - s^2)); the p quadratures the same with +s.
class ResourceSampler {
   public:
    explicit ResourceSampler(const ResourceParams& params);

    std::pair<Complex, Complex> operator()(RandomStream& stream) const;

    double marginal_variance() const { return sigma_ * sigma_; }
    double cross_covariance() const { return sigma_ * sigma_ * rho_; }

   private:
    double sigma_;
    double rho_;
    double rho_perp_;
};

std::pair<Complex, Complex> sample_resource(const ResourceParams& params, RandomStream& stream);

/// Draws nu from the input Wigner function. Only coherent states have an exact
/// sampler here; Fock vectors raise UnsupportedSamplerError.
Complex sample_input(const StateSpec& state, RandomStream& stream);

struct RunOptions {
    kernels::ExecConfig exec{};
    std::int64_t block_size = 1 << 14;
    // Evaluate W_rho(nu) and W_AB(alpha, beta) at every sample and record the minimum.
    bool check_densities = false;
};

struct TeleportRunResult {
    std::int64_t n_samples = 0;
    double fidelity_mean = 0.0;
    double fidelity_stderr = 0.0;
    Complex xi_mean;
    std::array<double, 2> xi_quadrature_variances{};
    Complex g_mean;  // mean of beta + alpha^*
    std::array<double, 2> g_quadrature_variances{};
    Complex output_mean;
    std::array<double, 2> output_quadrature_variances{};
    // Smallest sampled density value; NaN unless RunOptions::check_densities.
    double min_density = 0.0;
    StreamKey seed;
    ResourceParams params;
    StateSpec state;
};

/// Monte Carlo run of the protocol: nu ~ W_rho, (alpha, beta) ~ W_AB,
/// xi = nu + alpha^*, beta_out = beta + xi. The result depends only on
/// (state, params, n, seed, block_size), never on the worker count.
TeleportRunResult run_protocol(const StateSpec& state, const ResourceParams& params, std::int64_t n,
                               StreamKey seed, const RunOptions& options = {});

struct FidelityEstimate {
    double mean = 0.0;
    double std_error = 0.0;
};

/// Sample mean of pi * W_rho(beta_out); each term lies in [-2, 2].
FidelityEstimate estimate_fidelity(std::span<const Complex> beta_out, const StateSpec& state);

/// Normalized residuals (z-scores) of run moments against their Gaussian predictions.
struct GCheckReport {
    double expected_g_variance = 0.0;   // t / 4
    double expected_xi_variance = 0.0;  // 1/4 + c / (4(c^2 - s^2))
    double expected_output_variance = 0.0;
    std::array<double, 2> g_variance_z{};
    std::array<double, 2> xi_variance_z{};
    std::array<double, 2> xi_mean_z{};
    std::array<double, 2> output_variance_z{};
    std::array<double, 2> output_mean_z{};

    double max_abs_z() const;
};

GCheckReport empirical_g_check(const TeleportRunResult& result);

}  // namespace cvtele::sim

#endif
