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

#include "cvtele/teleport_sim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cvtele/errors.hpp"
#include "cvtele/phase_space.hpp"

namespace cvtele::sim {
namespace {

using kernels::Moments;
using numerics::kPi;

struct BlockStats {
    Moments fidelity;
    Moments xi_re, xi_im;
    Moments g_re, g_im;
    Moments out_re, out_im;
    double min_density = std::numeric_limits<double>::infinity();

    void merge(const BlockStats& o) {
        fidelity.merge(o.fidelity);
        xi_re.merge(o.xi_re);
        xi_im.merge(o.xi_im);
        g_re.merge(o.g_re);
        g_im.merge(o.g_im);
        out_re.merge(o.out_re);
        out_im.merge(o.out_im);
        min_density = std::min(min_density, o.min_density);
    }
};

}  // namespace

ResourceSampler::ResourceSampler(const ResourceParams& params) {
    resource::require_valid(params);
    const double det = params.c * params.c - params.s * params.s;
    sigma_ = std::sqrt(params.c / (4.0 * det));
    rho_ = -params.s / params.c;
    rho_perp_ = std::sqrt(std::max(0.0, 1.0 - rho_ * rho_));
}

std::pair<Complex, Complex> ResourceSampler::operator()(RandomStream& stream) const {
    auto [zx1, zx2] = numerics::gaussian_pair(stream);
    auto [zp1, zp2] = numerics::gaussian_pair(stream);
    const double x1 = sigma_ * zx1;
    const double x2 = sigma_ * (rho_ * zx1 + rho_perp_ * zx2);
    // The p block has the opposite cross-correlation.
    const double p1 = sigma_ * zp1;
    const double p2 = sigma_ * (-rho_ * zp1 + rho_perp_ * zp2);
    return {Complex{x1, p1}, Complex{x2, p2}};
}

std::pair<Complex, Complex> sample_resource(const ResourceParams& params, RandomStream& stream) {
    return ResourceSampler(params)(stream);
}

Complex sample_input(const StateSpec& state, RandomStream& stream) {
    const Coherent* coh = state.as_coherent();
    if (coh == nullptr) {
        throw UnsupportedSamplerError(
            "state " + state.descriptor() +
            " has a Wigner function with negative values and no exact phase-space sampler; "
            "use the kick model (cheat) path instead");
    }
    auto [zx, zp] = numerics::gaussian_pair(stream);
    return coh->alpha + 0.5 * Complex{zx, zp};
}

TeleportRunResult run_protocol(const StateSpec& state, const ResourceParams& params, std::int64_t n,
                               StreamKey seed, const RunOptions& options) {
    if (n < 2) {
        throw DomainError("run_protocol needs at least 2 samples");
    }
    if (options.block_size < 1) {
        throw DomainError("run_protocol block size must be positive");
    }
    if (!(params.c + params.s > 0.0)) {
        throw DomainError("run_protocol requires c + s > 0");
    }
    if (!state.is_coherent()) {
        // Fail before spawning work; sample_input would raise the same error per block.
        RandomStream probe(seed);
        sample_input(state, probe);
    }
    const ResourceSampler resource_sampler(params);
    const std::int64_t blocks = (n + options.block_size - 1) / options.block_size;

    auto run_block = [&](std::size_t b) {
        RandomStream stream(numerics::derive_stream(seed, b));
        const std::int64_t begin = static_cast<std::int64_t>(b) * options.block_size;
        const std::int64_t end = std::min(n, begin + options.block_size);
        BlockStats st;
        for (std::int64_t i = begin; i < end; ++i) {
            const Complex nu = sample_input(state, stream);
            const auto [alpha, beta] = resource_sampler(stream);
            const Complex xi = nu + std::conj(alpha);
            const Complex g = beta + std::conj(alpha);
            const Complex beta_out = beta + xi;
            st.fidelity.add(kPi * phase::wigner(state, beta_out));
            st.xi_re.add(xi.real());
            st.xi_im.add(xi.imag());
            st.g_re.add(g.real());
            st.g_im.add(g.imag());
            st.out_re.add(beta_out.real());
            st.out_im.add(beta_out.imag());
            if (options.check_densities) {
                st.min_density = std::min({st.min_density, phase::wigner(state, nu),
                                           resource::wigner_ab(params, alpha, beta)});
            }
        }
        return st;
    };
    std::vector<BlockStats> parts =
        kernels::map_blocks<BlockStats>(static_cast<std::size_t>(blocks), run_block, options.exec);
    BlockStats total;
    for (const auto& p : parts) {
        total.merge(p);
    }

    TeleportRunResult r{.n_samples = n,
                        .fidelity_mean = total.fidelity.mean,
                        .fidelity_stderr = total.fidelity.stderr_of_mean(),
                        .xi_mean = {total.xi_re.mean, total.xi_im.mean},
                        .xi_quadrature_variances = {total.xi_re.variance(), total.xi_im.variance()},
                        .g_mean = {total.g_re.mean, total.g_im.mean},
                        .g_quadrature_variances = {total.g_re.variance(), total.g_im.variance()},
                        .output_mean = {total.out_re.mean, total.out_im.mean},
                        .output_quadrature_variances = {total.out_re.variance(),
                                                        total.out_im.variance()},
                        .min_density = options.check_densities
                                           ? total.min_density
                                           : std::numeric_limits<double>::quiet_NaN(),
                        .seed = seed,
                        .params = params,
                        .state = state};
    return r;
}

FidelityEstimate estimate_fidelity(std::span<const Complex> beta_out, const StateSpec& state) {
    if (beta_out.size() < 2) {
        throw DomainError("estimate_fidelity needs at least 2 samples");
    }
    Moments m;
    for (const Complex& b : beta_out) {
        m.add(kPi * phase::wigner(state, b));
    }
    return {m.mean, m.stderr_of_mean()};
}

double GCheckReport::max_abs_z() const {
    double z = 0.0;
    for (const auto* arr : {&g_variance_z, &xi_variance_z, &xi_mean_z, &output_variance_z, &output_mean_z}) {
        for (double v : *arr) {
            z = std::max(z, std::abs(v));
        }
    }
    return z;
}

GCheckReport empirical_g_check(const TeleportRunResult& r) {
    const auto& p = r.params;
    const double n = static_cast<double>(r.n_samples);
    const double det = p.c * p.c - p.s * p.s;
    GCheckReport out;
    out.expected_g_variance = p.t() / 4.0;
    out.expected_xi_variance = 0.25 + p.c / (4.0 * det);
    out.expected_output_variance = 0.25 + p.t() / 4.0;
    const Complex alpha = r.state.mean_amplitude();

    // Gaussian sample variance has standard error var * sqrt(2 / (n - 1)).
    auto var_z = [&](double observed, double expected) {
        return (observed - expected) / (expected * std::sqrt(2.0 / (n - 1.0)));
    };
    auto mean_z = [&](double observed, double expected, double variance) {
        return (observed - expected) / std::sqrt(variance / n);
    };
    for (int q = 0; q < 2; ++q) {
        out.g_variance_z[q] = var_z(r.g_quadrature_variances[q], out.expected_g_variance);
        out.xi_variance_z[q] = var_z(r.xi_quadrature_variances[q], out.expected_xi_variance);
        out.output_variance_z[q] = var_z(r.output_quadrature_variances[q], out.expected_output_variance);
    }
    out.xi_mean_z = {mean_z(r.xi_mean.real(), alpha.real(), out.expected_xi_variance),
                     mean_z(r.xi_mean.imag(), alpha.imag(), out.expected_xi_variance)};
    out.output_mean_z = {mean_z(r.output_mean.real(), alpha.real(), out.expected_output_variance),
                         mean_z(r.output_mean.imag(), alpha.imag(), out.expected_output_variance)};
    return out;
}

}  // namespace cvtele::sim
