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

#include "cvtele/fidelity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Dense>
#include <fmt/format.h>

#include "cvtele/phase_space.hpp"
#include "cvtele/random.hpp"
#include "cvtele/teleport_sim.hpp"

namespace cvtele::fidelity {
namespace {

using numerics::kPi;

void check_t(double t, const char* where) {
    if (!(t >= 0.0) || !std::isfinite(t)) {
        throw DomainError(fmt::format("{}: t must be finite and >= 0 (got {})", where, t));
    }
}

int numeric_order(const StateSpec& state, int order) {
    // Gauss-Hermite of order k integrates degree 2k - 1 exactly; |C|^2 of a
    // length-N Fock vector is Gaussian times a degree 4(N - 1) polynomial.
    return std::max(order, 2 * state.cutoff() + 2);
}

// (1/pi) integral of kernel_rate-Gaussian-weighted |C|^2:
//   (1/pi) int exp(-rate |nu|^2) |C(nu)|^2.
double weighted_char_integral(const StateSpec& state, double rate, int order) {
    auto spec = numerics::QuadratureSpec::gauss_hermite(numeric_order(state, order),
                                                        1.0 / std::sqrt(1.0 + rate));
    return numerics::integrate_plane(
        [&](Complex nu) {
            return std::exp(-rate * std::norm(nu)) * std::norm(phase::characteristic_fn(state, nu)) / kPi;
        },
        spec);
}

}  // namespace

double fidelity_coherent(double t) {
    check_t(t, "fidelity_coherent");
    return 1.0 / (1.0 + 0.5 * t);
}

double fidelity_fock(int n, double t) {
    check_t(t, "fidelity_fock");
    if (n < 0 || n > kMaxFockIndex) {
        throw DomainError(fmt::format("fidelity_fock: n = {} outside [0, {}]", n, kMaxFockIndex));
    }
    // With u = 1 - t/2, v = 1 + t/2, w = 1 + t^2/4 and z = u v:
    //   u^n P_n(w / z) = H_n(w, z) / v^n,   H_n(w, z) = z^n P_n(w / z),
    // and H obeys (k+1) H_{k+1} = (2k+1) w H_k - k z^2 H_{k-1}. So
    //   F_n(t) = H_n(w, z) / v^{2n+1}
    // which is smooth through t = 2 (z = 0).
    const double v = 1.0 + 0.5 * t;
    const double w = 1.0 + 0.25 * t * t;
    const double z = 1.0 - 0.25 * t * t;
    double prev = 1.0;
    double cur = w;
    if (n == 0) {
        cur = prev;
    }
    for (int k = 1; k < n; ++k) {
        double next = ((2.0 * k + 1.0) * w * cur - k * z * z * prev) / (k + 1.0);
        prev = cur;
        cur = next;
    }
    return cur / std::pow(v, 2 * n + 1);
}

double fidelity_fock_boundary(int n) {
    if (n < 0 || n > kMaxFockIndex) {
        throw DomainError(fmt::format("fidelity_fock_boundary: n = {} outside [0, {}]", n, kMaxFockIndex));
    }
    double central = 1.0;  // (2n)! / (2^{2n} (n!)^2)
    for (int k = 1; k <= n; ++k) {
        central *= (2.0 * k - 1.0) / (2.0 * k);
    }
    return 0.5 * central;
}

double fidelity_superposition01(double t) {
    check_t(t, "fidelity_superposition01");
    const double v = 1.0 + 0.5 * t;
    return (1.0 + 0.75 * t + 0.25 * t * t) / (v * v * v);
}

double fidelity_generating(double lambda, double t) {
    check_t(t, "fidelity_generating");
    if (!(std::abs(lambda) < 1.0)) {
        throw DomainError(fmt::format(
            "fidelity_generating: |lambda| = {} >= 1, outside the radius of convergence", std::abs(lambda)));
    }
    const double v = 1.0 + 0.5 * t;
    const double u = 1.0 - 0.5 * t;
    const double den = v * v - 2.0 * lambda * (1.0 + 0.25 * t * t) + lambda * lambda * u * u;
    return 1.0 / std::sqrt(den);
}

Complex fidelity_generating(Complex lambda, double t) {
    check_t(t, "fidelity_generating");
    if (!(std::abs(lambda) < 1.0)) {
        throw DomainError(fmt::format(
            "fidelity_generating: |lambda| = {} >= 1, outside the radius of convergence", std::abs(lambda)));
    }
    // The radicand is v^2 (1 - lambda)(1 - lambda u^2 / v^2); both factors keep a
    // positive real part in the disk, so principal roots stay on one branch.
    const double v = 1.0 + 0.5 * t;
    const double u = 1.0 - 0.5 * t;
    Complex root = std::sqrt(1.0 - lambda) * std::sqrt(1.0 - lambda * (u * u) / (v * v));
    return 1.0 / (v * root);
}

std::optional<double> fidelity_closed_form(const StateSpec& state, double t) {
    if (state.is_coherent()) {
        return fidelity_coherent(t);
    }
    if (auto n = state.fock_number()) {
        return fidelity_fock(*n, t);
    }
    if (state.is_superposition01()) {
        return fidelity_superposition01(t);
    }
    return std::nullopt;
}

double fidelity_numeric(const StateSpec& state, double t, int order) {
    check_t(t, "fidelity_numeric");
    return weighted_char_integral(state, 0.5 * t, order);
}

FormsReport forms_consistency(const StateSpec& state, double t, const resource::PairQuadrature& quad) {
    if (!(t > 0.0) || !std::isfinite(t)) {
        throw DomainError("forms_consistency requires finite t > 0");
    }
    FormsReport r;
    // G(nu) = (2 / pi t) exp(-2|nu|^2 / t).
    r.forms[0] = (2.0 / t) * weighted_char_integral(state, 2.0 / t, 64);
    auto w = resource::wigner_samples(state, quad.order);
    r.forms[1] = (2.0 / t) * resource::gaussian_overlap(w, w, 2.0 / t, quad.exec);
    r.forms[2] = resource::gaussian_overlap(w, w, 0.5 * t, quad.exec);
    r.forms[3] = fidelity_numeric(state, t);
    for (size_t i = 0; i < r.forms.size(); ++i) {
        for (size_t j = i + 1; j < r.forms.size(); ++j) {
            r.max_residual = std::max(r.max_residual, std::abs(r.forms[i] - r.forms[j]));
        }
    }
    return r;
}

double scaling_residual(const StateSpec& state, double t) {
    if (!(t > 0.0) || !std::isfinite(t)) {
        throw DomainError("scaling_residual requires finite t > 0");
    }
    return std::abs(fidelity_numeric(state, t) - (2.0 / t) * fidelity_numeric(state, 4.0 / t));
}

const char* to_string(CurveMethod m) {
    switch (m) {
        case CurveMethod::ClosedForm:
            return "closed_form";
        case CurveMethod::Quadrature:
            return "quadrature";
        case CurveMethod::MonteCarlo:
            return "monte_carlo";
    }
    return "?";
}

bool FidelityCurve::strictly_decreasing() const {
    for (size_t i = 1; i < values.size(); ++i) {
        if (!(values[i] < values[i - 1])) {
            return false;
        }
    }
    return true;
}

FidelityCurve fidelity_curve(const StateSpec& state, std::span<const double> t_grid,
                             CurveMethod method, const CurveOptions& options) {
    FidelityCurve curve;
    curve.state = state.descriptor();
    curve.method = method;
    curve.t_grid.assign(t_grid.begin(), t_grid.end());
    for (size_t i = 0; i < t_grid.size(); ++i) {
        const double t = t_grid[i];
        switch (method) {
            case CurveMethod::ClosedForm: {
                auto v = fidelity_closed_form(state, t);
                if (!v) {
                    throw DomainError("no closed-form fidelity for state " + curve.state);
                }
                curve.values.push_back(*v);
                curve.tolerances.push_back(0.0);
                break;
            }
            case CurveMethod::Quadrature:
                curve.values.push_back(fidelity_numeric(state, t));
                curve.tolerances.push_back(1e-8);
                break;
            case CurveMethod::MonteCarlo: {
                sim::RunOptions run;
                run.exec = options.exec;
                auto r = sim::run_protocol(state, resource::resource_for_t(t), options.samples,
                                           {options.seed, i}, run);
                curve.values.push_back(r.fidelity_mean);
                curve.tolerances.push_back(3.0 * r.fidelity_stderr);
                break;
            }
        }
    }
    return curve;
}

std::pair<Complex, double> best_coherent_fit(std::span<const Complex> coeffs) {
    auto overlap = [&](Complex alpha) {
        const Complex ac = std::conj(alpha);
        Complex term{1.0, 0.0};
        Complex sum{0.0, 0.0};
        for (size_t n = 0; n < coeffs.size(); ++n) {
            if (n > 0) {
                term *= ac / std::sqrt(static_cast<double>(n));
            }
            sum += coeffs[n] * term;
        }
        return std::norm(sum) * std::exp(-std::norm(alpha));
    };
    // Start from <a> and refine by compass search.
    Complex alpha{0.0, 0.0};
    for (size_t n = 1; n < coeffs.size(); ++n) {
        alpha += std::sqrt(static_cast<double>(n)) * std::conj(coeffs[n - 1]) * coeffs[n];
    }
    double best = overlap(alpha);
    const Complex dirs[] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
    for (double h = 0.25; h > 1e-12;) {
        bool moved = false;
        for (const Complex& d : dirs) {
            double v = overlap(alpha + h * d);
            if (v > best) {
                best = v;
                alpha += h * d;
                moved = true;
                break;
            }
        }
        if (!moved) {
            h *= 0.5;
        }
    }
    return {alpha, best};
}

MaxFidelityResult max_fidelity(double t, int cutoff, const MaxFidelityOptions& options) {
    if (!(t > 0.0) || !std::isfinite(t)) {
        throw DomainError("max_fidelity requires finite t > 0");
    }
    if (cutoff < 1 || cutoff > 30) {
        throw DomainError(fmt::format("max_fidelity: cutoff {} outside [1, 30]", cutoff));
    }
    if (options.restarts < 1) {
        throw DomainError("max_fidelity needs at least one restart");
    }
    const int dim = cutoff;
    const size_t dim2 = static_cast<size_t>(dim) * dim;
    // |C|^2 / weight is a polynomial of degree 4(dim - 1): order 2 dim + 2 is exact.
    auto rule = numerics::plane_rule(
        numerics::QuadratureSpec::gauss_hermite(2 * dim + 2, 1.0 / std::sqrt(1.0 + 0.5 * t)));
    const size_t nodes = rule.size();

    // Displacement matrices at every node, row-major, and kernel weights.
    std::vector<Complex> disp(nodes * dim2);
    std::vector<double> omega(nodes);
    kernels::for_each_index(
        nodes,
        [&](size_t j) {
            const Complex nu = rule.nodes[j];
            omega[j] = rule.weights[j] * std::exp(-0.5 * t * std::norm(nu)) / kPi;
            for (int m = 0; m < dim; ++m) {
                for (int n = 0; n < dim; ++n) {
                    disp[j * dim2 + m * dim + n] = phase::displacement_element(m, n, nu);
                }
            }
        },
        options.exec);

    using Vec = Eigen::VectorXcd;
    using Mat = Eigen::MatrixXcd;

    // Returns F(psi) and fills K[psi].
    auto evaluate = [&](const Vec& psi, Mat& kernel) {
        kernel.setZero(dim, dim);
        double value = 0.0;
        for (size_t j = 0; j < nodes; ++j) {
            const Complex* d = &disp[j * dim2];
            Complex c{0.0, 0.0};
            for (int m = 0; m < dim; ++m) {
                Complex row{0.0, 0.0};
                for (int n = 0; n < dim; ++n) {
                    row += d[m * dim + n] * psi[n];
                }
                c += std::conj(psi[m]) * row;
            }
            value += omega[j] * std::norm(c);
            const Complex scale = omega[j] * std::conj(c);
            for (int m = 0; m < dim; ++m) {
                for (int n = 0; n < dim; ++n) {
                    kernel(m, n) += scale * d[m * dim + n];
                }
            }
        }
        return value;
    };

    auto run_restart = [&](size_t r) {
        numerics::RandomStream stream(numerics::derive_stream({options.seed, 0}, r));
        Vec psi(dim);
        for (int n = 0; n < dim; ++n) {
            auto [x, y] = numerics::gaussian_pair(stream);
            psi[n] = Complex{x, y};
        }
        psi.normalize();
        Mat kernel;
        MaxFidelityResult res;
        res.restart = static_cast<int>(r);
        double value = evaluate(psi, kernel);
        for (int it = 1; it <= options.max_iterations; ++it) {
            Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (kernel + kernel.adjoint()));
            Vec next = es.eigenvectors().col(dim - 1);
            // Fix the global phase: largest component real and positive.
            Eigen::Index k = 0;
            next.cwiseAbs().maxCoeff(&k);
            next *= std::conj(next[k]) / std::abs(next[k]);
            double next_value = evaluate(next, kernel);
            res.iterations = it;
            const double change = std::abs(next_value - value);
            psi = next;
            value = next_value;
            if (change < options.tolerance) {
                res.converged = true;
                break;
            }
        }
        res.value = value;
        res.coeffs.assign(psi.data(), psi.data() + dim);
        return res;
    };

    kernels::ExecConfig restart_exec = options.exec;
    auto results = kernels::map_blocks<MaxFidelityResult>(static_cast<size_t>(options.restarts),
                                                          run_restart, restart_exec);
    const MaxFidelityResult* best = nullptr;
    const MaxFidelityResult* best_any = &results[0];
    for (const auto& r : results) {
        if (r.value > best_any->value) {
            best_any = &r;
        }
        if (r.converged && (best == nullptr || r.value > best->value)) {
            best = &r;
        }
    }
    if (best == nullptr) {
        MaxFidelityResult failed = *best_any;
        std::tie(failed.coherent_alpha, failed.coherent_overlap) = best_coherent_fit(failed.coeffs);
        std::string what =
            fmt::format("max_fidelity: no restart converged within {} iterations (best value {})",
                        options.max_iterations, failed.value);
        throw ConvergenceError(what, std::move(failed));
    }
    MaxFidelityResult out = *best;
    std::tie(out.coherent_alpha, out.coherent_overlap) = best_coherent_fit(out.coeffs);
    return out;
}

}  // namespace cvtele::fidelity
