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

#include "cvtele/phase_space.hpp"

#include <cmath>

#include <fmt/format.h>

#include "cvtele/errors.hpp"

namespace cvtele::phase {
namespace {

using numerics::kPi;

// Imaginary residue of a real-valued double sum tolerated as roundoff.
constexpr double kImagEscalate = 1e-8;

void check_index(int m, int n) {
    if (m < 0 || n < 0) {
        throw DomainError("displacement_element: negative Fock index");
    }
    if (m > kMaxFockIndex || n > kMaxFockIndex) {
        throw DomainError(fmt::format(
            "displacement_element: index ({}, {}) beyond overflow guard {}", m, n, kMaxFockIndex));
    }
}

// sqrt(lo! / hi!) for lo <= hi.
double sqrt_factorial_ratio(int lo, int hi) {
    double r = 1.0;
    for (int j = lo + 1; j <= hi; ++j) {
        r /= j;
    }
    return std::sqrt(r);
}

Complex int_power(Complex z, int k) {
    Complex r{1.0, 0.0};
    for (int i = 0; i < k; ++i) {
        r *= z;
    }
    return r;
}

// sum_{m,n} conj(c_m) c_n f(m, n), skipping zero coefficients.
template <class F>
Complex fock_quadratic(const std::vector<Complex>& c, F&& element) {
    Complex sum{0.0, 0.0};
    for (size_t m = 0; m < c.size(); ++m) {
        if (c[m] == Complex{}) {
            continue;
        }
        for (size_t n = 0; n < c.size(); ++n) {
            if (c[n] == Complex{}) {
                continue;
            }
            sum += std::conj(c[m]) * c[n] * element(static_cast<int>(m), static_cast<int>(n));
        }
    }
    return sum;
}

double real_part_checked(Complex v, const char* what) {
    double scale = std::max(1.0, std::abs(v.real()));
    if (std::abs(v.imag()) > kImagEscalate * scale) {
        throw NumericalError(fmt::format("{}: imaginary residue {:.3e} exceeds {:.0e}", what,
                                         v.imag(), kImagEscalate));
    }
    return v.real();
}

// q^n L_n^{(k)}(-z / q), evaluated without dividing by q.
double homogeneous_laguerre(int n, int k, double q, double z) {
    double prev = 1.0;
    if (n == 0) {
        return prev;
    }
    double cur = (1.0 + k) * q + z;
    for (int j = 1; j < n; ++j) {
        double next = ((2.0 * j + 1 + k) * q * cur + z * cur - (j + k) * q * q * prev) / (j + 1);
        prev = cur;
        cur = next;
    }
    return cur;
}

}  // namespace

Complex displacement_element(int m, int n, Complex nu) {
    check_index(m, n);
    const double x = std::norm(nu);
    const double gauss = std::exp(-0.5 * x);
    if (m >= n) {
        int k = m - n;
        return sqrt_factorial_ratio(n, m) * int_power(nu, k) * gauss * numerics::laguerre_assoc(n, k, x);
    }
    int k = n - m;
    return sqrt_factorial_ratio(m, n) * int_power(-std::conj(nu), k) * gauss *
           numerics::laguerre_assoc(m, k, x);
}

Complex characteristic_fn(const StateSpec& state, Complex nu) {
    if (const Coherent* c = state.as_coherent()) {
        const Complex a = c->alpha;
        return std::exp(-0.5 * std::norm(nu) + nu * std::conj(a) - std::conj(nu) * a);
    }
    return fock_quadratic(state.as_fock_vector()->coeffs,
                          [&](int m, int n) { return displacement_element(m, n, nu); });
}

double wigner(const StateSpec& state, Complex nu) {
    if (const Coherent* c = state.as_coherent()) {
        return 2.0 / kPi * std::exp(-2.0 * std::norm(nu - c->alpha));
    }
    const Complex two_nu = 2.0 * nu;
    Complex v = fock_quadratic(state.as_fock_vector()->coeffs, [&](int m, int n) {
        double parity = (n % 2 == 0) ? 1.0 : -1.0;
        return parity * displacement_element(m, n, two_nu);
    });
    return 2.0 / kPi * real_part_checked(v, "wigner");
}

double husimi_q(const StateSpec& state, Complex beta) {
    if (const Coherent* c = state.as_coherent()) {
        return std::exp(-std::norm(beta - c->alpha)) / kPi;
    }
    // <beta|psi> = e^{-|beta|^2/2} sum_n c_n conj(beta)^n / sqrt(n!)
    const auto& coeffs = state.as_fock_vector()->coeffs;
    const Complex bc = std::conj(beta);
    Complex term{1.0, 0.0};
    Complex overlap{0.0, 0.0};
    for (size_t n = 0; n < coeffs.size(); ++n) {
        if (n > 0) {
            term *= bc / std::sqrt(static_cast<double>(n));
        }
        overlap += coeffs[n] * term;
    }
    return std::norm(overlap) * std::exp(-std::norm(beta)) / kPi;
}

double s_ordered(const StateSpec& state, Complex nu, double t, int order) {
    if (!(t >= 0.0) || !std::isfinite(t)) {
        throw DomainError("s_ordered: smoothing t must be finite and >= 0");
    }
    if (t == 0.0) {
        return wigner(state, nu);
    }
    const double norm = 2.0 / (kPi * t);
    auto spec = numerics::QuadratureSpec::gauss_hermite(order, std::sqrt(0.5 * t), nu);
    return numerics::integrate_plane(
        [&](Complex mu) { return norm * std::exp(-2.0 * std::norm(nu - mu) / t) * wigner(state, mu); },
        spec);
}

double s_ordered_series(const StateSpec& state, Complex nu, double t) {
    if (!(t >= 0.0) || !std::isfinite(t)) {
        throw DomainError("s_ordered_series: smoothing t must be finite and >= 0");
    }
    const double onept = 1.0 + t;
    if (const Coherent* c = state.as_coherent()) {
        return 2.0 / (kPi * onept) * std::exp(-2.0 * std::norm(nu - c->alpha) / onept);
    }
    const double q = (t - 1.0) / onept;
    const double z = 4.0 * std::norm(nu) / (onept * onept);
    const double gauss = std::exp(-2.0 * std::norm(nu) / onept);
    const double scale = 2.0 / onept;
    const auto& coeffs = state.as_fock_vector()->coeffs;
    Complex v = fock_quadratic(coeffs, [&](int m, int n) {
        int lo = std::min(m, n);
        int k = std::abs(m - n);
        Complex shift = int_power(m >= n ? nu : std::conj(nu), k);
        return sqrt_factorial_ratio(lo, lo + k) * std::pow(scale, k + 1) * shift * gauss *
               homogeneous_laguerre(lo, k, q, z);
    });
    return real_part_checked(v, "s_ordered_series") / kPi;
}

double quasidist(const StateSpec& state, Complex nu, const QuasiDist& kind) {
    switch (kind.kind) {
        case QuasiDistKind::Wigner:
            return wigner(state, nu);
        case QuasiDistKind::Husimi:
            return husimi_q(state, nu);
        case QuasiDistKind::SOrdered:
            return s_ordered(state, nu, kind.t);
    }
    return 0.0;
}

}  // namespace cvtele::phase
