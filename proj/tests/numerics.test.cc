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

#include "cvtele/numerics.hpp"

#include <cmath>

#include <boost/math/special_functions/binomial.hpp>
#include <boost/math/special_functions/laguerre.hpp>
#include <boost/math/special_functions/legendre.hpp>
#include <gtest/gtest.h>

#include "cvtele/errors.hpp"

using namespace cvtele;
using namespace cvtele::numerics;

namespace {

// P_n(x) = sum_k C(n,k)^2 ((x-1)/2)^(n-k) ((x+1)/2)^k, valid off [-1, 1] too.
double legendre_sum(int n, double x) {
    double sum = 0.0;
    for (int k = 0; k <= n; ++k) {
        double b = boost::math::binomial_coefficient<double>(n, k);
        sum += b * b * std::pow((x - 1) / 2, n - k) * std::pow((x + 1) / 2, k);
    }
    return sum;
}

}  // namespace

TEST(Numerics, laguerre_matches_boost) {
    for (int n = 0; n <= 30; ++n) {
        for (int k = 0; k <= 12; ++k) {
            for (double x : {0.0, 0.1, 0.7, 2.5, 9.0, 31.0}) {
                double want = boost::math::laguerre(n, k, x);
                ASSERT_NEAR(laguerre_assoc(n, k, x), want, 1e-11 * std::max(1.0, std::abs(want)))
                    << n << " " << k << " " << x;
            }
        }
    }
}

TEST(Numerics, laguerre_low_orders) {
    ASSERT_EQ(laguerre_assoc(0, 3, 1.7), 1.0);
    ASSERT_NEAR(laguerre_assoc(1, 0, 0.5), 0.5, 1e-15);
    ASSERT_NEAR(laguerre_assoc(2, 1, 1.0), 0.5, 1e-15);  // (x^2 - 6x + 6) / 2
}

TEST(Numerics, legendre_matches_boost) {
    for (int n = 0; n <= 40; ++n) {
        for (double x : {-1.0, -0.3, 0.0, 0.5, 0.99, 1.0, 1.25, 3.0}) {
            double want = std::abs(x) <= 1.0 ? boost::math::legendre_p(n, x) : legendre_sum(n, x);
            ASSERT_NEAR(legendre(n, x), want, 1e-11 * std::max(1.0, std::abs(want))) << n << " " << x;
        }
    }
}

TEST(Numerics, gauss_legendre_exact_for_polynomials) {
    auto rule = gauss_legendre(10);
    for (int p = 0; p < 20; ++p) {
        double sum = 0.0;
        for (size_t i = 0; i < rule.nodes.size(); ++i) {
            sum += rule.weights[i] * std::pow(rule.nodes[i], p);
        }
        double want = (p % 2 == 1) ? 0.0 : 2.0 / (p + 1);
        ASSERT_NEAR(sum, want, 1e-14) << p;
    }
}

TEST(Numerics, gauss_hermite_moments) {
    auto rule = gauss_hermite(12);
    // int x^p e^{-x^2} dx = Gamma((p+1)/2) for even p.
    for (int p = 0; p < 24; ++p) {
        double sum = 0.0;
        for (size_t i = 0; i < rule.nodes.size(); ++i) {
            sum += rule.weights[i] * std::pow(rule.nodes[i], p);
        }
        double want = (p % 2 == 1) ? 0.0 : std::tgamma((p + 1) / 2.0);
        ASSERT_NEAR(sum, want, 1e-12 * std::max(1.0, std::tgamma((p + 2) / 2.0))) << p;
    }
}

TEST(Numerics, plane_gaussian_normalization_all_schemes) {
    auto g = [](Complex nu) { return (2.0 / kPi) * std::exp(-2.0 * std::norm(nu - Complex(0.3, -0.2))); };
    QuadratureSpec cart;
    ASSERT_NEAR(integrate_plane(g, cart), 1.0, 1e-12);
    QuadratureSpec polar;
    polar.scheme = QuadratureScheme::Polar;
    polar.center = {0.3, -0.2};
    ASSERT_NEAR(integrate_plane(g, polar), 1.0, 1e-12);
    ASSERT_NEAR(integrate_plane(g, QuadratureSpec::gauss_hermite(8, 1.0 / std::sqrt(2.0), {0.3, -0.2})),
                1.0, 1e-13);
}

TEST(Numerics, gauss_hermite_scheme_polynomial_times_gaussian) {
    // int |nu|^4 exp(-|nu|^2) d^2nu = pi * 2!
    auto f = [](Complex nu) { return std::norm(nu) * std::norm(nu) * std::exp(-std::norm(nu)); };
    ASSERT_NEAR(integrate_plane(f, QuadratureSpec::gauss_hermite(4, 1.0)), 2.0 * kPi, 1e-12);
}

TEST(Numerics, convergence_report) {
    auto g = [](Complex nu) { return std::exp(-std::norm(nu)) / kPi; };
    auto rep = integrate_plane_report(g);
    ASSERT_NEAR(rep.value, 1.0, 1e-12);
    ASSERT_NEAR(rep.difference, std::abs(rep.value - rep.half_order_value), 1e-15);
    ASSERT_LT(rep.difference, 1e-6);
}

TEST(Numerics, error_decreases_with_order) {
    auto g = [](Complex nu) { return std::exp(-std::norm(nu)) / kPi; };
    auto err = [&](int order) {
        QuadratureSpec s;
        s.order = order;
        return std::abs(integrate_plane(g, s) - 1.0);
    };
    ASSERT_LE(err(32), err(16));
    ASSERT_LE(err(64), std::max(err(32), 1e-14));
}

TEST(Numerics, non_finite_integrand_is_reported) {
    auto bad = [](Complex nu) { return nu.real() > 1.0 ? std::nan("") : 1.0; };
    ASSERT_THROW(integrate_plane(bad), NumericalError);
}

TEST(Numerics, invalid_spec) {
    QuadratureSpec s;
    s.order = 0;
    ASSERT_THROW(s.validate(), DomainError);
    s.order = 8;
    s.radial_cutoff = -1.0;
    ASSERT_THROW(s.validate(), DomainError);
}
