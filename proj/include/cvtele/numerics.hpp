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

#ifndef CVTELE_NUMERICS_HPP
#define CVTELE_NUMERICS_HPP

#include <complex>
#include <functional>
#include <vector>

namespace cvtele {

using Complex = std::complex<double>;

namespace numerics {

inline constexpr double kPi = 3.14159265358979323846;

/// Associated Laguerre polynomial L_n^{(k)}(x) by upward three-term recurrence.
double laguerre_assoc(int n, int k, double x);

/// Legendre polynomial P_n(x) by Bonnet's recurrence.
double legendre(int n, double x);

enum class QuadratureScheme {
    // Tensor Gauss-Legendre rule on the square [c - R, c + R]^2.
    TensorCartesian,
    // Gauss-Legendre in radius on [0, R], uniform trapezoid in angle.
    Polar,
    // Tensor Gauss-Hermite rule for weight exp(-|nu - c|^2 / w^2); the weight is
    // folded into the node weights so callers integrate f directly.
    GaussHermite,
};

struct QuadratureSpec {
    double radial_cutoff = 6.0;
    int order = 64;
    QuadratureScheme scheme = QuadratureScheme::TensorCartesian;
    Complex center{0.0, 0.0};
    // Only read by the GaussHermite scheme.
    double gaussian_width = 1.0;

    void validate() const;

    static QuadratureSpec gauss_hermite(int order, double width, Complex center = {});
};

/// One-dimensional rule on [-1, 1] (Legendre) or R with weight e^{-x^2} (Hermite).
struct Rule1D {
    std::vector<double> nodes;
    std::vector<double> weights;
};

Rule1D gauss_legendre(int order);

/// Gauss-Hermite nodes with weights for e^{-x^2}.
Rule1D gauss_hermite(int order);

/// Node set for a two-dimensional rule. Weights include the Jacobian and, for
/// GaussHermite, the reciprocal of the Gaussian weight.
struct PlaneRule {
    std::vector<Complex> nodes;
    std::vector<double> weights;

    size_t size() const { return nodes.size(); }
};

PlaneRule plane_rule(const QuadratureSpec& spec);

using PlaneFunction = std::function<double(Complex)>;

/// Approximates the integral of f over the complex plane (d^2 nu = dx dy).
/// Throws NumericalError naming the node if f returns a non-finite value.
double integrate_plane(const PlaneFunction& f, const QuadratureSpec& spec = {});

struct ConvergenceReport {
    double value;
    double half_order_value;
    double difference;
};

/// Evaluates at spec.order and spec.order / 2 (at least 2).
ConvergenceReport integrate_plane_report(const PlaneFunction& f, const QuadratureSpec& spec = {});

}  // namespace numerics
}  // namespace cvtele

#endif
