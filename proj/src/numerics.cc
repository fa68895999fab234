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

#include <algorithm>
#include <cmath>
#include <sstream>

#include "cvtele/errors.hpp"

namespace cvtele::numerics {

double laguerre_assoc(int n, int k, double x) {
    if (n < 0 || k < 0) {
        throw DomainError("laguerre_assoc: n and k must be non-negative");
    }
    double prev = 1.0;
    if (n == 0) {
        return prev;
    }
    double cur = 1.0 + k - x;
    for (int j = 1; j < n; ++j) {
        double next = ((2 * j + 1 + k - x) * cur - (j + k) * prev) / (j + 1);
        prev = cur;
        cur = next;
    }
    return cur;
}

double legendre(int n, double x) {
    if (n < 0) {
        throw DomainError("legendre: n must be non-negative");
    }
    double prev = 1.0;
    if (n == 0) {
        return prev;
    }
    double cur = x;
    for (int j = 1; j < n; ++j) {
        double next = ((2 * j + 1) * x * cur - j * prev) / (j + 1);
        prev = cur;
        cur = next;
    }
    return cur;
}

void QuadratureSpec::validate() const {
    if (order < 2) {
        throw DomainError("quadrature order must be at least 2");
    }
    if (scheme == QuadratureScheme::GaussHermite) {
        if (!(gaussian_width > 0.0) || !std::isfinite(gaussian_width)) {
            throw DomainError("Gauss-Hermite width must be positive and finite");
        }
    } else if (!(radial_cutoff > 0.0) || !std::isfinite(radial_cutoff)) {
        throw DomainError("quadrature radial_cutoff must be positive and finite");
    }
}

QuadratureSpec QuadratureSpec::gauss_hermite(int order, double width, Complex center) {
    QuadratureSpec spec;
    spec.scheme = QuadratureScheme::GaussHermite;
    spec.order = order;
    spec.gaussian_width = width;
    spec.center = center;
    return spec;
}

Rule1D gauss_legendre(int order) {
    Rule1D rule;
    rule.nodes.resize(order);
    rule.weights.resize(order);
    int half = (order + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double z = std::cos(kPi * (i + 0.75) / (order + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = z;
            for (int j = 1; j < order; ++j) {
                double p2 = ((2 * j + 1) * z * p1 - j * p0) / (j + 1);
                p0 = p1;
                p1 = p2;
            }
            dp = order * (z * p1 - p0) / (z * z - 1.0);
            double dz = p1 / dp;
            z -= dz;
            if (std::abs(dz) < 1e-16) {
                break;
            }
        }
        double w = 2.0 / ((1.0 - z * z) * dp * dp);
        rule.nodes[i] = -z;
        rule.nodes[order - 1 - i] = z;
        rule.weights[i] = w;
        rule.weights[order - 1 - i] = w;
    }
    return rule;
}

Rule1D gauss_hermite(int order) {
    // Newton iteration on the orthonormal Hermite recurrence; weights keep full
    // relative precision at the outermost nodes.
    Rule1D rule;
    rule.nodes.resize(order);
    rule.weights.resize(order);
    const double pim4 = 1.0 / std::pow(kPi, 0.25);
    int half = (order + 1) / 2;
    std::vector<double> roots(half);
    double z = 0.0;
    for (int i = 0; i < half; ++i) {
        if (i == 0) {
            z = std::sqrt(2.0 * order + 1) - 1.85575 * std::pow(2.0 * order + 1, -0.16667);
        } else if (i == 1) {
            z -= 1.14 * std::pow(static_cast<double>(order), 0.426) / z;
        } else if (i == 2) {
            z = 1.86 * z - 0.86 * roots[0];
        } else if (i == 3) {
            z = 1.91 * z - 0.91 * roots[1];
        } else {
            z = 2.0 * z - roots[i - 2];
        }
        double pp = 0.0;
        for (int iter = 0; iter < 200; ++iter) {
            double p1 = pim4;
            double p2 = 0.0;
            for (int j = 1; j <= order; ++j) {
                double p3 = p2;
                p2 = p1;
                p1 = z * std::sqrt(2.0 / j) * p2 - std::sqrt((j - 1.0) / j) * p3;
            }
            pp = std::sqrt(2.0 * order) * p2;
            double dz = p1 / pp;
            z -= dz;
            if (std::abs(dz) <= 1e-15 * std::max(1.0, std::abs(z))) {
                break;
            }
        }
        roots[i] = z;
        double w = 2.0 / (pp * pp);
        rule.nodes[i] = -z;
        rule.nodes[order - 1 - i] = z;
        rule.weights[i] = w;
        rule.weights[order - 1 - i] = w;
    }
    if (order % 2 == 1) {
        rule.nodes[order / 2] = 0.0;
    }
    return rule;
}

PlaneRule plane_rule(const QuadratureSpec& spec) {
    spec.validate();
    PlaneRule rule;
    const double cx = spec.center.real();
    const double cy = spec.center.imag();
    switch (spec.scheme) {
        case QuadratureScheme::TensorCartesian: {
            Rule1D r = gauss_legendre(spec.order);
            const double R = spec.radial_cutoff;
            rule.nodes.reserve(r.nodes.size() * r.nodes.size());
            rule.weights.reserve(r.nodes.size() * r.nodes.size());
            for (size_t i = 0; i < r.nodes.size(); ++i) {
                for (size_t j = 0; j < r.nodes.size(); ++j) {
                    rule.nodes.emplace_back(cx + R * r.nodes[i], cy + R * r.nodes[j]);
                    rule.weights.push_back(R * R * r.weights[i] * r.weights[j]);
                }
            }
            break;
        }
        case QuadratureScheme::Polar: {
            Rule1D r = gauss_legendre(spec.order);
            const double R = spec.radial_cutoff;
            const int n_angle = 2 * spec.order;
            const double dtheta = 2.0 * kPi / n_angle;
            for (size_t i = 0; i < r.nodes.size(); ++i) {
                double rad = 0.5 * R * (r.nodes[i] + 1.0);
                double wr = 0.5 * R * r.weights[i] * rad;
                for (int k = 0; k < n_angle; ++k) {
                    rule.nodes.push_back(spec.center + std::polar(rad, k * dtheta));
                    rule.weights.push_back(wr * dtheta);
                }
            }
            break;
        }
        case QuadratureScheme::GaussHermite: {
            Rule1D r = gauss_hermite(spec.order);
            const double W = spec.gaussian_width;
            std::vector<double> mod(r.nodes.size());
            for (size_t i = 0; i < r.nodes.size(); ++i) {
                mod[i] = W * r.weights[i] * std::exp(r.nodes[i] * r.nodes[i]);
            }
            for (size_t i = 0; i < r.nodes.size(); ++i) {
                for (size_t j = 0; j < r.nodes.size(); ++j) {
                    rule.nodes.emplace_back(cx + W * r.nodes[i], cy + W * r.nodes[j]);
                    rule.weights.push_back(mod[i] * mod[j]);
                }
            }
            break;
        }
    }
    return rule;
}

double integrate_plane(const PlaneFunction& f, const QuadratureSpec& spec) {
    PlaneRule rule = plane_rule(spec);
    double sum = 0.0;
    for (size_t i = 0; i < rule.size(); ++i) {
        double v = f(rule.nodes[i]);
        if (!std::isfinite(v)) {
            std::ostringstream msg;
            msg.precision(17);
            msg << "integrate_plane: non-finite integrand " << v << " at node " << i << " ("
                << rule.nodes[i].real() << ", " << rule.nodes[i].imag() << ")";
            throw NumericalError(msg.str());
        }
        sum += rule.weights[i] * v;
    }
    return sum;
}

ConvergenceReport integrate_plane_report(const PlaneFunction& f, const QuadratureSpec& spec) {
    QuadratureSpec half = spec;
    half.order = std::max(2, spec.order / 2);
    double value = integrate_plane(f, spec);
    double half_value = integrate_plane(f, half);
    return {value, half_value, std::abs(value - half_value)};
}

}  // namespace cvtele::numerics
