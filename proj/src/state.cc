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

#include "cvtele/state.hpp"

#include <cmath>

#include <fmt/format.h>

#include "cvtele/errors.hpp"

namespace cvtele {
namespace {

constexpr double kNormTolerance = 1e-12;
constexpr double kStructureTolerance = 1e-12;

double norm_of(const std::vector<Complex>& v) {
    double s = 0.0;
    for (const auto& c : v) {
        s += std::norm(c);
    }
    return std::sqrt(s);
}

void check_length(size_t n) {
    if (n == 0) {
        throw DomainError("Fock vector must have at least one coefficient");
    }
    if (n > static_cast<size_t>(kMaxFockIndex) + 1) {
        throw DomainError(fmt::format("Fock vector length {} exceeds the supported cutoff {}", n,
                                      kMaxFockIndex + 1));
    }
}

std::string format_real(double x) {
    return fmt::format("{}", x);
}

}  // namespace

StateSpec StateSpec::coherent(Complex alpha) {
    if (!std::isfinite(alpha.real()) || !std::isfinite(alpha.imag())) {
        throw DomainError("coherent amplitude must be finite");
    }
    return StateSpec(Coherent{alpha});
}

StateSpec StateSpec::fock(int n) {
    if (n < 0 || n > kMaxFockIndex) {
        throw DomainError(fmt::format("Fock index {} outside [0, {}]", n, kMaxFockIndex));
    }
    std::vector<Complex> c(n + 1, Complex{0.0, 0.0});
    c[n] = 1.0;
    return StateSpec(FockVector{std::move(c)});
}

StateSpec StateSpec::superposition01() {
    const double h = 1.0 / std::sqrt(2.0);
    return StateSpec(FockVector{{Complex{h, 0.0}, Complex{h, 0.0}}});
}

StateSpec StateSpec::fock_vector(std::vector<Complex> coeffs) {
    check_length(coeffs.size());
    double norm = norm_of(coeffs);
    if (std::abs(norm - 1.0) > kNormTolerance) {
        throw DomainError(fmt::format("Fock vector norm {} differs from 1 by more than 1e-12", norm));
    }
    return StateSpec(FockVector{std::move(coeffs)});
}

StateSpec StateSpec::normalized(std::vector<Complex> coeffs, double* input_norm) {
    check_length(coeffs.size());
    double norm = norm_of(coeffs);
    if (input_norm != nullptr) {
        *input_norm = norm;
    }
    if (!(norm > 0.0) || !std::isfinite(norm)) {
        throw DomainError("Fock vector has zero or non-finite norm");
    }
    for (auto& c : coeffs) {
        c /= norm;
    }
    return StateSpec(FockVector{std::move(coeffs)});
}

std::optional<int> StateSpec::fock_number() const {
    const FockVector* fv = as_fock_vector();
    if (fv == nullptr) {
        return std::nullopt;
    }
    std::optional<int> found;
    for (size_t n = 0; n < fv->coeffs.size(); ++n) {
        double a = std::abs(fv->coeffs[n]);
        if (std::abs(a - 1.0) <= kStructureTolerance) {
            found = static_cast<int>(n);
        } else if (a > kStructureTolerance) {
            return std::nullopt;
        }
    }
    return found;
}

bool StateSpec::is_superposition01() const {
    const FockVector* fv = as_fock_vector();
    if (fv == nullptr || fv->coeffs.size() < 2) {
        return false;
    }
    for (size_t n = 2; n < fv->coeffs.size(); ++n) {
        if (std::abs(fv->coeffs[n]) > kStructureTolerance) {
            return false;
        }
    }
    const double h = 1.0 / std::sqrt(2.0);
    // Equal moduli and equal phases; a relative phase changes the state.
    return std::abs(fv->coeffs[0] - fv->coeffs[1]) <= kStructureTolerance &&
           std::abs(std::abs(fv->coeffs[0]) - h) <= kStructureTolerance;
}

int StateSpec::cutoff() const {
    const FockVector* fv = as_fock_vector();
    return fv == nullptr ? 0 : static_cast<int>(fv->coeffs.size());
}

Complex StateSpec::mean_amplitude() const {
    if (const Coherent* c = as_coherent()) {
        return c->alpha;
    }
    // <a> = sum_n sqrt(n) conj(c_{n-1}) c_n
    const auto& v = as_fock_vector()->coeffs;
    Complex mean{0.0, 0.0};
    for (size_t n = 1; n < v.size(); ++n) {
        mean += std::sqrt(static_cast<double>(n)) * std::conj(v[n - 1]) * v[n];
    }
    return mean;
}

std::string StateSpec::descriptor() const {
    if (const Coherent* c = as_coherent()) {
        if (c->alpha.imag() == 0.0) {
            return "coh:" + format_real(c->alpha.real());
        }
        return "coh:" + format_real(c->alpha.real()) + "," + format_real(c->alpha.imag());
    }
    if (auto n = fock_number(); n && as_fock_vector()->coeffs[*n] == Complex{1.0, 0.0} &&
                                static_cast<int>(as_fock_vector()->coeffs.size()) == *n + 1) {
        return fmt::format("fock:{}", *n);
    }
    const auto& v = as_fock_vector()->coeffs;
    if (v.size() == 2 && v[0] == v[1] && v[0] == Complex{1.0 / std::sqrt(2.0), 0.0}) {
        return "superpos01";
    }
    std::string out = "vec:";
    for (size_t n = 0; n < v.size(); ++n) {
        if (n > 0) {
            out += ";";
        }
        out += format_real(v[n].real());
        if (v[n].imag() != 0.0) {
            out += (std::signbit(v[n].imag()) ? "-" : "+") + format_real(std::abs(v[n].imag())) + "i";
        }
    }
    return out;
}

}  // namespace cvtele
