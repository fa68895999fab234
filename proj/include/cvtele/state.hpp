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

#ifndef CVTELE_STATE_HPP
#define CVTELE_STATE_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cvtele/numerics.hpp"

namespace cvtele {

/// Largest photon number supported anywhere in the library. Factorial-scale
/// intermediates stay inside double precision up to here.
inline constexpr int kMaxFockIndex = 50;

/// Coherent state |alpha>. Quadrature variance 1/4 per component, nu = x + ip.
struct Coherent {
    Complex alpha;
};

/// Finite superposition sum_n coeffs[n] |n>.
struct FockVector {
    std::vector<Complex> coeffs;
};

/// Pure input state of the teleported mode.
class StateSpec {
   public:
    static StateSpec coherent(Complex alpha);
    static StateSpec fock(int n);
    /// (|0> + |1>) / sqrt(2).
    static StateSpec superposition01();
    /// Requires unit norm within 1e-12 and length in [1, kMaxFockIndex + 1].
    static StateSpec fock_vector(std::vector<Complex> coeffs);
    /// Rescales to unit norm; `input_norm` receives the norm before rescaling.
    static StateSpec normalized(std::vector<Complex> coeffs, double* input_norm = nullptr);

    bool is_coherent() const { return std::holds_alternative<Coherent>(repr_); }
    const Coherent* as_coherent() const { return std::get_if<Coherent>(&repr_); }
    const FockVector* as_fock_vector() const { return std::get_if<FockVector>(&repr_); }

    /// n if the state is |n> up to a global phase.
    std::optional<int> fock_number() const;
    /// True if the coefficients are (1, 1)/sqrt(2) up to a global phase.
    bool is_superposition01() const;

    /// Length of the Fock vector (0 for coherent states).
    int cutoff() const;

    /// Mean complex amplitude <a>.
    Complex mean_amplitude() const;

    /// Canonical text form, parseable by the CLI state grammar.
    std::string descriptor() const;

   private:
    explicit StateSpec(std::variant<Coherent, FockVector> repr) : repr_(std::move(repr)) {}

    std::variant<Coherent, FockVector> repr_;
};

}  // namespace cvtele

#endif
