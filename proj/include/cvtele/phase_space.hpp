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

#ifndef CVTELE_PHASE_SPACE_HPP
#define CVTELE_PHASE_SPACE_HPP

#include <vector>

#include "cvtele/numerics.hpp"
#include "cvtele/state.hpp"

namespace cvtele::phase {

enum class QuasiDistKind { Wigner, Husimi, SOrdered };

/// Which quasidistribution to evaluate. SOrdered carries the Gaussian
/// smoothing t >= 0 (s = -t); t = 0 is Wigner and t = 1 is Husimi.
struct QuasiDist {
    QuasiDistKind kind = QuasiDistKind::Wigner;
    double t = 0.0;

    static QuasiDist wigner() { return {QuasiDistKind::Wigner, 0.0}; }
    static QuasiDist husimi() { return {QuasiDistKind::Husimi, 1.0}; }
    static QuasiDist s_ordered(double t) { return {QuasiDistKind::SOrdered, t}; }
};

/// <m|D(nu)|n> with D(nu) = exp(nu a^dag - nu^* a).
/// Throws DomainError for m or n beyond kMaxFockIndex.
Complex displacement_element(int m, int n, Complex nu);

/// Symmetrically ordered characteristic function <psi|D(nu)|psi>.
Complex characteristic_fn(const StateSpec& state, Complex nu);

/// Wigner function, normalized to unit integral over d^2 nu.
/// Fock vectors go through the parity form W = (2/pi) <psi|D(2 nu) P|psi>.
double wigner(const StateSpec& state, Complex nu);

/// Q(beta) = |<beta|psi>|^2 / pi.
double husimi_q(const StateSpec& state, Complex beta);

/// (2 / pi t) * integral of exp(-2|nu - mu|^2 / t) W(mu), by Gauss-Hermite
/// quadrature centred on the smoothing kernel. Equals wigner() at t = 0.
double s_ordered(const StateSpec& state, Complex nu, double t, int order = 64);

/// Same quantity from closed-form s-ordered Fock matrix elements. Finite at
/// t = 1, where the textbook (s+1)/(s-1) factorisation is singular.
double s_ordered_series(const StateSpec& state, Complex nu, double t);

double quasidist(const StateSpec& state, Complex nu, const QuasiDist& kind);

}  // namespace cvtele::phase

#endif
