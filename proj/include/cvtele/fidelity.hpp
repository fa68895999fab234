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

#ifndef CVTELE_FIDELITY_HPP
#define CVTELE_FIDELITY_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cvtele/errors.hpp"
#include "cvtele/kernels.hpp"
#include "cvtele/resource.hpp"
#include "cvtele/state.hpp"

namespace cvtele::fidelity {

/// (1 + t/2)^{-1}.
double fidelity_coherent(double t);

/// Number-state fidelity (1-t/2)^n / (1+t/2)^{n+1} P_n((1+t^2/4)/(1-t^2/4)),
/// evaluated through the homogeneous Legendre recurrence so that t = 2 needs
/// no special case.
double fidelity_fock(int n, double t);

/// (2n)! / (2^{2n+1} (n!)^2), the t = 2 value of fidelity_fock.
double fidelity_fock_boundary(int n);

/// (1 + 3t/4 + t^2/4) / (1 + t/2)^3 for (|0> + |1>)/sqrt(2).
double fidelity_superposition01(double t);

/// sum_n lambda^n fidelity_fock(n, t); requires |lambda| < 1.
double fidelity_generating(double lambda, double t);

/// Analytic continuation into the unit disk, for Taylor-coefficient extraction.
Complex fidelity_generating(Complex lambda, double t);

/// Closed form when the state is coherent, a number state or superposition01.
std::optional<double> fidelity_closed_form(const StateSpec& state, double t);

/// (1/pi) integral of exp(-t|nu|^2/2) |C(nu)|^2 by Gauss-Hermite quadrature.
/// The rule is exact for Fock vectors once order >= 2 * cutoff.
double fidelity_numeric(const StateSpec& state, double t, int order = 64);

/// The four equivalent integral forms of the average fidelity.
struct FormsReport {
    // [0] G-weighted |C|^2, [1] (2/t) Wigner-Wigner with exp(-2|b-n|^2/t),
    // [2] Wigner-Wigner with exp(-t|b-n|^2/2), [3] (1/pi) exp(-t|n|^2/2)|C|^2.
    std::array<double, 4> forms{};
    double max_residual = 0.0;
};

FormsReport forms_consistency(const StateSpec& state, double t,
                              const resource::PairQuadrature& quad = {});

/// |F(t) - (2/t) F(4/t)| using fidelity_numeric on both sides.
double scaling_residual(const StateSpec& state, double t);

enum class CurveMethod { ClosedForm, Quadrature, MonteCarlo };

const char* to_string(CurveMethod m);

struct FidelityCurve {
    std::string state;
    std::vector<double> t_grid;
    std::vector<double> values;
    CurveMethod method = CurveMethod::ClosedForm;
    std::vector<double> tolerances;

    bool strictly_decreasing() const;
};

struct CurveOptions {
    // Monte Carlo only.
    std::int64_t samples = 1'000'000;
    std::uint64_t seed = 42;
    kernels::ExecConfig exec{};
};

/// Tabulates F(t). ClosedForm throws DomainError for states without one;
/// MonteCarlo needs a coherent state and records 3 * stderr as tolerance.
FidelityCurve fidelity_curve(const StateSpec& state, std::span<const double> t_grid,
                             CurveMethod method, const CurveOptions& options = {});

struct MaxFidelityOptions {
    int restarts = 10;
    int max_iterations = 500;
    double tolerance = 1e-10;
    std::uint64_t seed = 42;
    kernels::ExecConfig exec{};
};

struct MaxFidelityResult {
    double value = 0.0;
    std::vector<Complex> coeffs;
    // Coherent state |alpha> closest to the maximiser and |<alpha|psi>|^2.
    Complex coherent_alpha;
    double coherent_overlap = 0.0;
    int restart = 0;
    int iterations = 0;
    bool converged = false;
};

class ConvergenceError : public NumericalError {
   public:
    ConvergenceError(const std::string& what, MaxFidelityResult best)
        : NumericalError(what), best_(std::move(best)) {}
    const MaxFidelityResult& best() const { return best_; }

   private:
    MaxFidelityResult best_;
};

/// Maximises F_psi(t) over unit Fock vectors of length `cutoff` (1..30).
/// Each restart iterates psi <- top eigenvector of the Hermitian kernel
/// K[psi]_{mn} = (1/pi) sum_nodes w exp(-t|nu|^2/2) <m|D(nu)|n> conj(C_psi(nu)),
/// which never decreases F because F is a convex function of rho.
/// Ties in value go to the lowest restart index.
MaxFidelityResult max_fidelity(double t, int cutoff, const MaxFidelityOptions& options = {});

/// |alpha> maximising |<alpha|psi>|^2 for a Fock vector.
std::pair<Complex, double> best_coherent_fit(std::span<const Complex> coeffs);

}  // namespace cvtele::fidelity

#endif
