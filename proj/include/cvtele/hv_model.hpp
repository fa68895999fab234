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

#ifndef CVTELE_HV_MODEL_HPP
#define CVTELE_HV_MODEL_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cvtele/errors.hpp"
#include "cvtele/kernels.hpp"
#include "cvtele/random.hpp"
#include "cvtele/state.hpp"
#include "cvtele/teleport_sim.hpp"

namespace cvtele::hv {

/// Fidelity at or above which no non-Gaussian pure state fits the kick model.
inline constexpr double kGoldStandard = 2.0 / 3.0;

/// Square grid [-extent, extent]^2 with the given spacing, both axes inclusive.
struct SpatialGrid {
    double extent = 4.0;
    double resolution = 0.05;

    std::vector<Complex> points() const;
};

/// lo, lo + step, ..., up to hi inclusive (values rounded to 1e-12).
std::vector<double> uniform_grid(double lo, double hi, double step);

struct KickReport {
    std::string state;
    std::vector<double> t_grid;
    std::vector<double> min_wigner_per_t;
    double t_star = 0.0;
    double epsilon = 0.0;
    SpatialGrid spatial_grid;
    // min_wigner_per_t nondecreasing along t_grid (checked, not assumed).
    bool monotone = true;
};

class ThresholdNotFoundError : public NumericalError {
   public:
    ThresholdNotFoundError(const std::string& what, KickReport report)
        : NumericalError(what), report_(std::move(report)) {}
    const KickReport& report() const { return report_; }

   private:
    KickReport report_;
};

/// Wigner function of the Gaussian-kicked state rho', i.e. the s = -t
/// quasidistribution. At t = 1 this is the Q function.
double kicked_quasidist(const StateSpec& state, double t, Complex nu);

/// Scans the kicked quasidistribution minimum over `grid` for each t and
/// reports the first t whose minimum is >= -epsilon.
/// Throws ThresholdNotFoundError (carrying the report) if none qualifies.
KickReport min_kick_threshold(const StateSpec& state, std::span<const double> t_grid,
                              const SpatialGrid& grid, double epsilon,
                              const kernels::ExecConfig& exec = {});

/// F_rho(1): overlap of the Wigner and Q functions.
double threshold_fidelity(const StateSpec& state);

/// Exact sampler for the Q function: Gaussian for coherent states, Gamma
/// radius for number states, rejection from a broad Gaussian otherwise.
class QSampler {
   public:
    explicit QSampler(const StateSpec& state);

    Complex operator()(numerics::RandomStream& stream) const;

    /// Rejection bound (ratio Q / proposal); 1 for the direct samplers.
    double bound() const { return bound_; }

   private:
    enum class Kind { Coherent, Number, Rejection };
    StateSpec state_;
    Kind kind_;
    int number_ = 0;
    double bound_ = 1.0;
};

struct CheatOptions {
    kernels::ExecConfig exec{};
    std::int64_t block_size = 1 << 14;
};

/// Kick-then-perfectly-teleport process: beta ~ Q_rho, average of pi W_rho(beta).
sim::FidelityEstimate cheat_run(const StateSpec& state, std::int64_t n, numerics::StreamKey seed,
                                const CheatOptions& options = {});

/// Gaussian pure states have nonnegative Wigner functions. Among the
/// supported states that is exactly the coherent states and e^{i phi}|0>.
bool is_gaussian(const StateSpec& state);

enum class VerdictKind { ClassicallyExplicable, BeyondPhaseSpaceModel, GoldStandard };

const char* to_string(VerdictKind k);

struct Verdict {
    VerdictKind kind = VerdictKind::ClassicallyExplicable;
    double threshold = 0.0;
    double achieved = 0.0;
};

/// Throws DomainError unless achieved is in [0, 1].
Verdict verdict(const StateSpec& state, double achieved);

}  // namespace cvtele::hv

#endif
