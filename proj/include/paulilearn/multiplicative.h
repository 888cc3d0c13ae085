// Copyright 2026 The paulilearn Authors
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

#ifndef PAULILEARN_MULTIPLICATIVE_H
#define PAULILEARN_MULTIPLICATIVE_H

#include <cstddef>

#include "paulilearn/additive.h"
#include "paulilearn/channel.h"
#include "paulilearn/hypothesis.h"

namespace paulilearn {

/// Flip cap per geometric trial is ceil(kRoughEtaCapFactor / eta0).
inline constexpr double kRoughEtaCapFactor = 8.0;
/// Number of geometric trials is ceil(kRoughEtaTrialFactor * ln(1/delta0)).
inline constexpr double kRoughEtaTrialFactor = 48.0;
/// The median of 1/G estimates eta' in [2eta/3, eta]; scaled by this to center on eta.
inline constexpr double kRoughEtaCentering = 1.25;

/// Result of the rough error-rate estimate.
struct EtaEstimate {
    enum class Kind { below_floor, estimate };

    Kind kind = Kind::below_floor;
    /// The estimate when kind == estimate, in (0, 1].
    double value = 0.0;
    size_t probes_used = 0;
    size_t trials_run = 0;
    size_t capped_trials = 0;

    bool below_floor() const { return kind == Kind::below_floor; }
};

/// Trial count and per-trial flip cap used by rough_eta.
size_t rough_eta_trials(double delta0);
size_t rough_eta_cap(double eta0);
/// Largest number of probes rough_eta can make: trials * cap.
size_t rough_eta_probe_limit(double eta0, double delta0);

/// Factor-5 estimate of eta = 1 - p(0^n), or a certificate that eta <= eta0.
///
/// Runs geometric trials of random nontrivial probes, each stopping at the first readout with a
/// 1 or at the flip cap. At least half the trials capped means below_floor; otherwise the
/// estimate is 1.25 times the median of 1/G (capped trials count as 0), clamped to 1.
EtaEstimate rough_eta(const ChannelAccess &channel, double eta0, double delta0, Rng &rng);

/// Bernstein count ceil(((s + 2*gamma/3)/gamma^2) ln(2/delta0)) with s = 4*eta_scale and
/// gamma = epsilon0*eta_scale.
size_t bernstein_samples(double epsilon0, double delta0, double eta_scale);

/// Empirical mean of 1 - H for B = 0^n; estimates eta with multiplicative precision.
double mult_individual_identity(const ProbeBatch &batch, double r = 1.0 / 3.0);

/// Empirical mean of H - factor^{|star(A, b)|} (both over non-failed coordinates) for b != 0^n.
double mult_individual(const ProbeBatch &batch, const PauliString &b, double r = 1.0 / 3.0);

/// Marginal for the multiplicative search: the plain estimator for the all-zero prefix, the
/// shifted estimator of mult_individual otherwise.
double mult_marginal_estimate(const ProbeBatch &batch, const PauliString &prefix, double r = 1.0 / 3.0);

struct MultRecoveryResult {
    EtaEstimate eta;
    /// Meaningful only when eta is not below the floor.
    RecoveryResult recovery;
    /// Stage-two estimate of eta; the hypothesis lists 0^n with 1 - eta_hat.
    double eta_hat = 0.0;
    size_t stage1_probes = 0;
    size_t stage2_samples = 0;

    bool halted_below_floor() const { return eta.below_floor(); }
};

/// Two-stage multiplicative-precision recovery: rough_eta, then one batch sized by
/// bernstein_samples(epsilon/4, 4*epsilon*delta/(9n), 5*eta_est) searched by branch and prune.
MultRecoveryResult mult_population_recover(const ChannelAccess &channel, double eta0, const LearnerParams &params,
                                           Rng &rng);

}  // namespace paulilearn

#endif
