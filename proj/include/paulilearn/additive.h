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

#ifndef PAULILEARN_ADDITIVE_H
#define PAULILEARN_ADDITIVE_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "paulilearn/channel.h"
#include "paulilearn/hypothesis.h"

namespace paulilearn {

/// Per-coordinate weight base -r/(1-r), evaluated as -1/(1/r - 1) so that r = 1/3 gives exactly -1/2.
inline double crossover_factor(double r) { return -1.0 / (1.0 / r - 1.0); }

/// Parameters of the additive-precision learner.
struct LearnerParams {
    double epsilon = 0.1;
    double delta = 0.05;
    /// Z-channel crossover seen by the learner: 1/3 without failures, nu + (1 - nu)/3 with them.
    double r = 1.0 / 3.0;
    /// Replaces the computed sample count when set.
    std::optional<size_t> sample_count_override;

    /// Parameters for a device with known failure probability nu.
    static LearnerParams with_noise(double epsilon, double delta, double nu);

    /// Throws std::invalid_argument unless 0 < epsilon < 1, 0 < delta < 1 and 1/3 <= r <= 1/2.
    void validate() const;

    /// Per-estimate precision epsilon/4.
    double epsilon0() const { return epsilon / 4.0; }
    /// Per-estimate confidence 4*epsilon*delta/(9n).
    double delta0(size_t n) const { return 4.0 * epsilon * delta / (9.0 * static_cast<double>(n)); }
    /// Survival threshold 2*epsilon0.
    double threshold() const { return 2.0 * epsilon0(); }
    /// Largest allowed support set, floor(4/epsilon).
    size_t capacity() const;
    /// Base of the per-coordinate weight, -r/(1-r).
    double factor() const { return crossover_factor(r); }
    /// Batch size the learner needs on n qubits.
    size_t required_batch(size_t n) const;
};

/// Hoeffding count for the mean of [-1,1] variables: ceil((2/eps0^2) ln(2/delta0)).
size_t required_samples(double epsilon0, double delta0);

/// Histogram over records of the number of non-failed coordinates t < prefix.size() where
/// (star(A, prefix) XOR R)_t = 1. Has prefix.size() + 1 bins.
std::vector<uint64_t> weight_histogram(const ProbeBatch &batch, const PauliString &prefix);

/// (1/m) * sum_h histogram[h] * factor^h, with m the histogram total.
double histogram_mean(std::span<const uint64_t> histogram, double factor);

/// Empirical mean of prod over non-failed t of (-r/(1-r))^{y_t}, y = star(A, b) XOR R.
double individual_estimate(const ProbeBatch &batch, const PauliString &b, double r);

/// individual_estimate on the first prefix.size() coordinates; estimates Pr[C starts with prefix].
double marginal_estimate(const ProbeBatch &batch, const PauliString &prefix, double r);

/// Branch and prune with one marginal_estimate call per candidate prefix.
RecoveryResult population_recover(const ProbeBatch &batch, const LearnerParams &params);

/// Same output as population_recover, computed with per-prefix Hamming-weight vectors that are
/// extended one coordinate per round.
RecoveryResult population_recover_fast(const ProbeBatch &batch, const LearnerParams &params);

}  // namespace paulilearn

#endif
