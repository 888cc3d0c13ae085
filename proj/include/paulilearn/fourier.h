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

#ifndef PAULILEARN_FOURIER_H
#define PAULILEARN_FOURIER_H

#include <cstddef>
#include <vector>

#include "paulilearn/additive.h"
#include "paulilearn/channel.h"
#include "paulilearn/hypothesis.h"

namespace paulilearn {

// Fourier view of a Pauli channel: f(A) = E_{C~p}[(-1)^{A.C}] = lambda_{bar(A)}, where A.C is the
// ordinary F_2^{2n} dot product, and p is the transform of f.

/// Probe with any string over {0,1,2,3}; coordinates with a 0 read 0.
ProbeRecord probe_extended(const ChannelSpec &spec, const PauliString &a, Rng &rng);

struct EigenvalueEstimate {
    PauliString index;
    /// In [-1, 1].
    double value = 0.0;
    size_t samples = 0;
};

/// Hoeffding count for +-1 variables, ceil((2/eps^2) ln(2/delta)).
size_t eigenvalue_samples(double epsilon, double delta);

/// Estimates f(a) by probing with bar(a) `m` times and averaging (-1)^{|R|}.
/// The channel must not have measurement failures.
EigenvalueEstimate estimate_eigenvalue(const ChannelAccess &channel, const PauliString &a, size_t m, Rng &rng);
EigenvalueEstimate estimate_eigenvalue(const ChannelSpec &spec, const PauliString &a, size_t m, Rng &rng);

/// Exact f(a) = sum_C p(C) (-1)^{<bar(a), C>} for a known distribution.
double fourier_value(const ChannelSpec &spec, const PauliString &a);

/// Largest n accepted by the dense transforms below.
inline constexpr size_t kMaxTransformQubits = 8;

/// f(A) for every A, indexed by the packed binary form of A (symbol j at bits 2j, 2j+1).
std::vector<double> eigenvalue_table(const ChannelSpec &spec);

/// p(C) = 4^{-n} sum_A f(A) (-1)^{A.C}, same indexing as eigenvalue_table.
std::vector<double> error_rates_from_eigenvalues(const std::vector<double> &table, size_t n);

/// Packed-index conversions used by the tables.
size_t packed_index(const PauliString &a);
PauliString from_packed_index(size_t index, size_t n);

/// Empirical mean of (-1)^{parity(R) + A.B} on the first b.size() coordinates, where the recorded
/// probe is bar(A). Requires a failure-free batch whose probes are uniform over {0,1,2,3}^n.
double gl_coefficient(const ProbeBatch &batch, const PauliString &b);

/// Branch and prune over gl_coefficient marginals with the additive learner's threshold,
/// capacity and sample count; probes are drawn uniformly from {0,1,2,3}^n.
RecoveryResult gl_recover(const ChannelAccess &channel, const LearnerParams &params, Rng &rng);

}  // namespace paulilearn

#endif
