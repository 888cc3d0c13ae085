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

#ifndef PAULILEARN_CHANNEL_H
#define PAULILEARN_CHANNEL_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "paulilearn/pauli.h"
#include "paulilearn/rng.h"

namespace paulilearn {

/// Sparse Pauli error distribution p over {0,1,2,3}^n.
class ChannelSpec {
   public:
    enum class Normalization {
        /// Probabilities must already sum to 1 within 1e-12.
        strict,
        /// Probabilities are divided by their (positive) sum.
        renormalize,
    };

    static constexpr double kSumTolerance = 1e-12;

    ChannelSpec(size_t num_qubits, std::vector<std::pair<PauliString, double>> atoms,
                Normalization normalization = Normalization::strict);

    /// The channel that applies the identity with probability 1.
    static ChannelSpec identity(size_t num_qubits);

    size_t num_qubits() const { return num_qubits_; }
    /// Atoms sorted lexicographically by string.
    const std::vector<std::pair<PauliString, double>> &atoms() const { return atoms_; }
    /// p(c), zero for strings that are not atoms.
    double probability(const PauliString &c) const;
    /// Nontrivial error rate 1 - p(0^n).
    double eta() const;

    /// Index into atoms() drawn with probability equal to the atom's weight.
    size_t sample_index(Rng &rng) const;

   private:
    size_t num_qubits_;
    std::vector<std::pair<PauliString, double>> atoms_;
    std::vector<double> cumulative_;
};

/// Draws a channel outcome C ~ p.
PauliString sample_outcome(const ChannelSpec &spec, Rng &rng);

/// Independent heralded measurement failures with per-coordinate probability nu.
struct NoiseConfig {
    double nu = 0.0;

    /// Throws std::invalid_argument unless 0 <= nu <= 1/4.
    void validate() const;
    /// Effective erasure probability nu + (1 - nu)/3 seen by the learner.
    double erasure_rate() const { return nu + (1.0 - nu) / 3.0; }
};

/// One probe interaction.
///
/// `failed` marks coordinates whose measurement reported "?"; their readout bit is stored as 0
/// and must be ignored by consumers.
struct ProbeRecord {
    PauliString probe;
    BitString readout;
    BitString failed;
};

/// How the probe strings of a batch were chosen.
enum class ProbeFamily {
    /// Uniform over {1,2,3}^n.
    nontrivial,
    /// Uniform over {0,1,2,3}^n.
    uniform_extended,
};

/// A batch of probe records stored as packed bit planes, one row of words per record.
class ProbeBatch {
   public:
    ProbeBatch(size_t num_qubits, ProbeFamily family, double nu);

    size_t num_qubits() const { return num_qubits_; }
    size_t size() const { return size_; }
    bool empty() const { return size_ == 0; }
    size_t words_per_row() const { return words_per_row_; }
    ProbeFamily family() const { return family_; }
    /// Failure probability the batch was generated with.
    double nu() const { return nu_; }
    bool has_failures() const;

    void reserve(size_t m);
    void push_back(const ProbeRecord &record);
    /// Appends `m` zeroed rows and returns the index of the first.
    size_t append_rows(size_t m);

    ProbeRecord record(size_t t) const;

    std::span<const uint64_t> probe_high(size_t t) const { return row(probe_high_, t); }
    std::span<const uint64_t> probe_low(size_t t) const { return row(probe_low_, t); }
    std::span<const uint64_t> readout(size_t t) const { return row(readout_, t); }
    std::span<const uint64_t> failed(size_t t) const { return row(failed_, t); }
    std::span<uint64_t> probe_high(size_t t) { return row(probe_high_, t); }
    std::span<uint64_t> probe_low(size_t t) { return row(probe_low_, t); }
    std::span<uint64_t> readout(size_t t) { return row(readout_, t); }
    std::span<uint64_t> failed(size_t t) { return row(failed_, t); }

    friend bool operator==(const ProbeBatch &a, const ProbeBatch &b) = default;

   private:
    std::span<const uint64_t> row(const std::vector<uint64_t> &plane, size_t t) const {
        return {plane.data() + t * words_per_row_, words_per_row_};
    }
    std::span<uint64_t> row(std::vector<uint64_t> &plane, size_t t) {
        return {plane.data() + t * words_per_row_, words_per_row_};
    }

    size_t num_qubits_;
    size_t words_per_row_;
    ProbeFamily family_;
    double nu_;
    size_t size_ = 0;
    std::vector<uint64_t> probe_high_;
    std::vector<uint64_t> probe_low_;
    std::vector<uint64_t> readout_;
    std::vector<uint64_t> failed_;
};

/// Probe against a known channel outcome: readout = star(a, c), then independent failures.
ProbeRecord probe_outcome(const PauliString &a, const PauliString &c, const NoiseConfig &noise, Rng &rng);

/// Draws C ~ spec and probes it with the nontrivial string `a` (no zero symbols).
ProbeRecord probe(const ChannelSpec &spec, const PauliString &a, const NoiseConfig &noise, Rng &rng);

/// `m` independent records with uniform probes from `family`.
///
/// Records are generated in fixed-size chunks, each from its own substream of a base seed drawn
/// from `rng`, so the output does not depend on `threads`.
ProbeBatch probe_batch(const ChannelSpec &spec, size_t m, const NoiseConfig &noise, Rng &rng,
                       ProbeFamily family = ProbeFamily::nontrivial, size_t threads = 1);

/// Readout of the B-altered channel: star(record.probe, b) XOR record.readout.
/// Failed coordinates read 0 and keep their flag in record.failed.
BitString reinterpret(const ProbeRecord &record, const PauliString &b);

/// Query access to a channel through probes.
class ChannelAccess {
   public:
    virtual ~ChannelAccess() = default;

    virtual size_t num_qubits() const = 0;
    /// Per-coordinate measurement failure probability.
    virtual double failure_rate() const { return 0.0; }
    /// One probe with string `a`.
    virtual ProbeRecord probe(const PauliString &a, Rng &rng) const = 0;

    /// Uniformly random nontrivial probe; true when some non-failed readout bit is 1.
    virtual bool random_probe_is_nonzero(Rng &rng) const;
    /// `m` probes with uniform strings from `family`.
    virtual ProbeBatch batch(size_t m, ProbeFamily family, Rng &rng) const;
};

/// Access to a Pauli channel given by its error rates.
class PauliChannelAccess : public ChannelAccess {
   public:
    explicit PauliChannelAccess(ChannelSpec spec, NoiseConfig noise = {});

    size_t num_qubits() const override { return spec_.num_qubits(); }
    double failure_rate() const override { return noise_.nu; }
    ProbeRecord probe(const PauliString &a, Rng &rng) const override;
    bool random_probe_is_nonzero(Rng &rng) const override;
    ProbeBatch batch(size_t m, ProbeFamily family, Rng &rng) const override;

    const ChannelSpec &spec() const { return spec_; }

   private:
    ChannelSpec spec_;
    NoiseConfig noise_;
};

/// Uniformly random string from `family`.
PauliString random_probe_string(size_t n, ProbeFamily family, Rng &rng);

/// `count` distinct uniformly random strings with weights floor + (1 - count*floor) u_k / sum(u),
/// u_k uniform on [0, 1).
ChannelSpec random_sparse_spec(size_t n, size_t count, double floor, Rng &rng);

}  // namespace paulilearn

#endif
