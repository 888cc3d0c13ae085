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

#ifndef PAULILEARN_HYPOTHESIS_H
#define PAULILEARN_HYPOTHESIS_H

#include <cstddef>
#include <vector>

#include "paulilearn/channel.h"
#include "paulilearn/pauli.h"

namespace paulilearn {

struct HypothesisEntry {
    PauliString string;
    double estimate;

    friend bool operator==(const HypothesisEntry &, const HypothesisEntry &) = default;
};

/// Estimated error rates; strings that are not listed have estimate 0.
struct Hypothesis {
    std::vector<HypothesisEntry> entries;
    double epsilon = 0.0;

    double value(const PauliString &c) const;
    bool contains(const PauliString &c) const;
    /// Sorts by estimate descending, ties broken lexicographically.
    void sort_canonical();

    friend bool operator==(const Hypothesis &, const Hypothesis &) = default;
};

/// max_C |hypothesis(C) - truth(C)| over all strings.
double linf_error(const Hypothesis &hypothesis, const ChannelSpec &truth);

enum class RecoveryStatus {
    ok,
    /// Some support set outgrew the capacity bound; this is the low-probability failure event.
    capacity_exceeded,
};

/// Outcome of a branch-and-prune run.
struct RecoveryResult {
    RecoveryStatus status = RecoveryStatus::ok;
    /// Empty when status is capacity_exceeded.
    Hypothesis hypothesis;
    /// survivor_counts[j-1] = |Omega_j| for every support set that was built.
    std::vector<size_t> survivor_counts;
    size_t samples = 0;
    double threshold = 0.0;
    size_t capacity = 0;

    bool ok() const { return status == RecoveryStatus::ok; }
    friend bool operator==(const RecoveryResult &, const RecoveryResult &) = default;
};

/// Coordinate-by-coordinate branch and prune.
///
/// Omega_1 = {0,1,2,3}. In round j every prefix of Omega_j is extended by each symbol in order and
/// kept when `estimate(prefix)` is at least `threshold`. Sets are built in lexicographic order.
/// The run aborts as soon as a set holds more than `capacity` prefixes. The output lists Omega_n
/// with the estimates that admitted them (for n = 1, all four symbols with their estimates).
template <typename Estimator>
RecoveryResult branch_and_prune(size_t n, double threshold, size_t capacity, Estimator &&estimate) {
    RecoveryResult result;
    result.threshold = threshold;
    result.capacity = capacity;

    std::vector<HypothesisEntry> current;
    for (uint8_t b = 0; b < 4; ++b) {
        PauliString s(1);
        s.set(0, b);
        current.push_back({s, n == 1 ? estimate(s) : 0.0});
    }
    result.survivor_counts.push_back(current.size());
    if (current.size() > capacity) {
        result.status = RecoveryStatus::capacity_exceeded;
        return result;
    }
    for (size_t j = 1; j < n; ++j) {
        std::vector<HypothesisEntry> next;
        for (const auto &parent : current) {
            for (uint8_t b = 0; b < 4; ++b) {
                PauliString child(j + 1);
                for (size_t k = 0; k < j; ++k) {
                    child.set(k, parent.string[k]);
                }
                child.set(j, b);
                double value = estimate(child);
                if (value >= threshold) {
                    next.push_back({std::move(child), value});
                    if (next.size() > capacity) {
                        result.survivor_counts.push_back(next.size());
                        result.status = RecoveryStatus::capacity_exceeded;
                        return result;
                    }
                }
            }
        }
        result.survivor_counts.push_back(next.size());
        current = std::move(next);
    }
    result.hypothesis.entries = std::move(current);
    result.hypothesis.sort_canonical();
    return result;
}

}  // namespace paulilearn

#endif
