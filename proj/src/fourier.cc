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

#include "paulilearn/fourier.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace paulilearn {

ProbeRecord probe_extended(const ChannelSpec &spec, const PauliString &a, Rng &rng) {
    if (a.size() != spec.num_qubits()) {
        throw std::invalid_argument("probe_extended: probe length does not match channel");
    }
    // star(0, c) = 0, so coordinates with a 0 symbol read 0 without special handling.
    return ProbeRecord{a, star(a, sample_outcome(spec, rng)), BitString(a.size())};
}

size_t eigenvalue_samples(double epsilon, double delta) { return required_samples(epsilon, delta); }

EigenvalueEstimate estimate_eigenvalue(const ChannelAccess &channel, const PauliString &a, size_t m, Rng &rng) {
    if (m == 0) {
        throw std::invalid_argument("estimate_eigenvalue: need at least one sample");
    }
    if (channel.failure_rate() > 0.0) {
        throw std::invalid_argument("estimate_eigenvalue: measurement failures are not supported");
    }
    if (a.size() != channel.num_qubits()) {
        throw std::invalid_argument("estimate_eigenvalue: index length does not match channel");
    }
    const PauliString probe_string = bar(a);
    int64_t signed_count = 0;
    for (size_t t = 0; t < m; ++t) {
        ProbeRecord rec = channel.probe(probe_string, rng);
        signed_count += (rec.readout.weight() & 1) ? -1 : 1;
    }
    double value = static_cast<double>(signed_count) / static_cast<double>(m);
    return {a, std::clamp(value, -1.0, 1.0), m};
}

EigenvalueEstimate estimate_eigenvalue(const ChannelSpec &spec, const PauliString &a, size_t m, Rng &rng) {
    return estimate_eigenvalue(PauliChannelAccess(spec), a, m, rng);
}

double fourier_value(const ChannelSpec &spec, const PauliString &a) {
    const PauliString a_bar = bar(a);
    double sum = 0.0;
    for (const auto &[c, p] : spec.atoms()) {
        sum += symplectic_dot(a_bar, c) ? -p : p;
    }
    return sum;
}

size_t packed_index(const PauliString &a) {
    if (a.size() > 31) {
        throw std::invalid_argument("packed_index: string too long");
    }
    size_t index = 0;
    for (size_t j = 0; j < a.size(); ++j) {
        index |= static_cast<size_t>(a[j]) << (2 * j);
    }
    return index;
}

PauliString from_packed_index(size_t index, size_t n) {
    PauliString a(n);
    for (size_t j = 0; j < n; ++j) {
        a.set(j, static_cast<uint8_t>((index >> (2 * j)) & 3));
    }
    return a;
}

namespace {

void check_transform_size(size_t n) {
    if (n == 0 || n > kMaxTransformQubits) {
        throw std::invalid_argument("dense Fourier transforms support 1 to " + std::to_string(kMaxTransformQubits) +
                                    " qubits");
    }
}

// In-place unnormalized Walsh-Hadamard transform over F_2^{2n}.
void walsh_hadamard(std::vector<double> &v) {
    for (size_t half = 1; half < v.size(); half <<= 1) {
        for (size_t block = 0; block < v.size(); block += 2 * half) {
            for (size_t i = block; i < block + half; ++i) {
                double x = v[i];
                double y = v[i + half];
                v[i] = x + y;
                v[i + half] = x - y;
            }
        }
    }
}

}  // namespace

std::vector<double> eigenvalue_table(const ChannelSpec &spec) {
    const size_t n = spec.num_qubits();
    check_transform_size(n);
    std::vector<double> table(size_t{1} << (2 * n), 0.0);
    for (const auto &[c, p] : spec.atoms()) {
        table[packed_index(c)] += p;
    }
    walsh_hadamard(table);
    return table;
}

std::vector<double> error_rates_from_eigenvalues(const std::vector<double> &table, size_t n) {
    check_transform_size(n);
    if (table.size() != (size_t{1} << (2 * n))) {
        throw std::invalid_argument("error_rates_from_eigenvalues: table size is not 4^n");
    }
    std::vector<double> rates = table;
    walsh_hadamard(rates);
    const double scale = 1.0 / static_cast<double>(rates.size());
    for (auto &v : rates) {
        v *= scale;
    }
    return rates;
}

double gl_coefficient(const ProbeBatch &batch, const PauliString &b) {
    if (batch.empty()) {
        throw std::invalid_argument("gl_coefficient: empty batch");
    }
    if (batch.family() != ProbeFamily::uniform_extended) {
        throw std::invalid_argument("gl_coefficient: probes must be uniform over {0,1,2,3}^n");
    }
    if (batch.nu() > 0.0 || batch.has_failures()) {
        throw std::invalid_argument("gl_coefficient: batches with measurement failures are not supported");
    }
    const size_t len = b.size();
    if (len == 0 || len > batch.num_qubits()) {
        throw std::invalid_argument("gl_coefficient: prefix length must lie in [1, n]");
    }
    const size_t nw = words_for(len);
    const uint64_t last = tail_mask(len);
    int64_t signed_count = 0;
    for (size_t t = 0; t < batch.size(); ++t) {
        // The recorded probe is bar(A): A.high = probe.low, A.low = probe.high.
        auto a_high = batch.probe_low(t);
        auto a_low = batch.probe_high(t);
        auto r = batch.readout(t);
        uint64_t acc = 0;
        for (size_t k = 0; k < nw; ++k) {
            uint64_t mask = k + 1 == nw ? last : ~uint64_t{0};
            acc ^= (r[k] ^ (a_high[k] & b.high_words()[k]) ^ (a_low[k] & b.low_words()[k])) & mask;
        }
        signed_count += (std::popcount(acc) & 1) ? -1 : 1;
    }
    return static_cast<double>(signed_count) / static_cast<double>(batch.size());
}

RecoveryResult gl_recover(const ChannelAccess &channel, const LearnerParams &params, Rng &rng) {
    params.validate();
    if (channel.failure_rate() > 0.0) {
        throw std::invalid_argument("gl_recover: measurement failures are not supported");
    }
    const size_t n = channel.num_qubits();
    const size_t m = params.required_batch(n);
    ProbeBatch batch = channel.batch(m, ProbeFamily::uniform_extended, rng);
    RecoveryResult result = branch_and_prune(n, params.threshold(), params.capacity(),
                                             [&](const PauliString &prefix) { return gl_coefficient(batch, prefix); });
    result.samples = m;
    result.hypothesis.epsilon = params.epsilon;
    return result;
}

}  // namespace paulilearn
