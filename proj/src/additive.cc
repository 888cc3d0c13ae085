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

#include "paulilearn/additive.h"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstring>
#include <limits>
#include <memory>
#include <stdexcept>
#include <tuple>

namespace paulilearn {

double Hypothesis::value(const PauliString &c) const {
    for (const auto &entry : entries) {
        if (entry.string == c) {
            return entry.estimate;
        }
    }
    return 0.0;
}

bool Hypothesis::contains(const PauliString &c) const {
    return std::any_of(entries.begin(), entries.end(), [&](const auto &e) { return e.string == c; });
}

void Hypothesis::sort_canonical() {
    std::sort(entries.begin(), entries.end(), [](const HypothesisEntry &a, const HypothesisEntry &b) {
        if (a.estimate != b.estimate) {
            return a.estimate > b.estimate;
        }
        return a.string < b.string;
    });
}

double linf_error(const Hypothesis &hypothesis, const ChannelSpec &truth) {
    double worst = 0.0;
    for (const auto &entry : hypothesis.entries) {
        worst = std::max(worst, std::abs(entry.estimate - truth.probability(entry.string)));
    }
    for (const auto &[c, p] : truth.atoms()) {
        if (!hypothesis.contains(c)) {
            worst = std::max(worst, p);
        }
    }
    return worst;
}

LearnerParams LearnerParams::with_noise(double epsilon, double delta, double nu) {
    NoiseConfig{nu}.validate();
    LearnerParams params;
    params.epsilon = epsilon;
    params.delta = delta;
    params.r = NoiseConfig{nu}.erasure_rate();
    return params;
}

void LearnerParams::validate() const {
    if (!(epsilon > 0.0 && epsilon < 1.0)) {
        throw std::invalid_argument("LearnerParams: epsilon must lie in (0, 1)");
    }
    if (!(delta > 0.0 && delta < 1.0)) {
        throw std::invalid_argument("LearnerParams: delta must lie in (0, 1)");
    }
    // A small slack admits r = 1/3 computed as nu + (1 - nu)/3 with nu = 0.
    if (!(r >= 1.0 / 3.0 - 1e-12 && r <= 0.5)) {
        throw std::invalid_argument("LearnerParams: r must lie in [1/3, 1/2]");
    }
    if (sample_count_override && *sample_count_override == 0) {
        throw std::invalid_argument("LearnerParams: sample count override must be positive");
    }
}

size_t LearnerParams::capacity() const { return static_cast<size_t>(std::floor(4.0 / epsilon + 1e-9)); }

size_t LearnerParams::required_batch(size_t n) const {
    if (sample_count_override) {
        return *sample_count_override;
    }
    return required_samples(epsilon0(), delta0(n));
}

size_t required_samples(double epsilon0, double delta0) {
    if (!(epsilon0 > 0.0 && epsilon0 < 1.0) || !(delta0 > 0.0 && delta0 < 1.0)) {
        throw std::invalid_argument("required_samples: parameters must lie in (0, 1)");
    }
    return static_cast<size_t>(std::ceil(2.0 / (epsilon0 * epsilon0) * std::log(2.0 / delta0)));
}

std::vector<uint64_t> weight_histogram(const ProbeBatch &batch, const PauliString &prefix) {
    const size_t len = prefix.size();
    if (len == 0 || len > batch.num_qubits()) {
        throw std::invalid_argument("weight_histogram: prefix length must lie in [1, n]");
    }
    std::vector<uint64_t> histogram(len + 1, 0);
    const size_t nw = words_for(len);
    const uint64_t last = tail_mask(len);
    auto bh = prefix.high_words();
    auto bl = prefix.low_words();
    for (size_t t = 0; t < batch.size(); ++t) {
        auto ah = batch.probe_high(t);
        auto al = batch.probe_low(t);
        auto r = batch.readout(t);
        auto f = batch.failed(t);
        size_t h = 0;
        for (size_t k = 0; k < nw; ++k) {
            uint64_t y = ((ah[k] & bl[k]) ^ (al[k] & bh[k]) ^ r[k]) & ~f[k];
            if (k + 1 == nw) {
                y &= last;
            }
            h += std::popcount(y);
        }
        ++histogram[h];
    }
    return histogram;
}

double histogram_mean(std::span<const uint64_t> histogram, double factor) {
    uint64_t total = 0;
    double sum = 0.0;
    double power = 1.0;
    for (uint64_t count : histogram) {
        total += count;
        sum += static_cast<double>(count) * power;
        power *= factor;
    }
    if (total == 0) {
        throw std::invalid_argument("histogram_mean: empty histogram");
    }
    return sum / static_cast<double>(total);
}

double marginal_estimate(const ProbeBatch &batch, const PauliString &prefix, double r) {
    if (batch.empty()) {
        throw std::invalid_argument("marginal_estimate: empty batch");
    }
    if (prefix.size() == 0) {
        throw std::invalid_argument("marginal_estimate: empty prefix");
    }
    if (prefix.size() > batch.num_qubits()) {
        throw std::invalid_argument("marginal_estimate: prefix longer than the probed strings");
    }
    return histogram_mean(weight_histogram(batch, prefix), crossover_factor(r));
}

double individual_estimate(const ProbeBatch &batch, const PauliString &b, double r) {
    if (b.size() != batch.num_qubits()) {
        throw std::invalid_argument("individual_estimate: string length does not match batch");
    }
    return marginal_estimate(batch, b, r);
}

namespace {

void check_recovery_inputs(const ProbeBatch &batch, const LearnerParams &params) {
    params.validate();
    size_t needed = params.required_batch(batch.num_qubits());
    if (batch.size() < needed) {
        throw std::invalid_argument("population_recover: batch has " + std::to_string(batch.size()) +
                                    " records, need " + std::to_string(needed));
    }
}

}  // namespace

RecoveryResult population_recover(const ProbeBatch &batch, const LearnerParams &params) {
    check_recovery_inputs(batch, params);
    RecoveryResult result = branch_and_prune(batch.num_qubits(), params.threshold(), params.capacity(),
                                             [&](const PauliString &prefix) {
                                                 return marginal_estimate(batch, prefix, params.r);
                                             });
    result.samples = batch.size();
    result.hypothesis.epsilon = params.epsilon;
    return result;
}

namespace {

// Per-record, per-coordinate code: bits 0-1 probe symbol, bit 2 readout, bit 3 failure flag.
constexpr size_t kCodes = 16;

using IncrementTable = std::array<std::array<uint8_t, kCodes>, 4>;

IncrementTable make_increments() {
    IncrementTable table{};
    for (uint8_t b = 0; b < 4; ++b) {
        for (uint8_t code = 0; code < kCodes; ++code) {
            bool failed = code & 8;
            bool readout = code & 4;
            table[b][code] = failed ? 0 : static_cast<uint8_t>(star_symbol(code & 3, b) ^ readout);
        }
    }
    return table;
}

constexpr std::array<uint64_t, 256> make_spread() {
    std::array<uint64_t, 256> table{};
    for (size_t v = 0; v < 256; ++v) {
        for (size_t c = 0; c < 8; ++c) {
            if ((v >> c) & 1) {
                table[v] |= uint64_t{1} << (8 * c);
            }
        }
    }
    return table;
}

// Bit c of a byte moved to the low bit of byte c.
constexpr std::array<uint64_t, 256> kSpread = make_spread();

// In-place transpose of an 8x8 byte matrix whose row i is x[i], byte c being column c.
void transpose8(uint64_t x[8]) {
    auto stage = [&](size_t d, uint64_t mask, int shift) {
        for (size_t i = 0; i < 8; ++i) {
            if (!(i & d)) {
                uint64_t t = ((x[i] >> shift) ^ x[i + d]) & mask;
                x[i + d] ^= t;
                x[i] ^= t << shift;
            }
        }
    };
    stage(4, 0x00000000FFFFFFFFULL, 32);
    stage(2, 0x0000FFFF0000FFFFULL, 16);
    stage(1, 0x00FF00FF00FF00FFULL, 8);
}

uint8_t code_at(const ProbeBatch &batch, size_t t, size_t j) {
    const size_t k = j / 64;
    const size_t b = j % 64;
    return static_cast<uint8_t>((((batch.probe_high(t)[k] >> b) & 1) << 1) | ((batch.probe_low(t)[k] >> b) & 1) |
                                (((batch.readout(t)[k] >> b) & 1) << 2) | (((batch.failed(t)[k] >> b) & 1) << 3));
}

// Column-major code matrix: codes[j * m + t]. Built in tiles of 8 records by 8 coordinates.
std::unique_ptr<uint8_t[]> build_codes(const ProbeBatch &batch) {
    const size_t n = batch.num_qubits();
    const size_t m = batch.size();
    auto codes = std::make_unique_for_overwrite<uint8_t[]>(n * m);
    size_t t0 = 0;
    for (; t0 + 8 <= m; t0 += 8) {
        for (size_t k = 0; k < batch.words_per_row(); ++k) {
            uint64_t ah[8], al[8], rd[8], fl[8];
            for (size_t i = 0; i < 8; ++i) {
                ah[i] = batch.probe_high(t0 + i)[k];
                al[i] = batch.probe_low(t0 + i)[k];
                rd[i] = batch.readout(t0 + i)[k];
                fl[i] = batch.failed(t0 + i)[k];
            }
            const size_t bits = std::min<size_t>(64, n - 64 * k);
            for (size_t q = 0; 8 * q < bits; ++q) {
                const size_t s = 8 * q;
                uint64_t x[8];
                for (size_t i = 0; i < 8; ++i) {
                    x[i] = kSpread[(al[i] >> s) & 0xff] | kSpread[(ah[i] >> s) & 0xff] << 1 |
                           kSpread[(rd[i] >> s) & 0xff] << 2 | kSpread[(fl[i] >> s) & 0xff] << 3;
                }
                transpose8(x);
                const size_t columns = std::min<size_t>(8, bits - s);
                for (size_t c = 0; c < columns; ++c) {
                    std::memcpy(codes.get() + (64 * k + s + c) * m + t0, &x[c], 8);
                }
            }
        }
    }
    for (size_t t = t0; t < m; ++t) {
        for (size_t j = 0; j < n; ++j) {
            codes[j * m + t] = code_at(batch, t, j);
        }
    }
    return codes;
}

struct Survivor {
    PauliString prefix;
    double estimate;
    std::vector<uint16_t> weights;
    // Smallest and largest entry of weights.
    size_t low = 0;
    size_t high = 0;
};

// First and last nonzero bins.
std::pair<size_t, size_t> occupied_range(const std::vector<uint64_t> &histogram) {
    size_t low = 0;
    while (histogram[low] == 0) {
        ++low;
    }
    size_t high = histogram.size() - 1;
    while (histogram[high] == 0) {
        --high;
    }
    return {low, high};
}

}  // namespace

RecoveryResult population_recover_fast(const ProbeBatch &batch, const LearnerParams &params) {
    check_recovery_inputs(batch, params);
    const size_t n = batch.num_qubits();
    const size_t m = batch.size();
    if (n > std::numeric_limits<uint16_t>::max()) {
        throw std::invalid_argument("population_recover_fast: too many qubits for 16-bit weights");
    }
    if (m > std::numeric_limits<uint32_t>::max()) {
        throw std::invalid_argument("population_recover_fast: batch too large for 32-bit counts");
    }
    const double factor = params.factor();
    const double threshold = params.threshold();
    const size_t capacity = params.capacity();
    const IncrementTable inc = make_increments();
    const std::unique_ptr<uint8_t[]> codes = build_codes(batch);

    RecoveryResult result;
    result.threshold = threshold;
    result.capacity = capacity;
    result.samples = m;
    result.hypothesis.epsilon = params.epsilon;

    std::vector<Survivor> current;
    const uint8_t *column = codes.get();
    for (uint8_t b = 0; b < 4; ++b) {
        Survivor s{PauliString(1), 0.0, std::vector<uint16_t>(m)};
        s.prefix.set(0, b);
        std::vector<uint64_t> histogram(2, 0);
        for (size_t t = 0; t < m; ++t) {
            uint8_t w = inc[b][column[t]];
            s.weights[t] = w;
            ++histogram[w];
        }
        s.estimate = histogram_mean(histogram, factor);
        std::tie(s.low, s.high) = occupied_range(histogram);
        current.push_back(std::move(s));
    }
    result.survivor_counts.push_back(current.size());
    if (current.size() > capacity) {
        result.status = RecoveryStatus::capacity_exceeded;
        return result;
    }

    // 32-bit counts keep one parent weight per cache line.
    std::vector<uint32_t> joint;
    std::vector<uint64_t> histogram;
    std::vector<std::vector<uint16_t>> spare;
    for (size_t j = 1; j < n; ++j) {
        column = codes.get() + j * m;
        std::vector<Survivor> next;
        for (const auto &parent : current) {
            // Joint counts of (parent weight, code) determine every child's histogram.
            const size_t low = parent.low;
            const size_t rows = parent.high - low + 1;
            joint.assign(rows * kCodes, 0);
            const uint16_t *h = parent.weights.data();
            for (size_t t = 0; t < m; ++t) {
                ++joint[(h[t] - low) * kCodes + column[t]];
            }
            for (uint8_t b = 0; b < 4; ++b) {
                histogram.assign(j + 2, 0);
                for (size_t w = 0; w < rows; ++w) {
                    const uint32_t *row = joint.data() + w * kCodes;
                    for (size_t code = 0; code < kCodes; ++code) {
                        histogram[low + w + inc[b][code]] += row[code];
                    }
                }
                double value = histogram_mean(histogram, factor);
                if (value < threshold) {
                    continue;
                }
                Survivor child{PauliString(j + 1), value, {}};
                std::tie(child.low, child.high) = occupied_range(histogram);
                if (spare.empty()) {
                    child.weights.resize(m);
                } else {
                    child.weights = std::move(spare.back());
                    spare.pop_back();
                }
                for (size_t k = 0; k < j; ++k) {
                    child.prefix.set(k, parent.prefix[k]);
                }
                child.prefix.set(j, b);
                const auto &step = inc[b];
                uint16_t *out = child.weights.data();
                for (size_t t = 0; t < m; ++t) {
                    out[t] = static_cast<uint16_t>(h[t] + step[column[t]]);
                }
                next.push_back(std::move(child));
                if (next.size() > capacity) {
                    result.survivor_counts.push_back(next.size());
                    result.status = RecoveryStatus::capacity_exceeded;
                    return result;
                }
            }
        }
        result.survivor_counts.push_back(next.size());
        for (auto &parent : current) {
            spare.push_back(std::move(parent.weights));
        }
        current = std::move(next);
    }

    for (auto &s : current) {
        result.hypothesis.entries.push_back({std::move(s.prefix), s.estimate});
    }
    result.hypothesis.sort_canonical();
    return result;
}

}  // namespace paulilearn
