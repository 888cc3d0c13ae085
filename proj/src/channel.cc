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

#include "paulilearn/channel.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <unordered_set>

namespace paulilearn {

namespace {

constexpr size_t kChunkRecords = 4096;

uint8_t draw_symbol(ProbeFamily family, Rng &rng) {
    return family == ProbeFamily::nontrivial ? static_cast<uint8_t>(rng.uniform_trit() + 1) : rng.uniform_quad();
}

// Writes a uniformly random probe from `family` into the two planes.
void fill_probe_words(size_t n, ProbeFamily family, Rng &rng, std::span<uint64_t> high, std::span<uint64_t> low) {
    for (size_t k = 0; k < high.size(); ++k) {
        size_t bits = std::min<size_t>(64, n - 64 * k);
        uint64_t h = 0;
        uint64_t l = 0;
        for (size_t b = 0; b < bits; ++b) {
            uint64_t sym = draw_symbol(family, rng);
            h |= (sym >> 1) << b;
            l |= (sym & 1) << b;
        }
        high[k] = h;
        low[k] = l;
    }
}

// Independent Bernoulli(nu) failure flags for n coordinates.
void fill_failure_words(size_t n, double nu, Rng &rng, std::span<uint64_t> failed) {
    for (size_t k = 0; k < failed.size(); ++k) {
        size_t bits = std::min<size_t>(64, n - 64 * k);
        uint64_t f = 0;
        for (size_t b = 0; b < bits; ++b) {
            f |= static_cast<uint64_t>(rng.bernoulli(nu)) << b;
        }
        failed[k] = f;
    }
}

}  // namespace

ChannelSpec::ChannelSpec(size_t num_qubits, std::vector<std::pair<PauliString, double>> atoms,
                         Normalization normalization)
    : num_qubits_(num_qubits), atoms_(std::move(atoms)) {
    if (num_qubits_ == 0) {
        throw std::invalid_argument("ChannelSpec: need at least one qubit");
    }
    if (atoms_.empty()) {
        throw std::invalid_argument("ChannelSpec: no atoms");
    }
    std::unordered_set<PauliString> seen;
    double total = 0.0;
    for (const auto &[c, p] : atoms_) {
        if (c.size() != num_qubits_) {
            throw std::invalid_argument("ChannelSpec: atom " + c.str() + " has length " + std::to_string(c.size()) +
                                        ", expected " + std::to_string(num_qubits_));
        }
        if (!std::isfinite(p) || p < 0.0 || p > 1.0) {
            throw std::invalid_argument("ChannelSpec: probability of " + c.str() + " is outside [0, 1]");
        }
        if (!seen.insert(c).second) {
            throw std::invalid_argument("ChannelSpec: duplicate atom " + c.str());
        }
        total += p;
    }
    if (normalization == Normalization::renormalize) {
        if (!(total > 0.0)) {
            throw std::invalid_argument("ChannelSpec: cannot renormalize a zero distribution");
        }
        for (auto &atom : atoms_) {
            atom.second /= total;
        }
    } else if (std::abs(total - 1.0) > kSumTolerance) {
        throw std::invalid_argument("ChannelSpec: probabilities sum to " + std::to_string(total) + ", not 1");
    }
    std::sort(atoms_.begin(), atoms_.end(), [](const auto &a, const auto &b) { return a.first < b.first; });
    cumulative_.reserve(atoms_.size());
    double running = 0.0;
    for (const auto &atom : atoms_) {
        running += atom.second;
        cumulative_.push_back(running);
    }
}

ChannelSpec ChannelSpec::identity(size_t num_qubits) {
    return ChannelSpec(num_qubits, {{PauliString(num_qubits), 1.0}});
}

double ChannelSpec::probability(const PauliString &c) const {
    auto it = std::lower_bound(atoms_.begin(), atoms_.end(), c,
                               [](const auto &atom, const PauliString &key) { return atom.first < key; });
    if (it != atoms_.end() && it->first == c) {
        return it->second;
    }
    return 0.0;
}

double ChannelSpec::eta() const { return 1.0 - probability(PauliString(num_qubits_)); }

size_t ChannelSpec::sample_index(Rng &rng) const {
    double u = rng.uniform_real() * cumulative_.back();
    auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
    if (it == cumulative_.end()) {
        // u landed on the total after rounding; take the last atom with positive weight.
        it = std::prev(it);
        while (it != cumulative_.begin() && atoms_[it - cumulative_.begin()].second == 0.0) {
            --it;
        }
    }
    return static_cast<size_t>(it - cumulative_.begin());
}

PauliString sample_outcome(const ChannelSpec &spec, Rng &rng) { return spec.atoms()[spec.sample_index(rng)].first; }

void NoiseConfig::validate() const {
    if (!(nu >= 0.0 && nu <= 0.25)) {
        throw std::invalid_argument("NoiseConfig: nu must lie in [0, 1/4]");
    }
}

ProbeBatch::ProbeBatch(size_t num_qubits, ProbeFamily family, double nu)
    : num_qubits_(num_qubits), words_per_row_(words_for(num_qubits)), family_(family), nu_(nu) {
    if (num_qubits == 0) {
        throw std::invalid_argument("ProbeBatch: need at least one qubit");
    }
}

bool ProbeBatch::has_failures() const {
    return std::any_of(failed_.begin(), failed_.end(), [](uint64_t w) { return w != 0; });
}

void ProbeBatch::reserve(size_t m) {
    probe_high_.reserve(m * words_per_row_);
    probe_low_.reserve(m * words_per_row_);
    readout_.reserve(m * words_per_row_);
    failed_.reserve(m * words_per_row_);
}

size_t ProbeBatch::append_rows(size_t m) {
    size_t first = size_;
    size_ += m;
    probe_high_.resize(size_ * words_per_row_, 0);
    probe_low_.resize(size_ * words_per_row_, 0);
    readout_.resize(size_ * words_per_row_, 0);
    failed_.resize(size_ * words_per_row_, 0);
    return first;
}

void ProbeBatch::push_back(const ProbeRecord &record) {
    if (record.probe.size() != num_qubits_ || record.readout.size() != num_qubits_ ||
        record.failed.size() != num_qubits_) {
        throw std::invalid_argument("ProbeBatch: record length does not match batch");
    }
    size_t t = append_rows(1);
    for (size_t k = 0; k < words_per_row_; ++k) {
        probe_high(t)[k] = record.probe.high_words()[k];
        probe_low(t)[k] = record.probe.low_words()[k];
        failed(t)[k] = record.failed.words()[k];
        readout(t)[k] = record.readout.words()[k] & ~record.failed.words()[k];
    }
}

ProbeRecord ProbeBatch::record(size_t t) const {
    if (t >= size_) {
        throw std::out_of_range("ProbeBatch: record index out of range");
    }
    ProbeRecord rec{PauliString(num_qubits_), BitString(num_qubits_), BitString(num_qubits_)};
    for (size_t k = 0; k < words_per_row_; ++k) {
        rec.probe.high_words()[k] = probe_high(t)[k];
        rec.probe.low_words()[k] = probe_low(t)[k];
        rec.readout.words()[k] = readout(t)[k];
        rec.failed.words()[k] = failed(t)[k];
    }
    return rec;
}

ProbeRecord probe_outcome(const PauliString &a, const PauliString &c, const NoiseConfig &noise, Rng &rng) {
    noise.validate();
    ProbeRecord rec{a, star(a, c), BitString(a.size())};
    if (noise.nu > 0.0) {
        fill_failure_words(a.size(), noise.nu, rng, rec.failed.words());
        for (size_t k = 0; k < rec.readout.words().size(); ++k) {
            rec.readout.words()[k] &= ~rec.failed.words()[k];
        }
    }
    return rec;
}

ProbeRecord probe(const ChannelSpec &spec, const PauliString &a, const NoiseConfig &noise, Rng &rng) {
    if (a.size() != spec.num_qubits()) {
        throw std::invalid_argument("probe: probe length does not match channel");
    }
    if (!a.is_nontrivial_probe()) {
        throw std::invalid_argument("probe: probe string contains 0; use probe_extended");
    }
    const PauliString &c = sample_outcome(spec, rng);
    return probe_outcome(a, c, noise, rng);
}

ProbeBatch probe_batch(const ChannelSpec &spec, size_t m, const NoiseConfig &noise, Rng &rng, ProbeFamily family,
                       size_t threads) {
    if (m == 0) {
        throw std::invalid_argument("probe_batch: need at least one record");
    }
    noise.validate();
    const size_t n = spec.num_qubits();
    ProbeBatch batch(n, family, noise.nu);
    batch.append_rows(m);
    const uint64_t base_seed = rng.next_u64();
    const size_t num_chunks = (m + kChunkRecords - 1) / kChunkRecords;
    const size_t nw = batch.words_per_row();

    auto run_chunk = [&](size_t chunk) {
        Rng local = Rng::substream(base_seed, chunk);
        size_t begin = chunk * kChunkRecords;
        size_t end = std::min(m, begin + kChunkRecords);
        for (size_t t = begin; t < end; ++t) {
            const PauliString &c = spec.atoms()[spec.sample_index(local)].first;
            auto high = batch.probe_high(t);
            auto low = batch.probe_low(t);
            fill_probe_words(n, family, local, high, low);
            auto out = batch.readout(t);
            for (size_t k = 0; k < nw; ++k) {
                out[k] = (high[k] & c.low_words()[k]) ^ (low[k] & c.high_words()[k]);
            }
            if (noise.nu > 0.0) {
                auto failed = batch.failed(t);
                fill_failure_words(n, noise.nu, local, failed);
                for (size_t k = 0; k < nw; ++k) {
                    out[k] &= ~failed[k];
                }
            }
        }
    };

    threads = std::max<size_t>(1, std::min(threads, num_chunks));
    if (threads == 1) {
        for (size_t chunk = 0; chunk < num_chunks; ++chunk) {
            run_chunk(chunk);
        }
    } else {
        std::vector<std::thread> workers;
        workers.reserve(threads);
        for (size_t w = 0; w < threads; ++w) {
            workers.emplace_back([&, w] {
                for (size_t chunk = w; chunk < num_chunks; chunk += threads) {
                    run_chunk(chunk);
                }
            });
        }
        for (auto &worker : workers) {
            worker.join();
        }
    }
    return batch;
}

BitString reinterpret(const ProbeRecord &record, const PauliString &b) {
    if (b.size() != record.probe.size()) {
        throw std::invalid_argument("reinterpret: length mismatch");
    }
    BitString out = star(record.probe, b);
    out ^= record.readout;
    if (record.failed.size() == out.size()) {
        auto words = out.words();
        for (size_t k = 0; k < words.size(); ++k) {
            words[k] &= ~record.failed.words()[k];
        }
    }
    return out;
}

PauliString random_probe_string(size_t n, ProbeFamily family, Rng &rng) {
    PauliString a(n);
    fill_probe_words(n, family, rng, a.high_words(), a.low_words());
    return a;
}

ChannelSpec random_sparse_spec(size_t n, size_t count, double floor, Rng &rng) {
    if (count == 0 || !(floor >= 0.0) || floor * static_cast<double>(count) > 1.0) {
        throw std::invalid_argument("random_sparse_spec: need count >= 1 and count*floor <= 1");
    }
    if (n < 32 && count > (size_t{1} << (2 * n))) {
        throw std::invalid_argument("random_sparse_spec: more atoms than strings");
    }
    std::vector<PauliString> strings;
    while (strings.size() < count) {
        PauliString c = random_probe_string(n, ProbeFamily::uniform_extended, rng);
        if (std::find(strings.begin(), strings.end(), c) == strings.end()) {
            strings.push_back(std::move(c));
        }
    }
    std::vector<double> u(count);
    double total = 0.0;
    for (auto &v : u) {
        v = rng.uniform_real();
        total += v;
    }
    const double spread = 1.0 - floor * static_cast<double>(count);
    std::vector<std::pair<PauliString, double>> atoms;
    for (size_t k = 0; k < count; ++k) {
        double w = total > 0.0 ? u[k] / total : 1.0 / static_cast<double>(count);
        atoms.emplace_back(std::move(strings[k]), floor + spread * w);
    }
    return ChannelSpec(n, std::move(atoms), ChannelSpec::Normalization::renormalize);
}

bool ChannelAccess::random_probe_is_nonzero(Rng &rng) const {
    ProbeRecord rec = probe(random_probe_string(num_qubits(), ProbeFamily::nontrivial, rng), rng);
    return !rec.readout.is_zero();
}

ProbeBatch ChannelAccess::batch(size_t m, ProbeFamily family, Rng &rng) const {
    if (m == 0) {
        throw std::invalid_argument("ChannelAccess::batch: need at least one record");
    }
    ProbeBatch out(num_qubits(), family, failure_rate());
    out.reserve(m);
    for (size_t t = 0; t < m; ++t) {
        out.push_back(probe(random_probe_string(num_qubits(), family, rng), rng));
    }
    return out;
}

PauliChannelAccess::PauliChannelAccess(ChannelSpec spec, NoiseConfig noise) : spec_(std::move(spec)), noise_(noise) {
    noise_.validate();
}

ProbeRecord PauliChannelAccess::probe(const PauliString &a, Rng &rng) const {
    if (a.size() != spec_.num_qubits()) {
        throw std::invalid_argument("probe: probe length does not match channel");
    }
    return probe_outcome(a, sample_outcome(spec_, rng), noise_, rng);
}

bool PauliChannelAccess::random_probe_is_nonzero(Rng &rng) const {
    // Only coordinates where C is nonzero can read 1; the probe symbols elsewhere do not
    // affect the event, so they are not drawn.
    const PauliString &c = sample_outcome(spec_, rng);
    for (size_t j = 0; j < c.size(); ++j) {
        uint8_t cj = c[j];
        if (cj == 0) {
            continue;
        }
        auto aj = static_cast<uint8_t>(rng.uniform_trit() + 1);
        if (star_symbol(aj, cj) && !(noise_.nu > 0.0 && rng.bernoulli(noise_.nu))) {
            return true;
        }
    }
    return false;
}

ProbeBatch PauliChannelAccess::batch(size_t m, ProbeFamily family, Rng &rng) const {
    return probe_batch(spec_, m, noise_, rng, family);
}

}  // namespace paulilearn
