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

#include "paulilearn/multiplicative.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace paulilearn {

namespace {

void check_open_unit(double value, const char *what) {
    if (!(value > 0.0 && value < 1.0)) {
        throw std::invalid_argument(std::string(what) + " must lie in (0, 1)");
    }
}

std::vector<double> powers(double factor, size_t count) {
    std::vector<double> out(count + 1);
    double p = 1.0;
    for (auto &v : out) {
        v = p;
        p *= factor;
    }
    return out;
}

// Mean over records of factor^{|y|} - factor^{|star(A, prefix)|} on the first prefix.size()
// coordinates, failed coordinates excluded from both weights.
double shifted_mean(const ProbeBatch &batch, const PauliString &prefix, double r) {
    if (batch.empty()) {
        throw std::invalid_argument("mult_individual: empty batch");
    }
    const size_t len = prefix.size();
    if (len == 0 || len > batch.num_qubits()) {
        throw std::invalid_argument("mult_individual: prefix length must lie in [1, n]");
    }
    const std::vector<double> pw = powers(crossover_factor(r), len);
    const size_t nw = words_for(len);
    const uint64_t last = tail_mask(len);
    auto bh = prefix.high_words();
    auto bl = prefix.low_words();
    double sum = 0.0;
    for (size_t t = 0; t < batch.size(); ++t) {
        auto ah = batch.probe_high(t);
        auto al = batch.probe_low(t);
        auto rd = batch.readout(t);
        auto f = batch.failed(t);
        size_t hy = 0;
        size_t ha = 0;
        for (size_t k = 0; k < nw; ++k) {
            uint64_t keep = ~f[k] & (k + 1 == nw ? last : ~uint64_t{0});
            uint64_t s = (ah[k] & bl[k]) ^ (al[k] & bh[k]);
            hy += std::popcount((s ^ rd[k]) & keep);
            ha += std::popcount(s & keep);
        }
        sum += pw[hy] - pw[ha];
    }
    return sum / static_cast<double>(batch.size());
}

}  // namespace

size_t rough_eta_trials(double delta0) {
    check_open_unit(delta0, "rough_eta: delta0");
    return static_cast<size_t>(std::ceil(kRoughEtaTrialFactor * std::log(1.0 / delta0)));
}

size_t rough_eta_cap(double eta0) {
    check_open_unit(eta0, "rough_eta: eta0");
    return static_cast<size_t>(std::ceil(kRoughEtaCapFactor / eta0));
}

size_t rough_eta_probe_limit(double eta0, double delta0) { return rough_eta_trials(delta0) * rough_eta_cap(eta0); }

EtaEstimate rough_eta(const ChannelAccess &channel, double eta0, double delta0, Rng &rng) {
    const size_t trials = rough_eta_trials(delta0);
    const size_t cap = rough_eta_cap(eta0);
    EtaEstimate out;
    std::vector<double> inverse_flips;
    inverse_flips.reserve(trials);
    for (size_t trial = 0; trial < trials; ++trial) {
        size_t flips = 0;
        bool heads = false;
        while (flips < cap && !heads) {
            heads = channel.random_probe_is_nonzero(rng);
            ++flips;
        }
        out.probes_used += flips;
        ++out.trials_run;
        if (heads) {
            inverse_flips.push_back(1.0 / static_cast<double>(flips));
        } else {
            ++out.capped_trials;
            inverse_flips.push_back(0.0);
            // Half the trials capped already decides the verdict.
            if (2 * out.capped_trials >= trials) {
                out.kind = EtaEstimate::Kind::below_floor;
                return out;
            }
        }
    }
    std::sort(inverse_flips.begin(), inverse_flips.end());
    double median = inverse_flips[(trials - 1) / 2];
    out.kind = EtaEstimate::Kind::estimate;
    out.value = std::min(1.0, kRoughEtaCentering * median);
    return out;
}

size_t bernstein_samples(double epsilon0, double delta0, double eta_scale) {
    check_open_unit(epsilon0, "bernstein_samples: epsilon0");
    check_open_unit(delta0, "bernstein_samples: delta0");
    if (!(eta_scale > 0.0)) {
        throw std::invalid_argument("bernstein_samples: eta scale must be positive");
    }
    double s = 4.0 * eta_scale;
    double gamma = epsilon0 * eta_scale;
    return static_cast<size_t>(std::ceil((s + 2.0 * gamma / 3.0) / (gamma * gamma) * std::log(2.0 / delta0)));
}

double mult_individual_identity(const ProbeBatch &batch, double r) {
    if (batch.empty()) {
        throw std::invalid_argument("mult_individual_identity: empty batch");
    }
    std::vector<uint64_t> histogram = weight_histogram(batch, PauliString(batch.num_qubits()));
    const double factor = crossover_factor(r);
    double sum = 0.0;
    double power = 1.0;
    for (uint64_t count : histogram) {
        sum += static_cast<double>(count) * (1.0 - power);
        power *= factor;
    }
    return sum / static_cast<double>(batch.size());
}

double mult_individual(const ProbeBatch &batch, const PauliString &b, double r) {
    if (b.size() != batch.num_qubits()) {
        throw std::invalid_argument("mult_individual: string length does not match batch");
    }
    if (b.is_identity()) {
        throw std::invalid_argument("mult_individual: b is the identity; use mult_individual_identity");
    }
    return shifted_mean(batch, b, r);
}

double mult_marginal_estimate(const ProbeBatch &batch, const PauliString &prefix, double r) {
    if (prefix.is_identity()) {
        return marginal_estimate(batch, prefix, r);
    }
    return shifted_mean(batch, prefix, r);
}

MultRecoveryResult mult_population_recover(const ChannelAccess &channel, double eta0, const LearnerParams &params,
                                           Rng &rng) {
    params.validate();
    check_open_unit(eta0, "mult_population_recover: eta0");
    const size_t n = channel.num_qubits();

    MultRecoveryResult out;
    out.eta = rough_eta(channel, eta0, params.delta, rng);
    out.stage1_probes = out.eta.probes_used;
    if (out.eta.below_floor()) {
        return out;
    }

    const double eta_scale = 5.0 * out.eta.value;
    const size_t m = params.sample_count_override ? *params.sample_count_override
                                                  : bernstein_samples(params.epsilon0(), params.delta0(n), eta_scale);
    ProbeBatch batch = channel.batch(m, ProbeFamily::nontrivial, rng);
    out.stage2_samples = m;
    out.eta_hat = mult_individual_identity(batch, params.r);

    // Prune at 2*epsilon0 times an estimate of eta, floored by the guaranteed lower bound eta_est/5.
    const double threshold = params.threshold() * std::max(out.eta_hat, out.eta.value / 5.0);
    // The all-zero prefix always survives on top of the heavy nonzero prefixes.
    const size_t capacity = params.capacity() + 1;
    out.recovery = branch_and_prune(n, threshold, capacity, [&](const PauliString &prefix) {
        return mult_marginal_estimate(batch, prefix, params.r);
    });
    out.recovery.samples = m;
    out.recovery.hypothesis.epsilon = params.epsilon;
    if (out.recovery.ok()) {
        auto &entries = out.recovery.hypothesis.entries;
        PauliString zero(n);
        auto it = std::find_if(entries.begin(), entries.end(), [&](const auto &e) { return e.string == zero; });
        if (it != entries.end()) {
            it->estimate = 1.0 - out.eta_hat;
        } else {
            entries.push_back({zero, 1.0 - out.eta_hat});
        }
        out.recovery.hypothesis.sort_canonical();
    }
    return out;
}

}  // namespace paulilearn
