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

#include <gtest/gtest.h>

#include <cmath>

#include "oracle.h"

namespace paulilearn {
namespace {

PauliString P(const std::string &s) { return PauliString::from_string(s); }

// Exact expectation of `estimator` on a one-record batch, over probe A, outcome C and failures.
template <typename Estimator>
double exact_expectation(const ChannelSpec &spec, double nu, Estimator &&estimator) {
    const size_t n = spec.num_qubits();
    double total = 0.0;
    for (const auto &a_digits : oracle::all_strings(n, 1)) {
        PauliString a = P(oracle::text(a_digits));
        for (const auto &[c, p] : spec.atoms()) {
            for (size_t mask = 0; mask < (size_t{1} << n); ++mask) {
                BitString failed(n);
                double weight = p / std::pow(3.0, static_cast<double>(n));
                for (size_t j = 0; j < n; ++j) {
                    bool f = (mask >> j) & 1;
                    failed.set(j, f);
                    weight *= f ? nu : 1.0 - nu;
                }
                if (weight == 0.0) continue;
                ProbeBatch batch(n, ProbeFamily::nontrivial, nu);
                BitString readout = star(a, c);
                for (size_t j = 0; j < n; ++j)
                    if (failed[j]) readout.set(j, false);
                batch.push_back({a, readout, failed});
                total += weight * estimator(batch);
            }
        }
    }
    return total;
}

TEST(ShiftTerm, HasZeroMeanForNonzeroStrings) {
    for (size_t n = 1; n <= 3; ++n) {
        for (const auto &b : oracle::all_strings(n, 0)) {
            bool zero = true;
            for (int x : b) zero = zero && x == 0;
            double sum = 0.0;
            size_t count = 0;
            for (const auto &a : oracle::all_strings(n, 1)) {
                int w = 0;
                for (size_t j = 0; j < n; ++j) w += oracle::star(a[j], b[j]);
                sum += std::pow(-0.5, w);
                ++count;
            }
            EXPECT_NEAR(sum / count, zero ? 1.0 : 0.0, 1e-15) << oracle::text(b);
        }
    }
}

TEST(MultIndividual, VanishesWhenEveryOutcomeIsIdentity) {
    Rng rng(200);
    ProbeBatch batch = probe_batch(ChannelSpec::identity(6), 2000, NoiseConfig{0.1}, rng);
    for (const char *b : {"100000", "012301", "333333"}) EXPECT_DOUBLE_EQ(mult_individual(batch, P(b)), 0.0);
    EXPECT_DOUBLE_EQ(mult_individual_identity(batch), 0.0);
}

TEST(MultIndividual, UnbiasedByExactEnumeration) {
    Rng rng(201);
    for (size_t n = 1; n <= 3; ++n) {
        ChannelSpec spec = random_sparse_spec(n, std::min<size_t>(4, size_t{1} << (2 * n)), 0.05, rng);
        for (double nu : {0.0, 0.2}) {
            double r = NoiseConfig{nu}.erasure_rate();
            EXPECT_NEAR(exact_expectation(spec, nu, [&](const ProbeBatch &b) { return mult_individual_identity(b, r); }),
                        spec.eta(), 1e-12);
            for (const auto &b : oracle::all_strings(n, 0)) {
                PauliString bs = P(oracle::text(b));
                if (bs.is_identity()) continue;
                double e = exact_expectation(spec, nu, [&](const ProbeBatch &batch) { return mult_individual(batch, bs, r); });
                ASSERT_NEAR(e, spec.probability(bs), 1e-12) << "n=" << n << " B=" << bs.str() << " nu=" << nu;
            }
        }
    }
}

TEST(MultIndividual, Errors) {
    Rng rng(202);
    ProbeBatch batch = probe_batch(ChannelSpec::identity(3), 10, {}, rng);
    EXPECT_THROW(mult_individual(batch, P("000")), std::invalid_argument);
    EXPECT_THROW(mult_individual(batch, P("01")), std::invalid_argument);
    ProbeBatch empty(3, ProbeFamily::nontrivial, 0.0);
    EXPECT_THROW(mult_individual(empty, P("010")), std::invalid_argument);
    EXPECT_THROW(mult_individual_identity(empty), std::invalid_argument);
}

TEST(MultMarginal, ZeroPrefixUsesPlainEstimator) {
    Rng rng(203);
    ChannelSpec spec(4, {{P("0000"), 0.9}, {P("0120"), 0.1}});
    ProbeBatch batch = probe_batch(spec, 5000, {}, rng);
    EXPECT_DOUBLE_EQ(mult_marginal_estimate(batch, P("00")), marginal_estimate(batch, P("00"), 1.0 / 3));
    EXPECT_NEAR(mult_marginal_estimate(batch, P("01")), 0.1, 0.03);
}

TEST(SampleCounts, ClosedForms) {
    EXPECT_EQ(rough_eta_trials(0.1), static_cast<size_t>(std::ceil(48 * std::log(10.0))));
    EXPECT_EQ(rough_eta_cap(1e-4), 80000u);
    EXPECT_EQ(rough_eta_probe_limit(1e-4, 0.1), rough_eta_trials(0.1) * 80000u);
    double e0 = 0.075, d0 = 0.001, eta = 0.15;
    double s = 4 * eta, g = e0 * eta;
    EXPECT_EQ(bernstein_samples(e0, d0, eta), static_cast<size_t>(std::ceil((s + 2 * g / 3) / (g * g) * std::log(2 / d0))));
    EXPECT_THROW(bernstein_samples(0.0, 0.1, 0.1), std::invalid_argument);
    EXPECT_THROW(bernstein_samples(0.1, 0.1, 0.0), std::invalid_argument);
    EXPECT_THROW(rough_eta_trials(1.0), std::invalid_argument);
    EXPECT_THROW(rough_eta_cap(0.0), std::invalid_argument);
}

TEST(RoughEta, IdentityChannelIsBelowFloor) {
    PauliChannelAccess channel(ChannelSpec::identity(5));
    Rng rng(204);
    EtaEstimate e = rough_eta(channel, 1e-3, 0.05, rng);
    EXPECT_TRUE(e.below_floor());
    EXPECT_LE(e.probes_used, rough_eta_probe_limit(1e-3, 0.05));
    EXPECT_EQ(e.probes_used, e.capped_trials * rough_eta_cap(1e-3));
}

TEST(RoughEta, FullErrorRate) {
    PauliChannelAccess channel(ChannelSpec(4, {{P("3333"), 1.0}}));
    Rng rng(205);
    EtaEstimate e = rough_eta(channel, 1e-3, 0.05, rng);
    ASSERT_FALSE(e.below_floor());
    EXPECT_GE(e.value, 0.2);
    EXPECT_LE(e.value, 1.0);
}

TEST(RoughEta, WithinFactorFive) {
    ChannelSpec spec(5, {{P("00000"), 0.95}, {P("01200"), 0.03}, {P("30011"), 0.02}});
    PauliChannelAccess channel(spec);
    int good = 0;
    for (uint64_t i = 0; i < 500; ++i) {
        Rng rng = Rng::substream(206, i);
        EtaEstimate e = rough_eta(channel, 1e-3, 0.02, rng);
        if (!e.below_floor() && e.value >= 0.01 && e.value <= 0.25) ++good;
    }
    EXPECT_GE(good, 490);
}

TEST(MultPipeline, HaltsOnIdentityChannel) {
    PauliChannelAccess channel(ChannelSpec::identity(6));
    LearnerParams params;
    params.epsilon = 0.3;
    Rng rng(207);
    MultRecoveryResult r = mult_population_recover(channel, 1e-3, params, rng);
    EXPECT_TRUE(r.halted_below_floor());
    EXPECT_EQ(r.stage2_samples, 0u);
    EXPECT_TRUE(r.recovery.hypothesis.entries.empty());
    EXPECT_LE(r.stage1_probes, rough_eta_probe_limit(1e-3, params.delta));
}

TEST(MultPipeline, RelativeErrorOnSparseChannel) {
    ChannelSpec spec(6, {{P("000000"), 0.95}, {P("012300"), 0.03}, {P("300001"), 0.015}, {P("000220"), 0.005}});
    PauliChannelAccess channel(spec);
    LearnerParams params;
    params.epsilon = 0.3;
    params.delta = 0.1;
    int good = 0;
    for (uint64_t i = 0; i < 20; ++i) {
        Rng rng = Rng::substream(208, i);
        MultRecoveryResult r = mult_population_recover(channel, 1e-3, params, rng);
        ASSERT_FALSE(r.halted_below_floor());
        if (!r.recovery.ok()) continue;
        const auto &h = r.recovery.hypothesis;
        ASSERT_TRUE(h.contains(PauliString(6)));
        EXPECT_DOUBLE_EQ(h.value(PauliString(6)), 1.0 - r.eta_hat);
        EXPECT_LE(h.entries.size(), params.capacity() + 1);
        if (linf_error(h, spec) <= params.epsilon * spec.eta()) ++good;
    }
    EXPECT_GE(good, 17);
}

TEST(MultPipeline, RejectsBadFloor) {
    PauliChannelAccess channel(ChannelSpec::identity(2));
    Rng rng(209);
    EXPECT_THROW(mult_population_recover(channel, 0.0, LearnerParams{}, rng), std::invalid_argument);
}

}  // namespace
}  // namespace paulilearn
