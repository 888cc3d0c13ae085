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

#include "paulilearn/experiment.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <memory>
#include <set>
#include <sstream>
#include <thread>

#include "paulilearn/additive.h"
#include "paulilearn/dense.h"
#include "paulilearn/fourier.h"
#include "paulilearn/io.h"
#include "paulilearn/multiplicative.h"
#include "paulilearn/stats.h"

#ifndef PAULILEARN_SOURCE_FIXTURES
#define PAULILEARN_SOURCE_FIXTURES "fixtures"
#endif

namespace paulilearn {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

namespace {

constexpr const char *kDefaultSpecFixture = "example_n5.spec";
constexpr const char *kDefaultKrausFixture = "amplitude_damping.kraus";
constexpr double kChiSquareLevel = 0.01;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

fs::path resolve(const std::string &name, const fs::path &fixture_dir, const char *extension) {
    if (fs::is_regular_file(name)) {
        return name;
    }
    for (const fs::path &candidate : {fixture_dir / name, fixture_dir / (name + extension)}) {
        if (fs::is_regular_file(candidate)) {
            return candidate;
        }
    }
    throw ConfigError("cannot find '" + name + "' as a file or in fixture directory " + fixture_dir.string());
}

// The channel under study: a known Pauli channel, or a Kraus channel probed through twirling.
struct Source {
    std::string label;
    std::optional<KrausChannel> kraus;
    ChannelSpec truth = ChannelSpec::identity(1);
    bool from_spec = true;

    std::unique_ptr<ChannelAccess> access(double nu) const {
        if (kraus) {
            return std::make_unique<TwirledKrausAccess>(*kraus);
        }
        return std::make_unique<PauliChannelAccess>(truth, NoiseConfig{nu});
    }
};

Source load_source(const ExperimentConfig &config, bool prefer_kraus) {
    Source src;
    try {
        if (!config.kraus.empty() || (prefer_kraus && config.channel.empty())) {
            std::string name = config.kraus.empty() ? kDefaultKrausFixture : config.kraus;
            src.kraus = load_kraus(resolve(name, config.fixture_dir, ".kraus"));
            src.truth = pauli_error_rates(*src.kraus);
            src.label = name;
            src.from_spec = false;
        } else {
            std::string name = config.channel.empty() ? kDefaultSpecFixture : config.channel;
            src.truth = load_spec(resolve(name, config.fixture_dir, ".spec"));
            src.label = name;
        }
    } catch (const ParseError &e) {
        throw ConfigError(e.what());
    } catch (const std::invalid_argument &e) {
        throw ConfigError(e.what());
    }
    return src;
}

json hypothesis_json(const Hypothesis &h) {
    json out = json::array();
    for (const auto &e : h.entries) {
        out.push_back({e.string.str(), e.estimate});
    }
    return out;
}

// Estimate, truth and error for every listed string and every truth atom of weight >= floor.
json atom_errors(const Hypothesis &h, const ChannelSpec &truth, double floor) {
    std::set<PauliString> strings;
    for (const auto &e : h.entries) {
        strings.insert(e.string);
    }
    for (const auto &[c, p] : truth.atoms()) {
        if (p >= floor) {
            strings.insert(c);
        }
    }
    json out = json::array();
    for (const auto &c : strings) {
        double est = h.value(c);
        double p = truth.probability(c);
        out.push_back({{"string", c.str()}, {"truth", p}, {"estimate", est}, {"error", std::abs(est - p)}});
    }
    return out;
}

std::string hypothesis_text(const Hypothesis &h) {
    std::ostringstream out;
    write_hypothesis(out, h);
    return out.str();
}

// Runs body(i) for every trial on `threads` workers; each index is visited once.
void for_each_trial(size_t trials, size_t threads, const std::function<void(size_t)> &body) {
    threads = std::max<size_t>(1, std::min(threads, trials));
    if (threads == 1) {
        for (size_t i = 0; i < trials; ++i) {
            body(i);
        }
        return;
    }
    std::vector<std::thread> pool;
    for (size_t w = 0; w < threads; ++w) {
        pool.emplace_back([&, w] {
            for (size_t i = w; i < trials; i += threads) {
                body(i);
            }
        });
    }
    for (auto &t : pool) {
        t.join();
    }
}

json parameters_json(const ExperimentConfig &config, const Source *src) {
    json p;
    p["mode"] = mode_name(config.mode);
    if (src) {
        p["channel"] = src->label;
        p["channel_kind"] = src->from_spec ? "pauli" : "kraus";
    }
    p["epsilon"] = config.epsilon;
    p["delta"] = config.delta;
    p["eta0"] = config.eta0;
    p["nu"] = config.nu;
    p["seed"] = config.seed;
    p["trials"] = config.trials;
    return p;
}

json channel_json(const ChannelSpec &spec) {
    return {{"n", spec.num_qubits()}, {"atoms", spec.atoms().size()}, {"eta", spec.eta()}};
}

// --- additive ---------------------------------------------------------------------------------

RunResult run_additive(const ExperimentConfig &config) {
    const Source src = load_source(config, false);
    if (src.kraus && config.nu > 0.0) {
        throw ConfigError("measurement failures are only simulated for Pauli channel specs");
    }
    const size_t n = src.truth.num_qubits();
    const LearnerParams params = LearnerParams::with_noise(config.epsilon, config.delta, config.nu);
    const size_t m = params.required_batch(n);
    auto access = src.access(config.nu);

    std::vector<RecoveryResult> results(config.trials);
    std::vector<double> times(config.trials);
    for_each_trial(config.trials, config.threads, [&](size_t i) {
        auto start = Clock::now();
        Rng rng = Rng::substream(config.seed, i);
        ProbeBatch batch = access->batch(m, ProbeFamily::nontrivial, rng);
        results[i] = population_recover_fast(batch, params);
        times[i] = seconds_since(start);
    });

    RunResult out;
    out.report["parameters"] = parameters_json(config, &src);
    out.report["channel"] = channel_json(src.truth);
    out.report["sample_sizes"] = {{"formula", "ceil((2/eps0^2) ln(2/delta0))"},
                                  {"epsilon0", params.epsilon0()},
                                  {"delta0", params.delta0(n)},
                                  {"r", params.r},
                                  {"factor", params.factor()},
                                  {"threshold", params.threshold()},
                                  {"capacity", params.capacity()},
                                  {"m", m}};
    json trials = json::array();
    size_t aborted = 0;
    size_t failures = 0;
    double worst = 0.0;
    for (size_t i = 0; i < config.trials; ++i) {
        const auto &r = results[i];
        json t{{"trial", i}, {"status", r.ok() ? "ok" : "capacity_exceeded"}, {"survivor_counts", r.survivor_counts}};
        if (r.ok()) {
            double err = linf_error(r.hypothesis, src.truth);
            worst = std::max(worst, err);
            failures += err > config.epsilon;
            t["linf_error"] = err;
            t["hypothesis"] = hypothesis_json(r.hypothesis);
            t["atoms"] = atom_errors(r.hypothesis, src.truth, params.threshold());
        } else {
            ++aborted;
            ++failures;
        }
        trials.push_back(std::move(t));
    }
    out.report["trials"] = std::move(trials);
    out.report["summary"] = {{"capacity_exceeded", aborted}, {"failures", failures}, {"max_linf_error", worst}};
    out.timings["trial_seconds"] = times;
    if (results[0].ok()) {
        out.hypothesis = hypothesis_text(results[0].hypothesis);
    }
    out.exit_code = aborted > 0 ? kExitCapacityExceeded : kExitOk;
    return out;
}

// --- multiplicative ---------------------------------------------------------------------------

RunResult run_multiplicative(const ExperimentConfig &config) {
    const Source src = load_source(config, false);
    if (src.kraus && config.nu > 0.0) {
        throw ConfigError("measurement failures are only simulated for Pauli channel specs");
    }
    const size_t n = src.truth.num_qubits();
    const LearnerParams params = LearnerParams::with_noise(config.epsilon, config.delta, config.nu);
    auto access = src.access(config.nu);

    std::vector<MultRecoveryResult> results(config.trials);
    std::vector<double> times(config.trials);
    for_each_trial(config.trials, config.threads, [&](size_t i) {
        auto start = Clock::now();
        Rng rng = Rng::substream(config.seed, i);
        results[i] = mult_population_recover(*access, config.eta0, params, rng);
        times[i] = seconds_since(start);
    });

    RunResult out;
    const double eta = src.truth.eta();
    out.report["parameters"] = parameters_json(config, &src);
    out.report["channel"] = channel_json(src.truth);
    out.report["sample_sizes"] = {
        {"stage1_trials", rough_eta_trials(config.delta)},
        {"stage1_cap", rough_eta_cap(config.eta0)},
        {"stage1_probe_limit", rough_eta_probe_limit(config.eta0, config.delta)},
        {"stage2_formula", "ceil(((s + 2g/3)/g^2) ln(2/delta0)), s = 4*(5 eta_est), g = eps0*(5 eta_est)"},
        {"epsilon0", params.epsilon0()},
        {"delta0", params.delta0(n)},
        {"r", params.r}};
    json trials = json::array();
    size_t aborted = 0;
    size_t below = 0;
    size_t failures = 0;
    for (size_t i = 0; i < config.trials; ++i) {
        const auto &r = results[i];
        json t{{"trial", i}, {"stage1_probes", r.stage1_probes}};
        if (r.halted_below_floor()) {
            ++below;
            t["verdict"] = "below_floor";
            trials.push_back(std::move(t));
            continue;
        }
        t["verdict"] = "estimate";
        t["eta_est"] = r.eta.value;
        t["stage2_samples"] = r.stage2_samples;
        t["eta_hat"] = r.eta_hat;
        t["threshold"] = r.recovery.threshold;
        t["status"] = r.recovery.ok() ? "ok" : "capacity_exceeded";
        t["survivor_counts"] = r.recovery.survivor_counts;
        if (r.recovery.ok()) {
            double err = linf_error(r.recovery.hypothesis, src.truth);
            t["linf_error"] = err;
            t["linf_error_over_eta"] = eta > 0.0 ? err / eta : 0.0;
            failures += err > config.epsilon * eta;
            t["hypothesis"] = hypothesis_json(r.recovery.hypothesis);
            t["atoms"] = atom_errors(r.recovery.hypothesis, src.truth, r.recovery.threshold);
        } else {
            ++aborted;
            ++failures;
        }
        trials.push_back(std::move(t));
    }
    out.report["trials"] = std::move(trials);
    out.report["summary"] = {
        {"below_floor", below}, {"capacity_exceeded", aborted}, {"failures", failures}, {"target", config.epsilon * eta}};
    out.timings["trial_seconds"] = times;
    if (!results[0].halted_below_floor() && results[0].recovery.ok()) {
        out.hypothesis = hypothesis_text(results[0].recovery.hypothesis);
    }
    out.exit_code = aborted > 0 ? kExitCapacityExceeded : below > 0 ? kExitBelowFloor : kExitOk;
    return out;
}

// --- fourier ----------------------------------------------------------------------------------

// Strings in exactly one hypothesis, and the largest estimate gap on shared strings.
json compare_hypotheses(const Hypothesis &a, const Hypothesis &b, const ChannelSpec &truth) {
    json only = json::array();
    double gap = 0.0;
    for (const auto &e : a.entries) {
        if (b.contains(e.string)) {
            gap = std::max(gap, std::abs(e.estimate - b.value(e.string)));
        } else {
            only.push_back({{"string", e.string.str()}, {"in", "gl"}, {"truth", truth.probability(e.string)}});
        }
    }
    for (const auto &e : b.entries) {
        if (!a.contains(e.string)) {
            only.push_back({{"string", e.string.str()}, {"in", "additive"}, {"truth", truth.probability(e.string)}});
        }
    }
    return {{"symmetric_difference", only}, {"max_shared_gap", gap}};
}

RunResult run_fourier(const ExperimentConfig &config) {
    if (config.nu > 0.0) {
        throw ConfigError("fourier mode does not accept measurement failures (nu > 0)");
    }
    const Source src = load_source(config, false);
    const size_t n = src.truth.num_qubits();
    const LearnerParams params = LearnerParams::with_noise(config.epsilon, config.delta, 0.0);
    const size_t m = params.required_batch(n);
    const size_t me = eigenvalue_samples(config.epsilon, config.delta);
    auto access = src.access(0.0);

    // Eigenvalue indices: all of them for n <= 3, else 0^n and 31 random strings.
    std::vector<PauliString> indices;
    if (n <= 3) {
        for (size_t k = 0; k < (size_t{1} << (2 * n)); ++k) {
            indices.push_back(from_packed_index(k, n));
        }
    } else {
        Rng pick = Rng::substream(config.seed, ~uint64_t{0});
        indices.push_back(PauliString(n));
        while (indices.size() < 32) {
            indices.push_back(random_probe_string(n, ProbeFamily::uniform_extended, pick));
        }
    }

    struct Trial {
        RecoveryResult gl;
        RecoveryResult additive;
        std::vector<EigenvalueEstimate> eigen;
        double seconds = 0.0;
    };
    std::vector<Trial> results(config.trials);
    for_each_trial(config.trials, config.threads, [&](size_t i) {
        auto start = Clock::now();
        Rng rng = Rng::substream(config.seed, i);
        Trial &t = results[i];
        t.gl = gl_recover(*access, params, rng);
        t.additive = population_recover_fast(access->batch(m, ProbeFamily::nontrivial, rng), params);
        if (i == 0) {
            for (const auto &a : indices) {
                t.eigen.push_back(estimate_eigenvalue(*access, a, me, rng));
            }
        }
        t.seconds = seconds_since(start);
    });

    RunResult out;
    out.report["parameters"] = parameters_json(config, &src);
    out.report["channel"] = channel_json(src.truth);
    out.report["sample_sizes"] = {{"formula", "ceil((2/eps0^2) ln(2/delta0))"},
                                  {"epsilon0", params.epsilon0()},
                                  {"delta0", params.delta0(n)},
                                  {"m", m},
                                  {"eigenvalue_formula", "ceil((2/eps^2) ln(2/delta))"},
                                  {"eigenvalue_m", me}};
    json trials = json::array();
    size_t aborted = 0;
    for (size_t i = 0; i < config.trials; ++i) {
        const auto &r = results[i];
        json t{{"trial", i},
               {"gl_status", r.gl.ok() ? "ok" : "capacity_exceeded"},
               {"additive_status", r.additive.ok() ? "ok" : "capacity_exceeded"}};
        aborted += !r.gl.ok() + !r.additive.ok();
        if (r.gl.ok()) {
            t["gl_linf_error"] = linf_error(r.gl.hypothesis, src.truth);
            t["gl_hypothesis"] = hypothesis_json(r.gl.hypothesis);
        }
        if (r.additive.ok()) {
            t["additive_linf_error"] = linf_error(r.additive.hypothesis, src.truth);
        }
        if (r.gl.ok() && r.additive.ok()) {
            t["cross_check"] = compare_hypotheses(r.gl.hypothesis, r.additive.hypothesis, src.truth);
        }
        trials.push_back(std::move(t));
    }
    json eigen = json::array();
    double worst = 0.0;
    for (const auto &e : results[0].eigen) {
        double exact = fourier_value(src.truth, e.index);
        worst = std::max(worst, std::abs(exact - e.value));
        eigen.push_back({{"index", e.index.str()}, {"estimate", e.value}, {"exact", exact}, {"samples", e.samples}});
    }
    out.report["trials"] = std::move(trials);
    out.report["eigenvalues"] = {{"rows", eigen}, {"max_error", worst}};
    out.report["summary"] = {{"capacity_exceeded", aborted}};
    std::vector<double> times;
    for (const auto &r : results) {
        times.push_back(r.seconds);
    }
    out.timings["trial_seconds"] = times;
    if (results[0].gl.ok()) {
        out.hypothesis = hypothesis_text(results[0].gl.hypothesis);
    }
    std::ostringstream table;
    write_eigenvalues(table, results[0].eigen);
    out.eigenvalues = table.str();
    out.exit_code = aborted > 0 ? kExitCapacityExceeded : kExitOk;
    return out;
}

// --- oracle-check -----------------------------------------------------------------------------

size_t trit_index(const PauliString &a) {
    size_t index = 0;
    for (size_t j = a.size(); j-- > 0;) {
        index = index * 3 + (a[j] - 1);
    }
    return index;
}

RunResult run_oracle_check(const ExperimentConfig &config) {
    if (config.nu > 0.0) {
        throw ConfigError("oracle-check does not simulate measurement failures");
    }
    Source src = load_source(config, true);
    if (!src.kraus) {
        if (src.truth.num_qubits() > kMaxDenseQubits) {
            throw ConfigError("oracle-check needs n <= " + std::to_string(kMaxDenseQubits));
        }
        src.kraus = KrausChannel::from_pauli_channel(src.truth);
    }
    const KrausChannel &channel = *src.kraus;
    const size_t n = channel.num_qubits();
    const ChannelSpec rates = pauli_error_rates(channel);

    RunResult out;
    out.report["parameters"] = parameters_json(config, &src);
    out.report["channel"] = channel_json(rates);
    bool pass = true;

    json rate_rows = json::array();
    for (const auto &[c, p] : rates.atoms()) {
        rate_rows.push_back({c.str(), p});
    }
    out.report["pauli_error_rates"] = rate_rows;
    if (src.from_spec) {
        double gap = 0.0;
        for (const auto &[c, p] : src.truth.atoms()) {
            gap = std::max(gap, std::abs(p - rates.probability(c)));
        }
        for (const auto &[c, p] : rates.atoms()) {
            gap = std::max(gap, std::abs(p - src.truth.probability(c)));
        }
        bool ok = gap <= 1e-10;
        pass = pass && ok;
        out.report["round_trip"] = {{"max_error", gap}, {"pass", ok}};
    }

    // Twirl law: counts over (probe, readout) cells against the exact Pauli-channel law.
    auto start = Clock::now();
    const size_t probes = static_cast<size_t>(std::pow(3.0, static_cast<double>(n)));
    const size_t outcomes = size_t{1} << n;
    std::vector<uint64_t> counts(probes * outcomes, 0);
    std::vector<double> expected(probes * outcomes, 0.0);
    Rng rng = Rng::substream(config.seed, 0);
    for (size_t s = 0; s < config.samples; ++s) {
        PauliString a = random_probe_string(n, ProbeFamily::nontrivial, rng);
        ProbeRecord rec = twirl_probe(channel, a, rng);
        size_t r = 0;
        for (size_t j = 0; j < n; ++j) {
            r |= static_cast<size_t>(rec.readout[j]) << j;
        }
        ++counts[trit_index(a) * outcomes + r];
    }
    for (size_t k = 0; k < probes; ++k) {
        PauliString a(n);
        size_t index = k;
        for (size_t j = 0; j < n; ++j) {
            a.set(j, static_cast<uint8_t>(index % 3 + 1));
            index /= 3;
        }
        auto law = readout_distribution(rates, a);
        for (size_t r = 0; r < outcomes; ++r) {
            expected[k * outcomes + r] = law[r] / static_cast<double>(probes);
        }
    }
    ChiSquareResult chi = chi_square_test(counts, expected);
    bool chi_ok = chi.p_value > kChiSquareLevel;
    pass = pass && chi_ok;
    out.report["twirl_chi_square"] = {{"samples", config.samples},
                                      {"statistic", chi.statistic},
                                      {"dof", chi.dof},
                                      {"p_value", chi.p_value},
                                      {"level", kChiSquareLevel},
                                      {"pass", chi_ok}};
    out.timings["twirl_seconds"] = seconds_since(start);

    // Learner on twirled data.
    start = Clock::now();
    const LearnerParams params = LearnerParams::with_noise(config.epsilon, config.delta, 0.0);
    TwirledKrausAccess access(channel);
    Rng learn_rng = Rng::substream(config.seed, 1);
    RecoveryResult rec = population_recover_fast(access.batch(params.required_batch(n), ProbeFamily::nontrivial, learn_rng), params);
    json learner{{"m", params.required_batch(n)}, {"status", rec.ok() ? "ok" : "capacity_exceeded"}};
    bool learn_ok = rec.ok();
    if (rec.ok()) {
        double err = linf_error(rec.hypothesis, rates);
        learner["linf_error"] = err;
        learner["hypothesis"] = hypothesis_json(rec.hypothesis);
        learn_ok = err <= config.epsilon;
        out.hypothesis = hypothesis_text(rec.hypothesis);
    }
    learner["pass"] = learn_ok;
    pass = pass && learn_ok;
    out.report["learner"] = learner;
    out.timings["learner_seconds"] = seconds_since(start);

    out.report["pass"] = pass;
    out.exit_code = pass ? kExitOk : kExitCheckFailed;
    return out;
}

// --- bench ------------------------------------------------------------------------------------

template <typename F>
double min_time(size_t reps, F &&f) {
    double best = 0.0;
    for (size_t r = 0; r < reps; ++r) {
        auto start = Clock::now();
        f();
        double t = seconds_since(start);
        best = r == 0 ? t : std::min(best, t);
    }
    return best;
}

RunResult run_bench(const ExperimentConfig &config) {
    if (config.bench_n.empty()) {
        throw ConfigError("bench needs at least one grid point");
    }
    LearnerParams params = LearnerParams::with_noise(config.epsilon, config.delta, config.nu);
    params.sample_count_override = config.samples;

    RunResult out;
    out.report["parameters"] = parameters_json(config, nullptr);
    out.report["parameters"]["m"] = config.samples;
    out.report["parameters"]["grid_n"] = config.bench_n;
    std::ostringstream csv;
    csv << "n,m,epsilon,probe_seconds,probe_records_per_second,fast_seconds,naive_seconds,speedup\n";
    json rows = json::array();
    json timing_rows = json::array();
    for (size_t g = 0; g < config.bench_n.size(); ++g) {
        const size_t n = config.bench_n[g];
        Rng rng = Rng::substream(config.seed, g);
        ChannelSpec spec = random_sparse_spec(n, 5, 0.1, rng);
        std::optional<ProbeBatch> batch;
        double probe_s = min_time(1, [&] { batch = probe_batch(spec, config.samples, NoiseConfig{config.nu}, rng); });
        RecoveryResult fast;
        double fast_s = min_time(config.bench_reps, [&] { fast = population_recover_fast(*batch, params); });
        double naive_s = std::nan("");
        bool same = true;
        if (config.bench_naive) {
            RecoveryResult naive;
            naive_s = min_time(1, [&] { naive = population_recover(*batch, params); });
            same = naive == fast;
        }
        rows.push_back({{"n", n}, {"status", fast.ok() ? "ok" : "capacity_exceeded"},
                        {"survivor_max", fast.survivor_counts.empty()
                                             ? 0
                                             : *std::max_element(fast.survivor_counts.begin(), fast.survivor_counts.end())},
                        {"fast_equals_naive", same}});
        timing_rows.push_back({{"n", n}, {"probe_seconds", probe_s}, {"fast_seconds", fast_s}, {"naive_seconds", naive_s}});
        csv << n << ',' << config.samples << ',' << format_double(config.epsilon) << ',' << format_double(probe_s) << ','
            << format_double(static_cast<double>(config.samples) / probe_s) << ',' << format_double(fast_s) << ','
            << (config.bench_naive ? format_double(naive_s) : "") << ','
            << (config.bench_naive ? format_double(naive_s / fast_s) : "") << '\n';
    }
    out.report["grid"] = rows;
    out.timings["grid"] = timing_rows;
    out.bench_csv = csv.str();
    return out;
}

}  // namespace

std::optional<Mode> parse_mode(std::string_view text) {
    if (text == "additive") return Mode::additive;
    if (text == "multiplicative") return Mode::multiplicative;
    if (text == "fourier") return Mode::fourier;
    if (text == "oracle-check") return Mode::oracle_check;
    if (text == "bench") return Mode::bench;
    return std::nullopt;
}

std::string mode_name(Mode mode) {
    switch (mode) {
        case Mode::additive: return "additive";
        case Mode::multiplicative: return "multiplicative";
        case Mode::fourier: return "fourier";
        case Mode::oracle_check: return "oracle-check";
        case Mode::bench: return "bench";
    }
    return "unknown";
}

fs::path default_fixture_dir() {
    if (const char *env = std::getenv(kFixtureDirEnv); env && *env) {
        return env;
    }
    return PAULILEARN_SOURCE_FIXTURES;
}

void ExperimentConfig::validate() const {
    auto open_unit = [](double v) { return v > 0.0 && v < 1.0; };
    if (!open_unit(epsilon)) throw ConfigError("--epsilon must lie in (0, 1)");
    if (!open_unit(delta)) throw ConfigError("--delta must lie in (0, 1)");
    if (!open_unit(eta0)) throw ConfigError("--eta0 must lie in (0, 1)");
    if (!(nu >= 0.0 && nu <= 0.25)) throw ConfigError("--nu must lie in [0, 1/4]");
    if (trials == 0) throw ConfigError("--trials must be at least 1");
    if (samples == 0) throw ConfigError("--samples must be at least 1");
    if (threads == 0) throw ConfigError("--threads must be at least 1");
    if (bench_reps == 0) throw ConfigError("bench repetitions must be at least 1");
    if (mode == Mode::fourier && nu > 0.0) throw ConfigError("fourier mode does not accept --nu > 0");
    if (!channel.empty() && !kraus.empty()) throw ConfigError("--channel and --kraus are exclusive");
}

RunResult run(const ExperimentConfig &config) {
    config.validate();
    auto start = Clock::now();
    RunResult out;
    switch (config.mode) {
        case Mode::additive: out = run_additive(config); break;
        case Mode::multiplicative: out = run_multiplicative(config); break;
        case Mode::fourier: out = run_fourier(config); break;
        case Mode::oracle_check: out = run_oracle_check(config); break;
        case Mode::bench: out = run_bench(config); break;
    }
    out.report["exit_code"] = out.exit_code;
    out.timings["total_seconds"] = seconds_since(start);
    return out;
}

void write_outputs(const RunResult &result, const fs::path &dir) {
    fs::create_directories(dir);
    auto write = [&](const char *name, const std::string &text) {
        std::ofstream f(dir / name);
        if (!f) {
            throw std::runtime_error("cannot write " + (dir / name).string());
        }
        f << text;
    };
    write("report.json", result.report.dump(2) + "\n");
    write("timings.json", result.timings.dump(2) + "\n");
    if (!result.hypothesis.empty()) {
        write("hypothesis.txt", result.hypothesis);
    }
    if (!result.eigenvalues.empty()) {
        write("eigenvalues.txt", result.eigenvalues);
    }
    if (!result.bench_csv.empty()) {
        write("bench.csv", result.bench_csv);
    }
}

}  // namespace paulilearn
