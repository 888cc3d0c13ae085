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

#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace paulilearn {
namespace {

namespace fs = std::filesystem;

ExperimentConfig config_for(Mode mode) {
    ExperimentConfig c;
    c.mode = mode;
    c.seed = 42;
    return c;
}

std::string slurp(const fs::path &p) {
    std::ifstream in(p);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

TEST(Mode, Names) {
    for (Mode m : {Mode::additive, Mode::multiplicative, Mode::fourier, Mode::oracle_check, Mode::bench})
        EXPECT_EQ(parse_mode(mode_name(m)), m);
    EXPECT_EQ(mode_name(Mode::oracle_check), "oracle-check");
    EXPECT_FALSE(parse_mode("Additive").has_value());
}

TEST(Config, Validation) {
    auto rejects = [](auto edit) {
        ExperimentConfig c;
        edit(c);
        EXPECT_THROW(c.validate(), ConfigError);
    };
    rejects([](auto &c) { c.epsilon = 0; });
    rejects([](auto &c) { c.epsilon = 1; });
    rejects([](auto &c) { c.delta = 1.5; });
    rejects([](auto &c) { c.eta0 = 0; });
    rejects([](auto &c) { c.nu = 0.3; });
    rejects([](auto &c) { c.trials = 0; });
    rejects([](auto &c) { c.samples = 0; });
    rejects([](auto &c) {
        c.mode = Mode::fourier;
        c.nu = 0.1;
    });
    rejects([](auto &c) {
        c.channel = "example_n5";
        c.kraus = "dephasing";
    });
    EXPECT_NO_THROW(ExperimentConfig{}.validate());
}

TEST(Config, MissingChannelIsConfigError) {
    ExperimentConfig c = config_for(Mode::additive);
    c.channel = "no_such_channel";
    EXPECT_THROW(run(c), ConfigError);
    c.channel = "";
    c.kraus = "no_such_channel";
    EXPECT_THROW(run(c), ConfigError);
}

TEST(FixtureDir, EnvironmentOverride) {
    const char *old = std::getenv(kFixtureDirEnv);
    std::string saved = old ? old : "";
    setenv(kFixtureDirEnv, "/tmp/somewhere", 1);
    EXPECT_EQ(default_fixture_dir(), fs::path("/tmp/somewhere"));
    if (old) {
        setenv(kFixtureDirEnv, saved.c_str(), 1);
    } else {
        unsetenv(kFixtureDirEnv);
    }
    EXPECT_TRUE(fs::is_regular_file(default_fixture_dir() / "example_n5.spec"));
}

TEST(Run, AdditiveIsDeterministicAcrossThreadCounts) {
    ExperimentConfig c = config_for(Mode::additive);
    c.trials = 4;
    RunResult a = run(c);
    c.threads = 3;
    RunResult b = run(c);
    EXPECT_EQ(a.exit_code, kExitOk);
    EXPECT_EQ(a.report.dump(), b.report.dump());
    EXPECT_EQ(a.hypothesis, b.hypothesis);
    EXPECT_EQ(a.report["trials"].size(), 4u);
    EXPECT_EQ(a.report["summary"]["failures"], 0);
    EXPECT_LE(a.report["summary"]["max_linf_error"].get<double>(), c.epsilon);
    c.seed = 43;
    EXPECT_NE(run(c).report.dump(), a.report.dump());
}

TEST(Run, AdditiveWithFailures) {
    ExperimentConfig c = config_for(Mode::additive);
    c.nu = 0.2;
    RunResult r = run(c);
    EXPECT_EQ(r.exit_code, kExitOk);
    EXPECT_DOUBLE_EQ(r.report["sample_sizes"]["r"].get<double>(), 0.2 + 0.8 / 3);
}

TEST(Run, MultiplicativeBelowFloor) {
    ExperimentConfig c = config_for(Mode::multiplicative);
    c.channel = "identity_n10";
    c.epsilon = 0.3;
    RunResult r = run(c);
    EXPECT_EQ(r.exit_code, kExitBelowFloor);
    EXPECT_EQ(r.report["exit_code"], 3);
}

TEST(Run, MultiplicativeSparse) {
    ExperimentConfig c = config_for(Mode::multiplicative);
    c.channel = "sparse_n10.spec";
    c.epsilon = 0.3;
    RunResult r = run(c);
    EXPECT_EQ(r.exit_code, kExitOk);
    EXPECT_FALSE(r.hypothesis.empty());
    EXPECT_EQ(r.hypothesis.substr(0, 10), "0000000000");
}

TEST(Run, FourierWritesEigenvalues) {
    ExperimentConfig c = config_for(Mode::fourier);
    RunResult r = run(c);
    EXPECT_EQ(r.exit_code, kExitOk);
    EXPECT_FALSE(r.eigenvalues.empty());
    EXPECT_EQ(r.eigenvalues.substr(0, 8), "00000 1 ");
    EXPECT_EQ(r.report["eigenvalues"]["rows"].size(), 32u);
}

TEST(Run, OracleCheckPassesOnFixtures) {
    for (const char *kraus : {"amplitude_damping", "dephasing.kraus", "random_unitary"}) {
        ExperimentConfig c = config_for(Mode::oracle_check);
        c.kraus = kraus;
        c.samples = 20000;
        RunResult r = run(c);
        EXPECT_EQ(r.exit_code, kExitOk) << kraus << "\n" << r.report.dump(2);
        EXPECT_TRUE(r.report["pass"].get<bool>());
    }
    ExperimentConfig c = config_for(Mode::oracle_check);
    c.nu = 0.1;
    EXPECT_THROW(run(c), ConfigError);
}

TEST(Run, BenchProducesCsv) {
    ExperimentConfig c = config_for(Mode::bench);
    c.bench_n = {8, 16};
    c.samples = 3000;
    c.bench_reps = 1;
    RunResult r = run(c);
    EXPECT_EQ(r.exit_code, kExitOk);
    std::istringstream csv(r.bench_csv);
    std::string line;
    std::getline(csv, line);
    EXPECT_EQ(line, "n,m,epsilon,probe_seconds,probe_records_per_second,fast_seconds,naive_seconds,speedup");
    int rows = 0;
    while (std::getline(csv, line)) ++rows;
    EXPECT_EQ(rows, 2);
}

TEST(WriteOutputs, FilesAreByteIdenticalAcrossRuns) {
    fs::path base = fs::temp_directory_path() / "paulilearn_experiment_test";
    fs::remove_all(base);
    ExperimentConfig c = config_for(Mode::additive);
    write_outputs(run(c), base / "a");
    write_outputs(run(c), base / "b");
    for (const char *name : {"report.json", "hypothesis.txt"}) {
        ASSERT_TRUE(fs::is_regular_file(base / "a" / name)) << name;
        EXPECT_EQ(slurp(base / "a" / name), slurp(base / "b" / name));
    }
    EXPECT_TRUE(fs::is_regular_file(base / "a" / "timings.json"));
    EXPECT_FALSE(fs::exists(base / "a" / "eigenvalues.txt"));
    fs::remove_all(base);
}

}  // namespace
}  // namespace paulilearn
