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

// paulilearn command-line front end.

#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "paulilearn/experiment.h"

int main(int argc, char **argv) {
    using namespace paulilearn;
    CLI::App app{"Simulate Pauli channels and learn their large error rates"};
    ExperimentConfig config;
    std::string mode = "additive";
    std::string out;
    std::string fixtures;
    app.add_option("--mode", mode, "additive | multiplicative | fourier | oracle-check | bench")->capture_default_str();
    app.add_option("--channel", config.channel, "Pauli channel spec file or fixture name");
    app.add_option("--kraus", config.kraus, "Kraus channel file or fixture name");
    app.add_option("--epsilon", config.epsilon, "Target precision")->capture_default_str();
    app.add_option("--delta", config.delta, "Failure probability")->capture_default_str();
    app.add_option("--eta0", config.eta0, "Error-rate floor for multiplicative mode")->capture_default_str();
    app.add_option("--nu", config.nu, "Measurement failure probability, at most 1/4")->capture_default_str();
    app.add_option("--seed", config.seed, "Random seed")->capture_default_str();
    app.add_option("--trials", config.trials, "Independent trials")->capture_default_str();
    app.add_option("--out", out, "Output directory for report files");
    app.add_option("--threads", config.threads, "Worker threads for trials")->capture_default_str();
    app.add_option("--samples", config.samples, "oracle-check twirl samples; bench batch size")->capture_default_str();
    app.add_option("--bench-n", config.bench_n, "bench qubit counts")->capture_default_str();
    app.add_option("--bench-reps", config.bench_reps, "bench repetitions per timing")->capture_default_str();
    app.add_flag("!--no-naive", config.bench_naive, "bench: skip the naive path");
    app.add_option("--fixtures", fixtures, std::string("Fixture directory (default $") + kFixtureDirEnv + ")");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e);
        }
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfigError;
    }

    auto parsed = parse_mode(mode);
    if (!parsed) {
        std::cerr << "config error: unknown mode '" << mode << "'\n";
        return kExitConfigError;
    }
    config.mode = *parsed;
    if (!fixtures.empty()) {
        config.fixture_dir = fixtures;
    }

    RunResult result;
    try {
        result = run(config);
    } catch (const ConfigError &e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfigError;
    } catch (const std::invalid_argument &e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfigError;
    }

    try {
        if (out.empty()) {
            std::cout << result.report.dump(2) << '\n';
        } else {
            write_outputs(result, out);
            if (result.report.contains("summary")) {
                std::cout << result.report["summary"].dump() << '\n';
            }
        }
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfigError;
    }
    switch (result.exit_code) {
        case kExitCapacityExceeded: std::cerr << "capacity exceeded in at least one trial\n"; break;
        case kExitBelowFloor: std::cerr << "verdict: eta <= eta0\n"; break;
        case kExitCheckFailed: std::cerr << "oracle check failed\n"; break;
        default: break;
    }
    return result.exit_code;
}
