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

#ifndef PAULILEARN_EXPERIMENT_H
#define PAULILEARN_EXPERIMENT_H

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace paulilearn {

enum class Mode { additive, multiplicative, fourier, oracle_check, bench };

std::optional<Mode> parse_mode(std::string_view text);
std::string mode_name(Mode mode);

/// Process exit statuses of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitConfigError = 1,
    kExitCapacityExceeded = 2,
    kExitBelowFloor = 3,
    /// oracle-check ran but a check did not pass.
    kExitCheckFailed = 4,
};

/// Environment variable naming the default fixture directory.
inline constexpr const char *kFixtureDirEnv = "PAULILEARN_FIXTURES";

/// $PAULILEARN_FIXTURES if set, else the fixtures directory of the source tree.
std::filesystem::path default_fixture_dir();

class ConfigError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

struct ExperimentConfig {
    Mode mode = Mode::additive;
    /// Spec file path or fixture name; empty selects the default fixture.
    std::string channel;
    /// Kraus file path or fixture name; when set it takes the place of `channel`.
    std::string kraus;
    double epsilon = 0.1;
    double delta = 0.05;
    double eta0 = 1e-3;
    double nu = 0.0;
    uint64_t seed = 1;
    size_t trials = 1;
    /// Worker threads for independent trials; results do not depend on it.
    size_t threads = 1;
    /// oracle-check: twirl samples for the chi-square test. bench: records per batch.
    size_t samples = 100000;
    /// bench: qubit counts of the grid.
    std::vector<size_t> bench_n = {100, 200, 400};
    /// bench: repetitions per timing (the minimum is reported).
    size_t bench_reps = 3;
    /// bench: also time the naive path.
    bool bench_naive = true;
    std::filesystem::path fixture_dir = default_fixture_dir();

    /// Throws ConfigError on out-of-range parameters.
    void validate() const;
};

struct RunResult {
    int exit_code = kExitOk;
    /// Deterministic given the config.
    nlohmann::ordered_json report;
    /// Wall-clock timings.
    nlohmann::ordered_json timings;
    /// Hypothesis lines of trial 0.
    std::string hypothesis;
    /// fourier: eigenvalue table of trial 0.
    std::string eigenvalues;
    /// bench: CSV table.
    std::string bench_csv;
};

/// Runs one experiment. Throws ConfigError for bad parameters or unreadable channel files.
RunResult run(const ExperimentConfig &config);

/// Writes report.json, timings.json and the mode's text outputs under `dir`.
void write_outputs(const RunResult &result, const std::filesystem::path &dir);

}  // namespace paulilearn

#endif
