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

#ifndef PAULILEARN_STATS_H
#define PAULILEARN_STATS_H

#include <cstddef>
#include <cstdint>
#include <vector>

namespace paulilearn {

struct ChiSquareResult {
    double statistic = 0.0;
    size_t dof = 0;
    double p_value = 1.0;
    /// Some count landed in a cell of probability 0.
    bool impossible_observation = false;
};

/// Goodness of fit of `observed` counts to cell probabilities `expected`. Cells whose expected
/// count is below `min_expected` are pooled into one cell. p_value is 0 when an impossible cell
/// was observed.
ChiSquareResult chi_square_test(const std::vector<uint64_t> &observed, const std::vector<double> &expected,
                                double min_expected = 5.0);

/// Pearson test of independence for an r x c table of counts (row-major).
ChiSquareResult chi_square_independence(const std::vector<uint64_t> &table, size_t rows, size_t cols);

}  // namespace paulilearn

#endif
