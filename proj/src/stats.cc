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

#include "paulilearn/stats.h"

#include <numeric>
#include <stdexcept>

#include <boost/math/distributions/chi_squared.hpp>

namespace paulilearn {

namespace {

double upper_tail(double statistic, size_t dof) {
    if (dof == 0) {
        return 1.0;
    }
    boost::math::chi_squared_distribution<double> dist(static_cast<double>(dof));
    return boost::math::cdf(boost::math::complement(dist, statistic));
}

}  // namespace

ChiSquareResult chi_square_test(const std::vector<uint64_t> &observed, const std::vector<double> &expected,
                                double min_expected) {
    if (observed.size() != expected.size() || observed.empty()) {
        throw std::invalid_argument("chi_square_test: size mismatch");
    }
    const double total = static_cast<double>(std::accumulate(observed.begin(), observed.end(), uint64_t{0}));
    const double mass = std::accumulate(expected.begin(), expected.end(), 0.0);
    if (total == 0.0 || !(mass > 0.0)) {
        throw std::invalid_argument("chi_square_test: empty counts or probabilities");
    }
    ChiSquareResult out;
    double pooled_obs = 0.0;
    double pooled_exp = 0.0;
    size_t cells = 0;
    for (size_t k = 0; k < observed.size(); ++k) {
        double e = total * expected[k] / mass;
        auto o = static_cast<double>(observed[k]);
        if (expected[k] <= 0.0) {
            if (observed[k] > 0) {
                out.impossible_observation = true;
            }
            continue;
        }
        if (e < min_expected) {
            pooled_obs += o;
            pooled_exp += e;
            continue;
        }
        out.statistic += (o - e) * (o - e) / e;
        ++cells;
    }
    if (pooled_exp > 0.0) {
        out.statistic += (pooled_obs - pooled_exp) * (pooled_obs - pooled_exp) / pooled_exp;
        ++cells;
    }
    out.dof = cells > 0 ? cells - 1 : 0;
    out.p_value = out.impossible_observation ? 0.0 : upper_tail(out.statistic, out.dof);
    return out;
}

ChiSquareResult chi_square_independence(const std::vector<uint64_t> &table, size_t rows, size_t cols) {
    if (table.size() != rows * cols || rows < 2 || cols < 2) {
        throw std::invalid_argument("chi_square_independence: need an r x c table with r, c >= 2");
    }
    std::vector<double> row_sum(rows, 0.0);
    std::vector<double> col_sum(cols, 0.0);
    double total = 0.0;
    for (size_t i = 0; i < rows; ++i) {
        for (size_t j = 0; j < cols; ++j) {
            auto v = static_cast<double>(table[i * cols + j]);
            row_sum[i] += v;
            col_sum[j] += v;
            total += v;
        }
    }
    if (total == 0.0) {
        throw std::invalid_argument("chi_square_independence: empty table");
    }
    ChiSquareResult out;
    size_t live_rows = 0;
    size_t live_cols = 0;
    for (double r : row_sum) {
        live_rows += r > 0.0;
    }
    for (double c : col_sum) {
        live_cols += c > 0.0;
    }
    for (size_t i = 0; i < rows; ++i) {
        for (size_t j = 0; j < cols; ++j) {
            double e = row_sum[i] * col_sum[j] / total;
            if (e > 0.0) {
                double d = static_cast<double>(table[i * cols + j]) - e;
                out.statistic += d * d / e;
            }
        }
    }
    out.dof = live_rows > 1 && live_cols > 1 ? (live_rows - 1) * (live_cols - 1) : 0;
    out.p_value = upper_tail(out.statistic, out.dof);
    return out;
}

}  // namespace paulilearn
