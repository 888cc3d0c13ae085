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

// Reference implementations used as test oracles. Each works symbol by symbol from the
// definitions and shares no code with the library's packed kernels.

#ifndef PAULILEARN_TESTS_ORACLE_H
#define PAULILEARN_TESTS_ORACLE_H

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

namespace oracle {

// Distinct non-identity Paulis anticommute; the identity commutes with everything.
inline int star(int a, int b) { return a != 0 && b != 0 && a != b ? 1 : 0; }

// Pauli product up to phase: XY ~ Z etc.
inline int product(int a, int b) {
    if (a == 0) return b;
    if (b == 0) return a;
    if (a == b) return 0;
    return 6 - a - b;
}

inline int bar(int a) {
    static const int table[4] = {0, 2, 1, 3};
    return table[a];
}

inline std::vector<int> digits(const std::string &s) {
    std::vector<int> out;
    for (char ch : s) out.push_back(ch - '0');
    return out;
}

inline std::string text(const std::vector<int> &v) {
    std::string out;
    for (int x : v) out += static_cast<char>('0' + x);
    return out;
}

// Every string over {lo..3} of length n, in lexicographic order.
inline std::vector<std::vector<int>> all_strings(size_t n, int lo) {
    std::vector<std::vector<int>> out{{}};
    for (size_t j = 0; j < n; ++j) {
        std::vector<std::vector<int>> next;
        for (const auto &s : out) {
            for (int a = lo; a <= 3; ++a) {
                auto t = s;
                t.push_back(a);
                next.push_back(t);
            }
        }
        out = std::move(next);
    }
    return out;
}

// Single-record estimator prod_{t not failed} factor^{(A_t star B_t) xor R_t}, straight from the formula.
inline double record_estimate(const std::vector<int> &a, const std::vector<int> &r, const std::vector<int> &failed,
                              const std::vector<int> &b, double factor) {
    double h = 1.0;
    for (size_t t = 0; t < b.size(); ++t) {
        if (failed[t]) continue;
        if ((star(a[t], b[t]) ^ r[t]) == 1) h *= factor;
    }
    return h;
}

}  // namespace oracle

#endif
