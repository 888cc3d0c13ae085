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

#include "paulilearn/pauli.h"

#include <gtest/gtest.h>

#include <unordered_set>

#include "oracle.h"
#include "paulilearn/rng.h"

namespace paulilearn {
namespace {

PauliString P(const char *s) { return PauliString::from_string(s); }
BitString Bits(const char *s) { return BitString::from_string(s); }

PauliString random_string(size_t n, Rng &rng) {
    PauliString a(n);
    for (size_t j = 0; j < n; ++j) a.set(j, rng.uniform_quad());
    return a;
}

std::vector<int> symbols_of(const PauliString &a) {
    std::vector<int> out;
    for (size_t j = 0; j < a.size(); ++j) out.push_back(a[j]);
    return out;
}

TEST(PauliXor, SingleSymbolExample) { EXPECT_EQ(pauli_xor(P("1"), P("3")), P("2")); }

TEST(PauliXor, ZeroIsNeutral) { EXPECT_EQ(pauli_xor(P("000"), P("213")), P("213")); }

TEST(PauliXor, SelfInverseOnRandomStrings) {
    Rng rng(11);
    for (size_t n : {1, 7, 64, 65, 200}) {
        PauliString a = random_string(n, rng);
        EXPECT_TRUE(pauli_xor(a, a).is_identity());
    }
}

TEST(PauliXor, MatchesProductTable) {
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
            PauliString x(1), y(1);
            x.set(0, a);
            y.set(0, b);
            EXPECT_EQ(pauli_xor(x, y)[0], oracle::product(a, b)) << a << "," << b;
        }
    }
}

TEST(PauliXor, AbelianGroupOfExponentTwo) {
    Rng rng(12);
    for (int rep = 0; rep < 20; ++rep) {
        PauliString a = random_string(70, rng), b = random_string(70, rng), c = random_string(70, rng);
        EXPECT_EQ(pauli_xor(a, b), pauli_xor(b, a));
        EXPECT_EQ(pauli_xor(pauli_xor(a, b), c), pauli_xor(a, pauli_xor(b, c)));
    }
}

TEST(PauliXor, LengthMismatchThrows) { EXPECT_THROW(pauli_xor(P("01"), P("012")), std::invalid_argument); }

TEST(Star, WorkedExample) { EXPECT_EQ(star(P("00321"), P("31122")), Bits("00101")); }

TEST(Star, ZeroStringCommutesWithAll) {
    Rng rng(13);
    PauliString a = random_string(100, rng);
    EXPECT_TRUE(star(a, PauliString(100)).is_zero());
}

TEST(Star, SingleSymbolTableHasSixOnes) {
    int ones = 0;
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
            bool s = star_symbol(a, b);
            EXPECT_EQ(s, oracle::star(a, b) == 1);
            ones += s;
        }
    }
    EXPECT_EQ(ones, 6);
}

TEST(Star, DistributesOverXorForAllTriples) {
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int c = 0; c < 4; ++c)
                EXPECT_EQ(star_symbol(a, b ^ c), star_symbol(a, b) ^ star_symbol(a, c));
}

TEST(Star, SymmetricExhaustiveForTwoQubits) {
    for (const auto &x : oracle::all_strings(2, 0)) {
        for (const auto &y : oracle::all_strings(2, 0)) {
            PauliString a = P(oracle::text(x).c_str()), b = P(oracle::text(y).c_str());
            EXPECT_EQ(star(a, b), star(b, a));
            for (size_t j = 0; j < 2; ++j) EXPECT_EQ(star(a, b)[j], oracle::star(x[j], y[j]) == 1);
        }
    }
}

TEST(Star, SymmetricAndMatchesOracleOnLongStrings) {
    Rng rng(14);
    for (size_t n : {63, 64, 65, 129, 300}) {
        PauliString a = random_string(n, rng), b = random_string(n, rng);
        BitString s = star(a, b);
        EXPECT_EQ(s, star(b, a));
        for (size_t j = 0; j < n; ++j) ASSERT_EQ(s[j], oracle::star(a[j], b[j]) == 1);
    }
}

TEST(Star, LengthMismatchThrows) { EXPECT_THROW(star(P("1"), P("11")), std::invalid_argument); }

TEST(SymplecticDot, ExampleIsParityOfStar) { EXPECT_FALSE(symplectic_dot(P("00321"), P("31122"))); }

TEST(SymplecticDot, SelfAndZero) {
    Rng rng(15);
    for (int rep = 0; rep < 10; ++rep) {
        PauliString a = random_string(90, rng);
        EXPECT_FALSE(symplectic_dot(a, a));
        EXPECT_FALSE(symplectic_dot(a, PauliString(90)));
    }
}

TEST(SymplecticDot, EqualsOrdinaryDotWithBar) {
    Rng rng(16);
    for (int rep = 0; rep < 50; ++rep) {
        PauliString a = random_string(33, rng), c = random_string(33, rng);
        int dot = 0;
        for (size_t j = 0; j < 33; ++j) {
            int abar = oracle::bar(a[j]);
            dot ^= ((abar >> 1) & (c[j] >> 1)) ^ (abar & c[j] & 1);
        }
        EXPECT_EQ(symplectic_dot(a, c), dot == 1);
    }
}

TEST(SymplecticDot, LengthMismatchThrows) { EXPECT_THROW(symplectic_dot(P("1"), P("11")), std::invalid_argument); }

TEST(Bar, SwapsOneAndTwo) {
    EXPECT_EQ(bar(P("1")), P("2"));
    EXPECT_EQ(bar(P("2")), P("1"));
    EXPECT_EQ(bar(P("03")), P("03"));
    EXPECT_EQ(bar(P("0123")), P("0213"));
}

TEST(Bar, Involution) {
    Rng rng(17);
    PauliString a = random_string(150, rng);
    EXPECT_EQ(bar(bar(a)), a);
}

TEST(NeqMask, Examples) {
    EXPECT_EQ(neq_mask(P("00321"), P("00000")), Bits("00111"));
    EXPECT_EQ(neq_mask(P("12"), P("13")), Bits("01"));
    EXPECT_TRUE(neq_mask(P("3210"), P("3210")).is_zero());
}

TEST(NeqMask, MatchesOracle) {
    Rng rng(18);
    PauliString c = random_string(100, rng), b = random_string(100, rng);
    BitString m = neq_mask(c, b);
    for (size_t j = 0; j < 100; ++j) EXPECT_EQ(m[j], c[j] != b[j]);
    EXPECT_THROW(neq_mask(c, P("1")), std::invalid_argument);
}

TEST(PauliString, TextRoundTrip) {
    for (const char *s : {"0", "3", "00321", "0123012301230123012301230123012301230123012301230123012301230123012"}) {
        EXPECT_EQ(P(s).str(), s);
    }
    Rng rng(19);
    PauliString a = random_string(257, rng);
    EXPECT_EQ(P(a.str().c_str()), a);
}

TEST(PauliString, RejectsBadText) {
    EXPECT_THROW(P(""), std::invalid_argument);
    EXPECT_THROW(P("0124"), std::invalid_argument);
    EXPECT_THROW(P("01 2"), std::invalid_argument);
}

TEST(PauliString, PackedBinaryForm) {
    // Coordinate j at bits 2j (low digit) and 2j+1 (high digit).
    PauliString a = P("1230");
    auto bytes = a.to_packed_bytes();
    ASSERT_EQ(bytes.size(), 1u);
    EXPECT_EQ(bytes[0], 0b00111001);
    EXPECT_EQ(PauliString::from_packed_bytes(4, bytes), a);

    Rng rng(20);
    PauliString b = random_string(71, rng);
    auto packed = b.to_packed_bytes();
    EXPECT_EQ(packed.size(), 18u);
    for (size_t j = 0; j < 71; ++j) EXPECT_EQ((packed[j / 4] >> (2 * (j % 4))) & 3, b[j]);
    EXPECT_EQ(PauliString::from_packed_bytes(71, packed), b);
}

TEST(PauliString, PackedBinaryFormRejectsBadInput) {
    std::vector<uint8_t> two{0, 0};
    EXPECT_THROW(PauliString::from_packed_bytes(4, two), std::invalid_argument);
    std::vector<uint8_t> padded{0b11000000};
    EXPECT_THROW(PauliString::from_packed_bytes(3, padded), std::invalid_argument);
}

TEST(PauliString, QueriesAndOrdering) {
    EXPECT_TRUE(PauliString(5).is_identity());
    EXPECT_FALSE(P("00010").is_identity());
    EXPECT_TRUE(P("123").is_nontrivial_probe());
    EXPECT_FALSE(P("103").is_nontrivial_probe());
    EXPECT_EQ(P("01020").weight(), 2u);
    EXPECT_EQ(P("00321").prefix(3), P("003"));
    EXPECT_THROW(P("01").prefix(3), std::invalid_argument);
    EXPECT_TRUE(P("0123") < P("0130"));
    EXPECT_TRUE(P("01") < P("010"));
    EXPECT_FALSE(P("2") < P("2"));
}

TEST(PauliString, SymbolRoundTripAndRange) {
    std::vector<uint8_t> s{3, 0, 2, 1};
    EXPECT_EQ(PauliString::from_symbols(s).str(), "3021");
    std::vector<uint8_t> bad{4};
    EXPECT_THROW(PauliString::from_symbols(bad), std::invalid_argument);
    PauliString a(3);
    EXPECT_THROW(a.set(0, 4), std::invalid_argument);
}

TEST(PauliString, HashDistinguishesStrings) {
    std::unordered_set<PauliString> set;
    for (const auto &s : oracle::all_strings(3, 0)) set.insert(P(oracle::text(s).c_str()));
    EXPECT_EQ(set.size(), 64u);
}

TEST(BitString, BasicOperations) {
    BitString b = Bits("10110");
    EXPECT_EQ(b.weight(), 3u);
    EXPECT_EQ(b.str(), "10110");
    EXPECT_EQ((b ^ b).weight(), 0u);
    EXPECT_EQ(b ^ Bits("01000"), Bits("11110"));
    EXPECT_THROW(Bits("012"), std::invalid_argument);
    EXPECT_THROW(b ^= Bits("1"), std::invalid_argument);
}

}  // namespace
}  // namespace paulilearn
