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

#ifndef PAULILEARN_PAULI_H
#define PAULILEARN_PAULI_H

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace paulilearn {

/// Number of 64-bit words needed to hold `n` one-bit coordinates.
constexpr size_t words_for(size_t n) { return (n + 63) / 64; }

/// Mask of the valid bits in the last word of an `n`-coordinate bit plane.
constexpr uint64_t tail_mask(size_t n) {
    size_t r = n % 64;
    return r == 0 ? ~uint64_t{0} : (uint64_t{1} << r) - 1;
}

/// A fixed-length string of bits, packed 64 per word (coordinate j is bit j % 64 of word j / 64).
/// Bits past the end of the string are always zero.
class BitString {
   public:
    BitString() = default;
    explicit BitString(size_t n);

    /// Parses a string of '0' and '1' characters.
    static BitString from_string(std::string_view text);

    size_t size() const { return num_bits_; }
    bool operator[](size_t j) const { return (words_[j >> 6] >> (j & 63)) & 1; }
    void set(size_t j, bool value);

    /// Hamming weight.
    size_t weight() const;
    bool is_zero() const;

    std::span<const uint64_t> words() const { return words_; }
    std::span<uint64_t> words() { return words_; }

    std::string str() const;

    BitString &operator^=(const BitString &other);
    friend BitString operator^(BitString a, const BitString &b) { return a ^= b; }
    friend bool operator==(const BitString &a, const BitString &b) = default;

   private:
    size_t num_bits_ = 0;
    std::vector<uint64_t> words_;
};

/// A string over {0,1,2,3} indexing an n-qubit Pauli operator.
///
/// Symbol a is identified with (a1, a2) in F_2^2 by its base-2 digits. The two digits are kept in
/// separate bit planes: `high` holds a1 and `low` holds a2, so that
///   a XOR b       -> a word XOR of both planes,
///   a STAR b      -> (a.high & b.low) ^ (a.low & b.high), one bit per coordinate.
class PauliString {
   public:
    PauliString() = default;
    /// The all-zero string of length n.
    explicit PauliString(size_t n);

    /// Parses a base-4 digit string such as "00321". Throws std::invalid_argument.
    static PauliString from_string(std::string_view text);
    /// Builds a string from its symbols; every entry must be in 0..3.
    static PauliString from_symbols(std::span<const uint8_t> symbols);
    /// Decodes the binary form: coordinate j occupies bits 2j (low digit) and 2j+1 (high digit),
    /// little-endian within and across bytes.
    static PauliString from_packed_bytes(size_t n, std::span<const uint8_t> bytes);

    size_t size() const { return num_qubits_; }
    uint8_t operator[](size_t j) const {
        return static_cast<uint8_t>((((high_[j >> 6] >> (j & 63)) & 1) << 1) | ((low_[j >> 6] >> (j & 63)) & 1));
    }
    void set(size_t j, uint8_t symbol);

    bool is_identity() const;
    /// True when every coordinate is in {1,2,3}.
    bool is_nontrivial_probe() const;
    size_t weight() const;

    /// The first `len` coordinates.
    PauliString prefix(size_t len) const;

    std::span<const uint64_t> high_words() const { return high_; }
    std::span<const uint64_t> low_words() const { return low_; }
    std::span<uint64_t> high_words() { return high_; }
    std::span<uint64_t> low_words() { return low_; }

    std::string str() const;
    std::vector<uint8_t> to_packed_bytes() const;

    friend bool operator==(const PauliString &a, const PauliString &b) = default;
    /// Lexicographic order on the symbol sequence (shorter strings first on a shared prefix).
    friend bool operator<(const PauliString &a, const PauliString &b);

   private:
    size_t num_qubits_ = 0;
    std::vector<uint64_t> high_;
    std::vector<uint64_t> low_;
};

/// Coordinate-wise product of Pauli symbols up to phase (F_2^2 addition).
PauliString pauli_xor(const PauliString &a, const PauliString &b);

/// Coordinate-wise anticommutation indicator: a1*b2 + a2*b1 mod 2.
BitString star(const PauliString &a, const PauliString &b);

/// Parity of star(a, c); equals bar(a) . c over F_2^{2n}.
bool symplectic_dot(const PauliString &a, const PauliString &c);

/// Swaps the two digits of every symbol: 0->0, 1->2, 2->1, 3->3.
PauliString bar(const PauliString &a);

/// Bit j is set when c[j] != b[j].
BitString neq_mask(const PauliString &c, const PauliString &b);

/// Single-symbol anticommutation indicator.
constexpr bool star_symbol(uint8_t a, uint8_t b) {
    return (((a >> 1) & b) ^ (a & (b >> 1))) & 1;
}

}  // namespace paulilearn

template <>
struct std::hash<paulilearn::PauliString> {
    size_t operator()(const paulilearn::PauliString &p) const noexcept;
};

#endif
