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

#include <bit>
#include <stdexcept>

namespace paulilearn {

namespace {

void require_same_length(size_t a, size_t b, const char *op) {
    if (a != b) {
        throw std::invalid_argument(std::string(op) + ": length mismatch (" + std::to_string(a) + " vs " +
                                    std::to_string(b) + ")");
    }
}

}  // namespace

BitString::BitString(size_t n) : num_bits_(n), words_(words_for(n), 0) {}

BitString BitString::from_string(std::string_view text) {
    BitString result(text.size());
    for (size_t j = 0; j < text.size(); ++j) {
        char c = text[j];
        if (c != '0' && c != '1') {
            throw std::invalid_argument("BitString: unexpected character '" + std::string(1, c) + "'");
        }
        result.set(j, c == '1');
    }
    return result;
}

void BitString::set(size_t j, bool value) {
    uint64_t bit = uint64_t{1} << (j & 63);
    if (value) {
        words_[j >> 6] |= bit;
    } else {
        words_[j >> 6] &= ~bit;
    }
}

size_t BitString::weight() const {
    size_t total = 0;
    for (uint64_t w : words_) {
        total += std::popcount(w);
    }
    return total;
}

bool BitString::is_zero() const {
    for (uint64_t w : words_) {
        if (w) {
            return false;
        }
    }
    return true;
}

std::string BitString::str() const {
    std::string out(num_bits_, '0');
    for (size_t j = 0; j < num_bits_; ++j) {
        if ((*this)[j]) {
            out[j] = '1';
        }
    }
    return out;
}

BitString &BitString::operator^=(const BitString &other) {
    require_same_length(num_bits_, other.num_bits_, "BitString xor");
    for (size_t k = 0; k < words_.size(); ++k) {
        words_[k] ^= other.words_[k];
    }
    return *this;
}

PauliString::PauliString(size_t n) : num_qubits_(n), high_(words_for(n), 0), low_(words_for(n), 0) {}

PauliString PauliString::from_string(std::string_view text) {
    if (text.empty()) {
        throw std::invalid_argument("PauliString: empty string");
    }
    PauliString result(text.size());
    for (size_t j = 0; j < text.size(); ++j) {
        char c = text[j];
        if (c < '0' || c > '3') {
            throw std::invalid_argument("PauliString: unexpected character '" + std::string(1, c) +
                                        "' (expected base-4 digits)");
        }
        result.set(j, static_cast<uint8_t>(c - '0'));
    }
    return result;
}

PauliString PauliString::from_symbols(std::span<const uint8_t> symbols) {
    PauliString result(symbols.size());
    for (size_t j = 0; j < symbols.size(); ++j) {
        if (symbols[j] > 3) {
            throw std::invalid_argument("PauliString: symbol out of range");
        }
        result.set(j, symbols[j]);
    }
    return result;
}

PauliString PauliString::from_packed_bytes(size_t n, std::span<const uint8_t> bytes) {
    if (bytes.size() != (n + 3) / 4) {
        throw std::invalid_argument("PauliString: packed byte count does not match length");
    }
    PauliString result(n);
    for (size_t j = 0; j < n; ++j) {
        result.set(j, static_cast<uint8_t>((bytes[j / 4] >> (2 * (j % 4))) & 3));
    }
    // Padding bits of the last byte must be clear.
    if (n % 4 != 0 && (bytes.back() >> (2 * (n % 4))) != 0) {
        throw std::invalid_argument("PauliString: nonzero padding in packed bytes");
    }
    return result;
}

void PauliString::set(size_t j, uint8_t symbol) {
    if (symbol > 3 || j >= num_qubits_) {
        throw std::invalid_argument("PauliString::set: symbol or position out of range");
    }
    uint64_t bit = uint64_t{1} << (j & 63);
    size_t k = j >> 6;
    high_[k] = (symbol & 2) ? (high_[k] | bit) : (high_[k] & ~bit);
    low_[k] = (symbol & 1) ? (low_[k] | bit) : (low_[k] & ~bit);
}

bool PauliString::is_identity() const {
    for (size_t k = 0; k < high_.size(); ++k) {
        if (high_[k] | low_[k]) {
            return false;
        }
    }
    return true;
}

bool PauliString::is_nontrivial_probe() const {
    for (size_t k = 0; k < high_.size(); ++k) {
        uint64_t valid = k + 1 == high_.size() ? tail_mask(num_qubits_) : ~uint64_t{0};
        if (((high_[k] | low_[k]) & valid) != valid) {
            return false;
        }
    }
    return true;
}

size_t PauliString::weight() const {
    size_t total = 0;
    for (size_t k = 0; k < high_.size(); ++k) {
        total += std::popcount(high_[k] | low_[k]);
    }
    return total;
}

PauliString PauliString::prefix(size_t len) const {
    if (len > num_qubits_) {
        throw std::invalid_argument("PauliString::prefix: length exceeds string length");
    }
    PauliString result(len);
    size_t nw = words_for(len);
    for (size_t k = 0; k < nw; ++k) {
        result.high_[k] = high_[k];
        result.low_[k] = low_[k];
    }
    if (nw > 0) {
        result.high_[nw - 1] &= tail_mask(len);
        result.low_[nw - 1] &= tail_mask(len);
    }
    return result;
}

std::string PauliString::str() const {
    std::string out(num_qubits_, '0');
    for (size_t j = 0; j < num_qubits_; ++j) {
        out[j] = static_cast<char>('0' + (*this)[j]);
    }
    return out;
}

std::vector<uint8_t> PauliString::to_packed_bytes() const {
    std::vector<uint8_t> out((num_qubits_ + 3) / 4, 0);
    for (size_t j = 0; j < num_qubits_; ++j) {
        out[j / 4] |= static_cast<uint8_t>((*this)[j] << (2 * (j % 4)));
    }
    return out;
}

bool operator<(const PauliString &a, const PauliString &b) {
    size_t common = std::min(a.size(), b.size());
    for (size_t j = 0; j < common; ++j) {
        if (a[j] != b[j]) {
            return a[j] < b[j];
        }
    }
    return a.size() < b.size();
}

PauliString pauli_xor(const PauliString &a, const PauliString &b) {
    require_same_length(a.size(), b.size(), "pauli_xor");
    PauliString result(a.size());
    auto rh = result.high_words();
    auto rl = result.low_words();
    for (size_t k = 0; k < rh.size(); ++k) {
        rh[k] = a.high_words()[k] ^ b.high_words()[k];
        rl[k] = a.low_words()[k] ^ b.low_words()[k];
    }
    return result;
}

BitString star(const PauliString &a, const PauliString &b) {
    require_same_length(a.size(), b.size(), "star");
    BitString result(a.size());
    auto out = result.words();
    for (size_t k = 0; k < out.size(); ++k) {
        out[k] = (a.high_words()[k] & b.low_words()[k]) ^ (a.low_words()[k] & b.high_words()[k]);
    }
    return result;
}

bool symplectic_dot(const PauliString &a, const PauliString &c) {
    require_same_length(a.size(), c.size(), "symplectic_dot");
    uint64_t acc = 0;
    for (size_t k = 0; k < a.high_words().size(); ++k) {
        acc ^= (a.high_words()[k] & c.low_words()[k]) ^ (a.low_words()[k] & c.high_words()[k]);
    }
    return std::popcount(acc) & 1;
}

PauliString bar(const PauliString &a) {
    PauliString result(a.size());
    auto rh = result.high_words();
    auto rl = result.low_words();
    for (size_t k = 0; k < rh.size(); ++k) {
        rh[k] = a.low_words()[k];
        rl[k] = a.high_words()[k];
    }
    return result;
}

BitString neq_mask(const PauliString &c, const PauliString &b) {
    require_same_length(c.size(), b.size(), "neq_mask");
    BitString result(c.size());
    auto out = result.words();
    for (size_t k = 0; k < out.size(); ++k) {
        out[k] = (c.high_words()[k] ^ b.high_words()[k]) | (c.low_words()[k] ^ b.low_words()[k]);
    }
    return result;
}

}  // namespace paulilearn

size_t std::hash<paulilearn::PauliString>::operator()(const paulilearn::PauliString &p) const noexcept {
    uint64_t h = 0x9e3779b97f4a7c15ULL ^ p.size();
    for (size_t k = 0; k < p.high_words().size(); ++k) {
        h = (h ^ p.high_words()[k]) * 0x100000001b3ULL;
        h = (h ^ p.low_words()[k]) * 0x100000001b3ULL;
        h ^= h >> 29;
    }
    return static_cast<size_t>(h);
}
