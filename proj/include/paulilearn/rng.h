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

#ifndef PAULILEARN_RNG_H
#define PAULILEARN_RNG_H

#include <cstdint>
#include <random>

namespace paulilearn {

/// SplitMix64 finalizer; used to derive independent substream seeds.
constexpr uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Seeded random source with a fixed, portable output sequence.
///
/// The engine is std::mt19937_64, whose output is pinned by the standard. All derived draws
/// (bounded integers, reals, base-3 digits) are computed here rather than through <random>
/// distributions, whose algorithms are implementation-defined.
class Rng {
   public:
    explicit Rng(uint64_t seed) : engine_(seed) {}

    /// Independent stream number `index` derived from `seed`.
    static Rng substream(uint64_t seed, uint64_t index) { return Rng(splitmix64(seed ^ splitmix64(index + 1))); }

    uint64_t next_u64() { return engine_(); }

    /// Uniform on [0, 1) with 53 random bits.
    double uniform_real() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return uniform_real() < p; }

    /// Uniform on {0, ..., bound-1}; exact (multiply-shift with rejection).
    uint64_t uniform_below(uint64_t bound) {
        unsigned __int128 product = static_cast<unsigned __int128>(engine_()) * bound;
        uint64_t low = static_cast<uint64_t>(product);
        if (low < bound) {
            uint64_t threshold = (0 - bound) % bound;
            while (low < threshold) {
                product = static_cast<unsigned __int128>(engine_()) * bound;
                low = static_cast<uint64_t>(product);
            }
        }
        return static_cast<uint64_t>(product >> 64);
    }

    /// Uniform on {0, 1, 2}. Each accepted byte (< 243) yields five base-3 digits.
    uint8_t uniform_trit() {
        if (trits_left_ == 0) {
            refill_trits();
        }
        uint8_t t = static_cast<uint8_t>(trit_buffer_ % 3);
        trit_buffer_ /= 3;
        --trits_left_;
        return t;
    }

    /// Uniform on {0, 1, 2, 3}.
    uint8_t uniform_quad() {
        if (quads_left_ == 0) {
            quad_buffer_ = engine_();
            quads_left_ = 32;
        }
        uint8_t q = static_cast<uint8_t>(quad_buffer_ & 3);
        quad_buffer_ >>= 2;
        --quads_left_;
        return q;
    }

   private:
    void refill_trits() {
        while (true) {
            if (bytes_left_ == 0) {
                byte_buffer_ = engine_();
                bytes_left_ = 8;
            }
            auto byte = static_cast<uint8_t>(byte_buffer_ & 0xff);
            byte_buffer_ >>= 8;
            --bytes_left_;
            if (byte < 243) {
                trit_buffer_ = byte;
                trits_left_ = 5;
                return;
            }
        }
    }

    std::mt19937_64 engine_;
    uint64_t byte_buffer_ = 0;
    int bytes_left_ = 0;
    uint32_t trit_buffer_ = 0;
    int trits_left_ = 0;
    uint64_t quad_buffer_ = 0;
    int quads_left_ = 0;
};

}  // namespace paulilearn

#endif
