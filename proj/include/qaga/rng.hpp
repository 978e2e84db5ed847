// Copyright 2026 The qaga developers
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string_view>

namespace qaga {

// Stateless 64-bit mixers. splitmix64 drives seeding, mix64/hash64 derive
// independent stream seeds from (seed, salt) pairs and run identifiers so
// that benchmark rows and batch slots never share a stream.

inline uint64_t splitmix64(uint64_t& x) {
    x += 0x9e3779b97f4a7c15ull;
    uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

inline uint64_t mix64(uint64_t a, uint64_t b) {
    uint64_t x = a ^ (b + 0x9e3779b97f4a7c15ull + (a << 6) + (a >> 2));
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// FNV-1a. Used for run identifiers and state-content hashing.
inline uint64_t hash64(std::string_view s) {
    uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

// xoshiro256++ with explicit seeding. Every consumer of randomness takes an
// Rng&; nothing in the library touches global or time-based state, so a run
// is a pure function of its seed.
class Rng {
  public:
    explicit Rng(uint64_t seed) : seed_(seed) {
        uint64_t x = seed;
        for (auto& w : state_) w = splitmix64(x);
    }

    uint64_t next() {
        uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform in [0, 1), 53-bit resolution.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform in [0, n). Lemire multiply-shift with rejection; unbiased.
    uint64_t below(uint64_t n) {
        if (n == 0) throw std::invalid_argument("Rng::below: n must be positive");
        unsigned __int128 m = static_cast<unsigned __int128>(next()) * n;
        auto lo = static_cast<uint64_t>(m);
        if (lo < n) {
            uint64_t t = (0 - n) % n;
            while (lo < t) {
                m = static_cast<unsigned __int128>(next()) * n;
                lo = static_cast<uint64_t>(m);
            }
        }
        return static_cast<uint64_t>(m >> 64);
    }

    int spin() { return (next() >> 63) ? 1 : -1; }

    bool bernoulli(double p) { return uniform01() < p; }

    uint64_t seed() const { return seed_; }

    // Child stream independent of this stream's draw position.
    Rng derive(uint64_t salt) const { return Rng(mix64(seed_, salt)); }

  private:
    static uint64_t rotl(uint64_t v, int k) { return (v << k) | (v >> (64 - k)); }

    uint64_t state_[4];
    uint64_t seed_;
};

}  // namespace qaga
