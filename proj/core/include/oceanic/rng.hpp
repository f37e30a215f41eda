#pragma once

#include <cstdint>

namespace oceanic {

// Deterministic, platform-independent generators. The standard library's
// distributions are not bit-portable across implementations, so uniform
// doubles are built directly from the raw bits.

// splitmix64 (Steele, Lea, Flood). Used to expand a user seed into generator
// state and to derive per-partition states.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t state_;
};

// xoshiro256++ (Blackman, Vigna). State seeded from splitmix64 so that any
// 64-bit seed, including 0, yields a valid nonzero state.
class Xoshiro256pp {
public:
    // Partition p consumes outputs 4p .. 4p+3 of splitmix64(seed), so
    // partition 0 matches plain single-stream seeding.
    static Xoshiro256pp seeded(std::uint64_t seed, std::uint64_t partition = 0);

    std::uint64_t next();

    // Uniform double in [0, 1) from the top 53 bits.
    double uniform01() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

private:
    std::uint64_t s_[4] = {};
};

} // namespace oceanic
