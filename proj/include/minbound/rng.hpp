#pragma once

#include <cstdint>

namespace minbound {

// Fixed 64-bit mixing generator (splitmix64). Written out as plain
// arithmetic so the same seed yields the same stream on every platform and
// in any reimplementation:
//
//   state <- state + 0x9e3779b97f4a7c15            (mod 2^64)
//   z <- state
//   z <- (z xor (z >> 30)) * 0xbf58476d1ce4e5b9    (mod 2^64)
//   z <- (z xor (z >> 27)) * 0x94d049bb133111eb    (mod 2^64)
//   output z xor (z >> 31)
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform value in [0, bound) via the high 64 bits of a 128-bit product:
    // floor(next() * bound / 2^64). bound must be nonzero.
    std::uint64_t next_below(std::uint64_t bound) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next()) * bound) >> 64);
    }

    // Uniform double in [0,1) with 53 random bits: (next() >> 11) * 2^-53.
    double next_unit() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

private:
    std::uint64_t state_;
};

// Deterministic child seed for stream index `index` under a master seed:
// one splitmix64 step from state seed + (index+1) * 0x9e3779b97f4a7c15.
// Campaigns, multistarts and per-instance policies all derive their streams
// through this, so results do not depend on scheduling.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 g(seed + (index + 1) * 0x9e3779b97f4a7c15ULL);
    return g.next();
}

}  // namespace minbound
