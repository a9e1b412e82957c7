#pragma once

#include <cstdint>
#include <random>

namespace patloc {

/// splitmix64 step (Steele/Lea/Flood mixer). Used only to derive
/// per-trial seeds from a master seed; the sample streams themselves
/// come from std::mt19937_64. Statistics (not bitstreams) are the
/// cross-implementation reproducibility contract.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Deterministic seed for task (a, b) under a master seed.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b = 0) {
    std::uint64_t s = master;
    splitmix64(s);
    s ^= 0x9e3779b97f4a7c15ULL * (a + 1);
    splitmix64(s);
    s ^= 0x94d049bb133111ebULL * (b + 1);
    return splitmix64(s);
}

inline std::mt19937_64 make_rng(std::uint64_t seed) { return std::mt19937_64(seed); }

} // namespace patloc
