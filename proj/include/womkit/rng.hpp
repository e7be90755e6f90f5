#pragma once

#include <cstdint>

namespace womkit::rng {

// Counter-based generator built on the SplitMix64 output function
// (Steele, Lea & Flood / Vigna). The value at position i of the stream
// seeded with s is fix(s + (i+1) * gamma) with the fixed golden-ratio
// gamma, so any position can be evaluated independently of the rest of the
// stream. That keeps results bit-identical whether cells are visited
// serially or split across threads.

inline constexpr std::uint64_t golden_gamma = 0x9e3779b97f4a7c15ULL;

inline std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// The index-th 64-bit value of the stream identified by seed.
inline std::uint64_t at(std::uint64_t seed, std::uint64_t index) {
    return mix(seed + (index + 1) * golden_gamma);
}

/// The index-th uniform double in [0,1) of the stream (53-bit mantissa).
inline double uniform01(std::uint64_t seed, std::uint64_t index) {
    return static_cast<double>(at(seed, index) >> 11) * 0x1.0p-53;
}

/// Deterministic child seed k of a parent seed, for independent substreams
/// (one per simulation stage).
inline std::uint64_t child_seed(std::uint64_t seed, std::uint64_t k) {
    return at(seed ^ 0x5851f42d4c957f2dULL, k);
}

} // namespace womkit::rng
