#ifndef IMIOA_RNG_HPP
#define IMIOA_RNG_HPP

// Seeded randomness. All randomized routines take a single u64 seed and feed
// it to std::mt19937_64 (a named, standard-specified generator, so the raw
// 64-bit stream is identical on every platform). Floating-point draws are
// derived from the raw stream below instead of <random> distributions, whose
// output is implementation-defined.

#include <cmath>
#include <cstdint>
#include <random>

namespace imioa::rng {

using engine = std::mt19937_64;

// Uniform double in [0,1) built from the top 53 bits of one draw.
inline double next_unit(engine& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform integer in [0, bound) via 128-bit multiply-shift.
inline std::uint64_t next_below(engine& rng, std::uint64_t bound) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(rng()) * bound) >> 64);
}

// Standard normal via Box-Muller on next_unit draws.
inline double next_normal(engine& rng) {
    double u1 = next_unit(rng);
    while (u1 <= 0.0) u1 = next_unit(rng);
    const double u2 = next_unit(rng);
    constexpr double two_pi = 6.283185307179586476925286766559;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(two_pi * u2);
}

// splitmix64 mix, used to derive independent sub-seeds from a master seed.
inline std::uint64_t mix(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace imioa::rng

#endif
