#ifndef PGD_GENERATE_HPP
#define PGD_GENERATE_HPP

#include <cstdint>

#include "pgd/errors.hpp"
#include "pgd/types.hpp"

namespace pgd {

// SplitMix64 (Steele, Lea & Flood), fixed constants, 64-bit wrapping
// arithmetic only: the same seed yields the same stream on every platform.
// Range reduction is the multiply-shift trick, also platform-independent.
struct SplitMix64 {
    std::uint64_t state = 0;

    explicit constexpr SplitMix64(std::uint64_t seed) : state(seed) {}

    constexpr std::uint64_t next() {
        state += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform-ish value in [0, n); bias below n/2^64.
    constexpr std::uint64_t bounded(std::uint64_t n) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next()) * n) >> 64);
    }
};

// Deterministic pseudo-random injective deal: players "p0..", pictures
// "b0.."; the full card universe is Fisher-Yates shuffled with SplitMix64
// and the first |A|*N cards are dealt in (player, spot) order. Throws
// Infeasible when num_players > num_pictures.
Instance generate_instance(int num_players, int num_pictures, int n_suits,
                           std::uint64_t seed);

} // namespace pgd

#endif
