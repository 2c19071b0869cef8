#pragma once

/**
 * @file rng.hpp
 * @brief PCG64 (PCG-XSL-RR 128/64) sample streams.
 *
 * The generator is part of the external contract: reports must be
 * reproducible from (seed, config) alone, in any implementation. The exact
 * algorithm is documented in the README. Substreams for row i of a sweep are
 * seeded with splitmix64(seed ^ (0x9E3779B97F4A7C15 * (i+1))), which keeps
 * sweeps order-independent across worker threads.
 */

#include <cstdint>

#include "critheight/rational.hpp"

namespace critheight {

std::uint64_t splitmix64(std::uint64_t x);

class Pcg64 {
public:
    explicit Pcg64(std::uint64_t seed);

    std::uint64_t next();

    /// Uniform in [0, bound) by rejection from the top bits; bound >= 1.
    std::uint64_t below(std::uint64_t bound);

    /// Uniform in [lo, hi] inclusive.
    long range(long lo, long hi);

    /// p/q with |p|, |q| <= bound uniform, p != 0, q >= 1 (reduced afterwards).
    Rational nonzero_rational(long bound);

    /// Substream generator for row `index` of a sweep under `seed`.
    static Pcg64 substream(std::uint64_t seed, std::uint64_t index);

private:
    unsigned __int128 state_;
    static constexpr std::uint64_t kMulHi = 2549297995355413924ull;
    static constexpr std::uint64_t kMulLo = 4865540595714422341ull;
    static constexpr std::uint64_t kIncHi = 6364136223846793005ull;
    static constexpr std::uint64_t kIncLo = 1442695040888963407ull;
};

}  // namespace critheight
