#include "critheight/rng.hpp"

namespace critheight {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

namespace {
constexpr unsigned __int128 combine(std::uint64_t hi, std::uint64_t lo) {
    return (static_cast<unsigned __int128>(hi) << 64) | lo;
}
}  // namespace

Pcg64::Pcg64(std::uint64_t seed) {
    const std::uint64_t s0 = splitmix64(seed);
    const std::uint64_t s1 = splitmix64(s0);
    const unsigned __int128 mult = combine(kMulHi, kMulLo);
    const unsigned __int128 inc = combine(kIncHi, kIncLo) | 1u;
    state_ = 0;
    state_ = state_ * mult + inc;
    state_ += combine(s0, s1);
    state_ = state_ * mult + inc;
}

std::uint64_t Pcg64::next() {
    const unsigned __int128 mult = combine(kMulHi, kMulLo);
    const unsigned __int128 inc = combine(kIncHi, kIncLo) | 1u;
    state_ = state_ * mult + inc;
    const std::uint64_t xored =
        static_cast<std::uint64_t>(state_ >> 64) ^ static_cast<std::uint64_t>(state_);
    const unsigned rot = static_cast<unsigned>(state_ >> 122);
    return (xored >> rot) | (xored << ((64u - rot) & 63u));
}

std::uint64_t Pcg64::below(std::uint64_t bound) {
    if (bound <= 1) return 0;
    const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
    for (;;) {
        std::uint64_t r = next();
        if (r >= threshold) return r % bound;
    }
}

long Pcg64::range(long lo, long hi) {
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

Rational Pcg64::nonzero_rational(long bound) {
    long p = 0;
    while (p == 0) p = range(-bound, bound);
    long q = range(1, bound);
    return make_rational(p, q);
}

Pcg64 Pcg64::substream(std::uint64_t seed, std::uint64_t index) {
    return Pcg64(splitmix64(seed ^ (0x9E3779B97F4A7C15ull * (index + 1))));
}

}  // namespace critheight
