#pragma once

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <string>

namespace hubres {

// Counter-based 64-bit generator (splitmix-style state advance). Cheap,
// seedable, and identical on every platform, which keeps simulation output
// reproducible byte for byte.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform double in [0, 1) with 53 random bits.
    double next_double() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    // Uniform integer in [0, bound) by rejection, bound >= 1.
    std::uint64_t next_below(std::uint64_t bound) {
        const std::uint64_t limit = bound * (UINT64_MAX / bound);
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % bound;
    }
};

// Derives the generator for one trial from (seed, trial index) so results do
// not depend on scheduling or on how many trials ran before this one.
inline SplitMix64 trial_stream(std::uint64_t seed, std::uint64_t trial) {
    return SplitMix64(seed ^ ((trial + 1) * 0x9e3779b97f4a7c15ULL));
}

// All floating-point output goes through this: 12 significant digits.
inline std::string fmt12(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return std::string(buf);
}

// Round a double to its 12-significant-digit printed form, for numeric JSON
// fields that must match the printed CSV values.
inline double round12(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return std::strtod(buf, nullptr);
}

}  // namespace hubres
