#pragma once

// Seeded randomness with platform-independent draws. std:: distributions are
// implementation-defined, so bounded draws are done by hand on top of the
// (fully specified) mt19937_64 engine.

#include <cstdint>
#include <random>

#include "polyspace/rational.hpp"

namespace polyspace {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Per-trial seed: identical for serial and parallel runs.
inline std::uint64_t split_seed(std::uint64_t seed, std::uint64_t index) {
    return splitmix64(splitmix64(seed) ^ (index * 0xd1b54a32d192ed03ULL));
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform integer in [lo, hi].
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        if (span == 0) return static_cast<std::int64_t>(next());
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return lo + static_cast<std::int64_t>(x % span);
    }

    /// Uniform double in [0, 1).
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    bool coin() { return (next() >> 63) != 0; }

    /// p/q with |p| <= max_num, 1 <= q <= max_den.
    Rational rational(std::int64_t max_num, std::int64_t max_den) {
        const std::int64_t p = uniform_int(-max_num, max_num);
        const std::int64_t q = uniform_int(1, max_den);
        Rational r(static_cast<long>(p), static_cast<unsigned long>(q));
        r.canonicalize();
        return r;
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace polyspace
