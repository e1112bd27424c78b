#pragma once

#include <random>

#include "g2cl/rational.hpp"

namespace g2cl::testing {

// Deterministic RNG for property tests; the seed is fixed so failures
// reproduce.  G2CL_TEST_SEED overrides it for exploratory fuzzing.
inline std::mt19937_64& rng() {
    static std::mt19937_64 gen = [] {
        unsigned long long seed = 0x5eed5eedULL;
        if (const char* env = std::getenv("G2CL_TEST_SEED")) seed = std::strtoull(env, nullptr, 10);
        return std::mt19937_64(seed);
    }();
    return gen;
}

inline long random_long(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng());
}

// Uniform-ish nonzero rational with numerator/denominator bounded by `bound`.
inline Rat random_rational(long bound = 50, bool allow_zero = false) {
    for (;;) {
        long n = random_long(-bound, bound);
        if (!allow_zero && n == 0) continue;
        long d = random_long(1, bound);
        return make_rat(n, d);
    }
}

}  // namespace g2cl::testing
