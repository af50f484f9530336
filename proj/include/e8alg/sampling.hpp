#pragma once

// Deterministic sampling for the randomized checks. A fixed SplitMix64
// generator is used instead of <random> distributions so that identical
// seeds give identical streams on every platform and standard library.

#include "e8alg/rational.hpp"

#include <cstdint>
#include <vector>

namespace e8alg {

struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t below(std::uint64_t n) { return next() % n; }
};

/// Rational with numerator in [-8, 8] and denominator in {1, 2, 4}.
inline Rational random_rational(SplitMix64& rng) {
    const std::int64_t num = static_cast<std::int64_t>(rng.below(17)) - 8;
    const std::int64_t den = std::int64_t{1} << rng.below(3);
    return Rational(num, den);
}

inline Rational random_nonzero_rational(SplitMix64& rng) {
    for (;;) {
        Rational r = random_rational(rng);
        if (!r.is_zero()) return r;
    }
}

/// Sparse random coordinate vector: `support` nonzero slots (with
/// possible collisions) of small dyadic values.
inline std::vector<Rational> random_coords(SplitMix64& rng, int dim, int support = 16) {
    std::vector<Rational> c(static_cast<std::size_t>(dim));
    for (int s = 0; s < support; ++s)
        c[rng.below(static_cast<std::uint64_t>(dim))] += random_nonzero_rational(rng);
    return c;
}

/// Dense random coordinate vector of small dyadic values.
inline std::vector<Rational> random_dense_coords(SplitMix64& rng, int dim) {
    std::vector<Rational> c(static_cast<std::size_t>(dim));
    for (auto& x : c) x = random_rational(rng);
    return c;
}

} // namespace e8alg
