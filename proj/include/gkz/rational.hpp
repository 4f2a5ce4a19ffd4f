#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <string>

#include "gkz/errors.hpp"

namespace gkz {

// Exact rational scalar. mpq_class keeps gcd(|num|,den)=1 and den>=1 after
// canonicalize(); every constructor below canonicalizes.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat rat_from_string(const std::string& s) {
    Rat q;
    if (q.set_str(s, 10) != 0) throw ParseError("bad rational literal: " + s);
    q.canonicalize();
    return q;
}

inline std::string rat_str(const Rat& q) { return q.get_str(); }

// Deterministic RNG for weight vectors and parameter specializations.
using Rng = std::mt19937_64;

// Nonzero rational with numerator and denominator drawn from [1, 10^4].
inline Rat random_rat(Rng& rng) {
    std::uniform_int_distribution<long> d(1, 10000);
    return rat(d(rng), d(rng));
}

inline long random_weight_entry(Rng& rng) {
    std::uniform_int_distribution<long> d(1, 1000);
    return d(rng);
}

inline Int falling_factorial(const Int& n, long k) {
    Int f = 1;
    for (long i = 0; i < k; ++i) f *= (n - i);
    return f;
}

}  // namespace gkz
