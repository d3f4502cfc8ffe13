#pragma once

// Hand-rolled random generators shared by the verification suites and the unit tests.

#include "svt/numerics/factor.hpp"
#include "svt/polyring/bivariate.hpp"
#include "svt/polyring/homogeneous.hpp"

#include <cstdint>
#include <random>

namespace svt::gen {

// Seed of trial t under base seed s (splitmix64 of s + t).
inline std::uint64_t trial_seed(std::uint64_t s, std::uint64_t t) {
    std::uint64_t z = s + 0x9e3779b97f4a7c15ULL * (t + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline long integer(std::mt19937_64& rng, long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline mpq_class rational(std::mt19937_64& rng, long num_bound, long den_bound) {
    mpq_class q(integer(rng, -num_bound, num_bound), integer(rng, 1, den_bound));
    q.canonicalize();
    return q;
}

inline mpq_class nonzero_rational(std::mt19937_64& rng, long num_bound, long den_bound) {
    for (;;) {
        mpq_class q = rational(rng, num_bound, den_bound);
        if (sgn(q) != 0) return q;
    }
}

inline svt::poly::QForm form(std::mt19937_64& rng, int d, long bound, double density = 0.7) {
    svt::poly::QForm p(d);
    std::bernoulli_distribution keep(density);
    for (int idx = 0; idx < p.size(); ++idx)
        if (keep(rng)) p.set_at(idx, mpq_class(integer(rng, -bound, bound)));
    return p;
}

// Bivariate integer polynomial of total degree exactly d (when d >= 0).
inline svt::poly::BiPoly bivariate(std::mt19937_64& rng, int d, long bound) {
    using svt::poly::BiPoly;
    for (;;) {
        BiPoly p;
        for (int e2 = 0; e2 <= d; ++e2)
            for (int e1 = 0; e1 + e2 <= d; ++e1) {
                long c = integer(rng, -bound, bound);
                if (c != 0 && integer(rng, 0, 2) > 0) p = p + svt::poly::bi_monomial(mpq_class(c), e1, e2);
            }
        if (svt::poly::total_degree(p) == d) return p;
    }
}

}  // namespace svt::gen
