#pragma once

// Random varieties and recurrence instances for the property suites.

#include "svt/recurrence/recurrence.hpp"
#include "svt/varieties/variety.hpp"
#include "svt/verify/generators.hpp"

namespace svt::gen {

// Irreducible integer polynomial of degree n with coefficients in [-10, 10], positive leading term.
inline num::ZPoly irreducible(std::mt19937_64& rng, int n) {
    for (;;) {
        std::vector<mpz_class> c;
        for (int i = 0; i < n; ++i) c.push_back(integer(rng, -10, 10));
        c.push_back(integer(rng, 1, 10));
        num::ZPoly f(c);
        if (f.degree() == n && num::is_irreducible(f)) return f;
    }
}

// Point with coordinates in Q(theta), deg theta <= max_degree, redrawn until it is a valid variety.
inline var::ZeroDimVariety variety(std::mt19937_64& rng, int max_degree, long prec = 128) {
    for (;;) {
        int n = static_cast<int>(integer(rng, 1, max_degree));
        num::ZPoly f = irreducible(rng, n);
        std::array<num::QPoly, 3> c;
        for (auto& q : c) {
            std::vector<mpq_class> v;
            for (int i = 0; i < n; ++i) v.push_back(rational(rng, 10, 10));
            q = num::QPoly(v);
        }
        try {
            return var::variety_from_point(f, c, prec);
        } catch (const Error&) {
            // all-zero or coinciding conjugates: draw again
        }
    }
}

inline num::GaussianRational gaussian(std::mt19937_64& rng, long nb, long db) {
    return num::GaussianRational(rational(rng, nb, db), rational(rng, nb, db));
}

// At most four distinct Gaussian-rational nodes of multiplicity <= 3, coefficients with |re|, |im| <= 10.
inline rec::RecurrenceData<num::GaussianRational> recurrence(std::mt19937_64& rng) {
    using G = num::GaussianRational;
    rec::RecurrenceData<G> s;
    int n = static_cast<int>(integer(rng, 1, 4));
    while (static_cast<int>(s.nodes.size()) < n) {
        G a = gaussian(rng, 4, 3);
        bool fresh = true;
        for (const auto& nd : s.nodes) fresh = fresh && !(nd.alpha == a);
        if (fresh) s.nodes.push_back({a, static_cast<int>(integer(rng, 1, 3))});
    }
    for (const auto& nd : s.nodes) {
        std::vector<G> row;
        for (int mu = 0; mu < nd.multiplicity; ++mu) row.push_back(G(integer(rng, -10, 10), integer(rng, -10, 10)));
        s.coeffs.push_back(row);
    }
    return s;
}

// Nonzero rational triple.
inline proj::ExactTriple triple(std::mt19937_64& rng, long nb, long db) {
    proj::ExactTriple z;
    do z = {rational(rng, nb, db), rational(rng, nb, db), rational(rng, nb, db)};
    while (sgn(z[0]) == 0 && sgn(z[1]) == 0 && sgn(z[2]) == 0);
    return z;
}

}  // namespace svt::gen
