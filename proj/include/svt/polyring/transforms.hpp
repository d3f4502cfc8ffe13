#pragma once

#include "svt/polyring/bivariate.hpp"
#include "svt/polyring/homogeneous.hpp"
#include "svt/polyring/params.hpp"

#include <optional>

namespace svt::poly {

// Conversion of exact rationals into a coefficient domain.
template <class C>
C from_rational(const mpq_class& q, long prec);
template <>
inline mpq_class from_rational<mpq_class>(const mpq_class& q, long) {
    return q;
}
template <>
inline ComplexBall from_rational<ComplexBall>(const mpq_class& q, long prec) {
    return ComplexBall::from_mpq(q, prec);
}

mpq_class rational_pow(const mpq_class& q, long k);

// Phi^j(P) = P(X0, X1 + j r X0, s^j X2).  prec is used only for ball coefficients.
template <class C>
HomogeneousPoly<C> phi_pow(const HomogeneousPoly<C>& p, long j, const TranslationParams& params, long prec = 128) {
    const int d = p.degree();
    const C shift = from_rational<C>(mpq_class(j) * params.r, prec);
    std::vector<C> spow;
    {
        mpq_class sj = rational_pow(params.s, j);
        C base = from_rational<C>(sj, prec);
        spow.push_back(C(1));
        for (int e = 1; e <= d; ++e) spow.push_back(spow.back() * base);
    }
    std::vector<C> shpow{C(1)};
    for (int e = 1; e <= d; ++e) shpow.push_back(shpow.back() * shift);
    HomogeneousPoly<C> out(d);
    for (int idx = 0; idx < p.size(); ++idx) {
        if (num::coeff_is_zero(p.at(idx))) continue;
        Exponent e = monomial_at(d, idx);
        C base = p.at(idx) * spow[e.e2];
        // (X1 + shift X0)^e1 = sum_k C(e1,k) X1^k (shift X0)^(e1-k)
        mpz_class binom = 1;
        for (int k = 0; k <= e.e1; ++k) {
            if (k > 0) binom = binom * (e.e1 - k + 1) / k;
            C term = base * from_rational<C>(mpq_class(binom), prec) * shpow[e.e1 - k];
            out.set(k, e.e2, out.coeff(k, e.e2) + term);
        }
    }
    return out;
}

// floor(D^sigma) for rational sigma.
long floor_power(long d, const mpq_class& sigma);

// The homogenized form m^(4 D floor(D^sigma)) X1^a X2^(-b) P homogenized in degree D.
QForm tilde_homogenize(const BiPoly& p, int d, const mpq_class& sigma, const TranslationParams& params);

// X2^floor(D/2) P(X1, 1/X2).
BiPoly s_inversion_transform(const BiPoly& p, int d);

struct GcdFreeResult {
    bool free = true;
    QForm common_factor;
};

// Whether P, Phi(P), ..., Phi^D(P) have no common factor.
GcdFreeResult gcd_free(const QForm& p, int d, const TranslationParams& params);

}  // namespace svt::poly
