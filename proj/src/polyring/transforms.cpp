#include "svt/polyring/transforms.hpp"

namespace svt::poly {

mpq_class rational_pow(const mpq_class& q, long k) {
    if (k < 0) {
        if (sgn(q) == 0) throw PreconditionFailed("negative power of zero");
        return rational_pow(mpq_class(1) / q, -k);
    }
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), q.get_num_mpz_t(), static_cast<unsigned long>(k));
    mpz_pow_ui(d.get_mpz_t(), q.get_den_mpz_t(), static_cast<unsigned long>(k));
    return mpq_class(n, d);
}

long floor_power(long d, const mpq_class& sigma) {
    if (d < 1) throw PreconditionFailed("floor_power needs D >= 1");
    // Largest k with k^q <= D^p where sigma = p/q.
    const mpz_class& p = sigma.get_num();
    const unsigned long q = sigma.get_den().get_ui();
    mpq_class target = rational_pow(mpq_class(d), p.get_si());
    auto fits = [&](long k) {
        mpz_class kq;
        mpz_ui_pow_ui(kq.get_mpz_t(), static_cast<unsigned long>(k), q);
        return mpq_class(kq) <= target;
    };
    long lo = 0, hi = 1;
    while (fits(hi)) hi *= 2;
    while (hi - lo > 1) {
        long mid = lo + (hi - lo) / 2;
        if (fits(mid))
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

QForm tilde_homogenize(const BiPoly& p, int d, const mpq_class& sigma, const TranslationParams& params) {
    if (p.is_zero()) throw PreconditionFailed("tilde_homogenize of the zero polynomial");
    if (!has_integer_coeffs(p)) throw PreconditionFailed("tilde_homogenize needs integer coefficients");
    int deg = total_degree(p);
    if (deg > d) throw PreconditionFailed("polynomial degree exceeds D");
    mpq_class ms = params.m * params.s;
    if (ms.get_den() != 1) throw PreconditionFailed("m must clear the denominator of s");
    int b = x2_valuation(p);
    int a = d - deg + b;
    long n = 4L * d * floor_power(d, sigma);
    mpz_class scale;
    mpz_pow_ui(scale.get_mpz_t(), params.m.get_mpz_t(), static_cast<unsigned long>(n));
    QForm out(d);
    for (int j = b; j <= p.degree(); ++j) {
        const QPoly& c = p.coeffs()[j];
        for (int i = 0; i <= c.degree(); ++i) {
            if (sgn(c.coeffs()[i]) == 0) continue;
            out.set(i + a, j - b, scale * c.coeffs()[i]);
        }
    }
    return out;
}

BiPoly s_inversion_transform(const BiPoly& p, int d) {
    int h = d / 2;
    if (p.degree() > h) throw PreconditionFailed("X2-degree exceeds floor(D/2)");
    std::vector<QPoly> rows(h + 1);
    for (int j = 0; j <= p.degree(); ++j) rows[h - j] = p.coeffs()[j];
    BiPoly out(std::move(rows));
    if (total_degree(out) > d) throw PreconditionFailed("transformed polynomial exceeds degree D");
    return out;
}

GcdFreeResult gcd_free(const QForm& p, int d, const TranslationParams& params) {
    if (p.degree() != d) throw PreconditionFailed("form degree differs from D");
    if (p.is_zero()) throw PreconditionFailed("gcd_free of the zero form");
    if (p.x0_valuation() > 0) throw PreconditionFailed("form divisible by X0");
    if (p.x2_valuation() > 0) throw PreconditionFailed("form divisible by X2");
    // Scalars do not affect the gcd; dropping them keeps the remainder sequence small.
    mpq_class big = p.norm();
    QForm base = (mpq_class(1) / big) * p;
    QForm g = base;
    for (int j = 1; j <= d && g.degree() > 0; ++j) g = form_gcd(g, phi_pow(base, j, params));
    GcdFreeResult r;
    r.free = g.degree() == 0;
    r.common_factor = g;
    return r;
}

}  // namespace svt::poly
