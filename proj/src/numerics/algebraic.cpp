#include "svt/numerics/algebraic.hpp"

#include <cmath>

namespace svt::num {

namespace {

constexpr long kMaxWorkingPrec = 1L << 16;

std::vector<ComplexBall> ball_coeffs(const ZPoly& f, long wp) {
    std::vector<ComplexBall> c;
    for (const auto& a : f.coeffs()) c.emplace_back(RealBall::from_mpz(a, wp), RealBall());
    return c;
}

ComplexBall horner(const std::vector<ComplexBall>& c, const ComplexBall& z) {
    ComplexBall acc = c.back();
    for (int i = (int)c.size() - 2; i >= 0; --i) acc = acc * z + c[i];
    return acc;
}

// Midpoint with the precision raised to wp.
ComplexBall at_prec(const ComplexBall& z, long wp) {
    BigFloat re(wp), im(wp);
    mpfr_set(re.get(), z.re_mid().get(), MPFR_RNDN);
    mpfr_set(im.get(), z.im_mid().get(), MPFR_RNDN);
    return ComplexBall::from_mid_rad(std::move(re), std::move(im), BigFloat(kRadPrec));
}

double log_abs(const mpz_class& a) {
    long e = 0;
    double d = mpz_get_d_2exp(&e, a.get_mpz_t());
    return std::log(std::fabs(d)) + e * std::log(2.0);
}

std::vector<ComplexBall> initial_points(const ZPoly& f, long wp) {
    const int n = f.degree();
    // Fujiwara-type radius computed in the log domain.
    double log_r = -1e300;
    double la = log_abs(f.lead());
    for (int k = 1; k <= n; ++k) {
        const mpz_class& c = f.coeffs()[n - k];
        if (sgn(c) == 0) continue;
        log_r = std::max(log_r, (log_abs(c) - la) / k);
    }
    double radius = log_r < -700 ? 1.0 : std::exp(std::min(log_r, 700.0)) * 2.0;
    std::vector<ComplexBall> z;
    const double two_pi = 6.283185307179586;
    for (int k = 0; k < n; ++k) {
        double ang = two_pi * k / n + 0.4;
        BigFloat re(wp), im(wp);
        mpfr_set_d(re.get(), radius * std::cos(ang), MPFR_RNDN);
        mpfr_set_d(im.get(), radius * std::sin(ang), MPFR_RNDN);
        z.push_back(ComplexBall::from_mid_rad(std::move(re), std::move(im), BigFloat(kRadPrec)));
    }
    return z;
}

// Simultaneous Aberth iteration on midpoints.
void aberth(const ZPoly& f, std::vector<ComplexBall>& z, long wp, int max_iter) {
    const int n = f.degree();
    std::vector<ComplexBall> c = ball_coeffs(f, wp);
    std::vector<ComplexBall> dc;
    for (int i = 1; i <= n; ++i) dc.push_back(c[i] * ComplexBall(static_cast<long>(i)));
    BigFloat tol = pow2(-wp + 8);
    for (int it = 0; it < max_iter; ++it) {
        bool done = true;
        for (int i = 0; i < n; ++i) {
            try {
                ComplexBall fz = horner(c, z[i]).midpoint();
                if (fz.is_exact_zero()) continue;
                ComplexBall dfz = horner(dc, z[i]).midpoint();
                ComplexBall ratio = (fz / dfz).midpoint();
                ComplexBall sum;
                for (int j = 0; j < n; ++j) {
                    if (j == i) continue;
                    sum = (sum + (z[i] - z[j]).midpoint().inv()).midpoint();
                }
                ComplexBall w = (ratio / (ComplexBall(1) - ratio * sum)).midpoint();
                z[i] = (z[i] - w).midpoint();
                BigFloat scale = z[i].mid_abs_upper();
                mpfr_add_ui(scale.get(), scale.get(), 1, MPFR_RNDU);
                BigFloat wabs = w.mid_abs_upper();
                BigFloat lim(kRadPrec);
                mpfr_mul(lim.get(), tol.get(), scale.get(), MPFR_RNDU);
                if (wabs > lim) done = false;
            } catch (const PrecisionExhausted&) {
                // Coincident approximations: nudge apart.
                BigFloat eps = pow2(-wp / 2, wp);
                z[i] = ComplexBall::from_mid_rad(z[i].re_mid(), z[i].im_mid(), BigFloat(kRadPrec)) +
                       ComplexBall::from_mid_rad(BigFloat(wp), eps, BigFloat(kRadPrec));
                z[i] = z[i].midpoint();
                done = false;
            }
        }
        if (done) return;
    }
}

// Inclusion disks from Weierstrass corrections; disjoint disks each hold exactly one root.
std::optional<std::vector<ComplexBall>> certify(const ZPoly& f, const std::vector<ComplexBall>& z, long wp) {
    const int n = f.degree();
    std::vector<ComplexBall> c = ball_coeffs(f, wp);
    std::vector<ComplexBall> out;
    for (int i = 0; i < n; ++i) {
        ComplexBall den = c.back();
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            den = den * (z[i] - z[j]);
        }
        if (den.contains_zero()) return std::nullopt;
        ComplexBall w = horner(c, z[i]) / den;
        BigFloat r = w.abs().upper();
        mpfr_mul_ui(r.get(), r.get(), n, MPFR_RNDU);
        BigFloat rr(kRadPrec);
        mpfr_set(rr.get(), r.get(), MPFR_RNDU);
        out.push_back(ComplexBall::from_mid_rad(z[i].re_mid(), z[i].im_mid(), std::move(rr)));
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (out[i].overlaps(out[j])) return std::nullopt;
    return out;
}

bool radius_ok(const ComplexBall& b, long prec) {
    BigFloat scale(kRadPrec);
    // (1+|mid|) computed downwards keeps the test conservative.
    BigFloat m(kRadPrec);
    mpfr_hypot(m.get(), b.re_mid().get(), b.im_mid().get(), MPFR_RNDD);
    mpfr_add_ui(scale.get(), m.get(), 1, MPFR_RNDD);
    mpfr_mul_2si(scale.get(), scale.get(), 1 - prec, MPFR_RNDD);
    return b.rad() <= scale;
}

bool ball_before(const ComplexBall& a, const ComplexBall& b) {
    RealBall ra = a.real(), rb = b.real();
    if (!ra.overlaps(rb)) return a.re_mid() < b.re_mid();
    return a.im_mid() < b.im_mid();
}

}  // namespace

std::vector<ComplexBall> conjugate_embeddings(const ZPoly& f, long prec) {
    const int n = f.degree();
    if (n < 1) throw PreconditionFailed("conjugate embeddings of a constant polynomial");
    if (!is_squarefree(f)) throw PreconditionFailed("conjugate embeddings need a squarefree polynomial");
    if (n == 1) {
        mpq_class root(-f.coeff(0), f.coeff(1));
        root.canonicalize();
        long bits = std::max<long>(prec + 8, (long)mpz_sizeinbase(root.get_num_mpz_t(), 2) + 8);
        return {ComplexBall(RealBall::from_mpq(root, bits), RealBall())};
    }
    long wp = std::max<long>(64, prec + 32);
    std::vector<ComplexBall> z = initial_points(f, wp);
    int iters = 400 + 20 * n;
    for (;;) {
        for (auto& p : z) p = at_prec(p, wp);
        aberth(f, z, wp, iters);
        if (auto disks = certify(f, z, wp)) {
            bool ok = true;
            for (const auto& d : *disks) ok = ok && radius_ok(d, prec);
            if (ok) {
                std::vector<ComplexBall> out = *disks;
                for (size_t i = 1; i < out.size(); ++i)
                    for (size_t j = i; j > 0 && ball_before(out[j], out[j - 1]); --j) std::swap(out[j], out[j - 1]);
                return out;
            }
        }
        wp *= 2;
        iters = 60 + 4 * n;
        if (wp > kMaxWorkingPrec) throw PrecisionExhausted("root isolation did not converge");
    }
}

int locate_root(const ZPoly& f, const ComplexBall& box, long prec) {
    for (long p = prec; p <= std::max<long>(prec, 4096); p *= 2) {
        std::vector<ComplexBall> roots = conjugate_embeddings(f, p);
        int inside = -1, count = 0;
        bool ambiguous = false;
        for (size_t i = 0; i < roots.size(); ++i) {
            if (box.contains(roots[i])) {
                inside = static_cast<int>(i);
                ++count;
            } else if (box.overlaps(roots[i])) {
                ambiguous = true;
            }
        }
        if (count > 1) return -1;
        if (!ambiguous) return count == 1 ? inside : -1;
    }
    return -1;
}

AlgebraicNumber AlgebraicNumber::make(const ZPoly& minpoly, const ComplexBall& box) {
    if (minpoly.degree() < 1) throw MalformedInput("minimal polynomial must have positive degree");
    ZPoly f = primitive_part(minpoly);
    if (!(f == minpoly)) throw MalformedInput("minimal polynomial must be primitive with positive leading coefficient");
    if (!is_irreducible(f)) throw MalformedInput("minimal polynomial is reducible");
    return AlgebraicNumber{f, box};
}

AlgebraicNumber AlgebraicNumber::rational(const mpq_class& q) {
    ZPoly f(std::vector<mpz_class>{-q.get_num(), q.get_den()});
    long bits = std::max<long>(64, (long)mpz_sizeinbase(q.get_num_mpz_t(), 2) + 64);
    return AlgebraicNumber{f, ComplexBall(RealBall::from_mpq(q, bits), RealBall())};
}

AlgebraicNumber AlgebraicNumber::nearest_root(const ZPoly& minpoly, const ComplexBall& approx) {
    ZPoly f = primitive_part(minpoly);
    std::vector<ComplexBall> roots = conjugate_embeddings(f, 64);
    size_t best = 0;
    BigFloat best_d(kRadPrec);
    for (size_t i = 0; i < roots.size(); ++i) {
        BigFloat d = (roots[i].midpoint() - approx.midpoint()).mid_abs_upper();
        if (i == 0 || d < best_d) {
            best = i;
            best_d = d;
        }
    }
    if (roots.size() == 1) return AlgebraicNumber{f, roots[0]};
    // Disk of half the distance to the nearest other root isolates it.
    BigFloat sep(kRadPrec);
    bool first = true;
    for (size_t i = 0; i < roots.size(); ++i) {
        if (i == best) continue;
        BigFloat d(kRadPrec);
        ComplexBall diff = roots[i].midpoint() - roots[best].midpoint();
        BigFloat m(kRadPrec);
        mpfr_hypot(m.get(), diff.re_mid().get(), diff.im_mid().get(), MPFR_RNDD);
        if (first || m < sep) sep = m;
        first = false;
    }
    mpfr_div_ui(sep.get(), sep.get(), 3, MPFR_RNDD);
    ComplexBall box = ComplexBall::from_mid_rad(roots[best].re_mid(), roots[best].im_mid(), sep);
    return AlgebraicNumber{f, box};
}

ComplexBall refine_embedding(const AlgebraicNumber& a, long prec) {
    const ZPoly& f = a.minpoly;
    if (f.degree() < 1) throw MalformedInput("minimal polynomial must have positive degree");
    if (f.degree() == 1) {
        mpq_class root(-f.coeff(0), f.coeff(1));
        root.canonicalize();
        ComplexBall exact;
        mpz_class den = root.get_den();
        if (mpz_popcount(den.get_mpz_t()) == 1) {
            long bits = std::max<long>(64, (long)mpz_sizeinbase(root.get_num_mpz_t(), 2) + 2);
            exact = ComplexBall(RealBall::from_mpq(root, bits), RealBall());
        } else {
            exact = ComplexBall(RealBall::from_mpq(root, prec + 2), RealBall());
        }
        if (!a.box.overlaps(exact)) throw MalformedInput("isolating box misses the rational root");
        return exact;
    }
    if (!is_squarefree(f)) throw MalformedInput("minimal polynomial is not squarefree");
    std::vector<ComplexBall> roots;
    long p = prec;
    for (;;) {
        roots = conjugate_embeddings(f, p);
        int inside = 0, hit = -1;
        bool ambiguous = false;
        for (size_t i = 0; i < roots.size(); ++i) {
            if (a.box.contains(roots[i])) {
                ++inside;
                hit = static_cast<int>(i);
            } else if (a.box.overlaps(roots[i])) {
                ambiguous = true;
            }
        }
        if (inside > 1) throw MalformedInput("box contains several roots");
        if (!ambiguous) {
            if (inside == 0) throw MalformedInput("box contains no root");
            return roots[hit];
        }
        if (p >= std::max<long>(prec, 4096) * 2) throw MalformedInput("box boundary passes through a root");
        p *= 2;
    }
}

bool is_real_root(const AlgebraicNumber& a) {
    const ZPoly& f = a.minpoly;
    if (f.degree() == 1) return true;
    for (long p = 64; p <= 8192; p *= 2) {
        std::vector<ComplexBall> roots = conjugate_embeddings(f, p);
        int idx = -1;
        for (size_t i = 0; i < roots.size(); ++i)
            if (a.box.contains(roots[i])) idx = static_cast<int>(i);
        if (idx < 0) continue;
        const ComplexBall& z = roots[idx];
        BigFloat im = z.im_mid();
        mpfr_abs(im.get(), im.get(), MPFR_RNDN);
        if (im > z.rad()) return false;
        // The disk of thrice the radius must hold no other root.
        BigFloat big(kRadPrec);
        mpfr_mul_ui(big.get(), z.rad().get(), 3, MPFR_RNDU);
        ComplexBall wide = ComplexBall::from_mid_rad(z.re_mid(), z.im_mid(), big);
        bool isolated = true;
        for (size_t i = 0; i < roots.size(); ++i)
            if ((int)i != idx && wide.overlaps(roots[i])) isolated = false;
        if (!isolated) continue;
        mpq_class re = z.re_mid().to_mpq(), two_r = 2 * z.rad().to_mpq();
        mpq_class lo = to_q(f)(re - two_r), hi = to_q(f)(re + two_r);
        return sgn(lo) * sgn(hi) < 0;
    }
    throw PrecisionExhausted("could not decide whether a root is real");
}

}  // namespace svt::num
