#include "svt/interpolation/interpolation.hpp"

#include "svt/numerics/linalg.hpp"
#include "svt/polyring/transforms.hpp"
#include "svt/recurrence/recurrence.hpp"

#include "orbit.hpp"

namespace svt::interp {

using poly::Exponent;
using poly::monomial_at;
using poly::monomial_count;

using namespace detail;

namespace {

mpz_class factorial(long n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

void fill_lengths(DualBasis& b, long prec) {
    b.lengths.clear();
    if (b.exact) {
        for (const auto& q : b.exact_polys) b.lengths.push_back(RealBall::from_mpq(q.length(), prec));
        b.ball_polys.clear();
        for (const auto& q : b.exact_polys) b.ball_polys.push_back(poly::to_ball_form(q, prec));
    } else {
        for (const auto& q : b.ball_polys) b.lengths.push_back(q.length());
    }
}

// Image of X0^(L-mu-nu) X1 (X1 - X0) ... (X1 - (mu-1) X0) X2^nu under
// X1 -> (X1 - xi X0)/r, X2 -> X2/eta.
template <class C>
std::vector<poly::HomogeneousPoly<C>> falling_images(int L, const C& inv_r, const C& xi, const C& inv_eta) {
    using H = poly::HomogeneousPoly<C>;
    H x0 = H::variable(0);
    H y1 = inv_r * H::variable(1) - (inv_r * xi) * x0;
    H y2 = inv_eta * H::variable(2);
    std::vector<H> out;
    for (int nu = 0; nu <= L; ++nu)
        for (int mu = 0; mu <= L - nu; ++mu) {
            H f = poly::pow(x0, L - mu - nu) * poly::pow(y2, nu);
            for (int t = 0; t < mu; ++t) f = f * (y1 - C(t) * x0);
            out.push_back(f);
        }
    return out;
}

}  // namespace

RealBall change_constant(const TranslationParams& params, long prec) {
    RealBall r = RealBall::from_mpq(abs(params.r), prec);
    RealBall xi = params.xi_ball(prec).abs();
    RealBall eta = params.eta_ball(prec).abs();
    if (eta.contains_zero()) throw PrecisionExhausted("|eta| not separated from 0");
    RealBall c = num::max(RealBall(1), (RealBall(1) + xi) / r);
    return num::max(c, eta.inv());
}

RealBall interpolation_bound(int L, const TranslationParams& params, long prec) {
    if (L < 0) throw PreconditionFailed("negative degree");
    using G = num::GaussianRational;
    std::vector<rec::Node<G>> nodes;
    for (int nu = 0; nu <= L; ++nu) nodes.push_back({G(poly::rational_pow(params.s, nu)), L - nu + 1});
    rec::RecoveryConstants mb = rec::recovery_constants(nodes, prec);
    RealBall c = change_constant(params, prec);
    const int M = monomial_count(L);
    return num::pow(c, L) * RealBall(M) * RealBall::from_mpz(factorial(L), prec) * mb.bound;
}

mpz_class c2_power(long c2, int L) {
    if (L == 0) return 1;
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(c2 * L), static_cast<unsigned long>(3 * L));
    return r;
}

long derive_c2(const TranslationParams& params, int lmax, long prec) {
    std::vector<RealBall> bounds;
    for (int L = 1; L <= lmax; ++L) bounds.push_back(interpolation_bound(L, params, prec));
    for (long c2 = 4;; c2 *= 2) {
        bool ok = true;
        for (int L = 1; L <= lmax && ok; ++L)
            ok = num::certainly_le(bounds[L - 1], RealBall::from_mpz(c2_power(c2, L), prec));
        if (ok) return c2;
        if (c2 > (1L << 40)) throw PrecisionExhausted("no power-of-two constant found");
    }
}

DualBasis dual_basis(int L, const TranslationParams& params, long prec) {
    if (L < 0) throw PreconditionFailed("negative degree");
    if (abs(params.s) == 1) throw PreconditionFailed("s = +-1");
    if (abs(params.s) < 1) throw PreconditionFailed("dual basis needs |s| > 1");
    DualBasis b;
    b.L = L;
    b.M = monomial_count(L);
    b.bound = interpolation_bound(L, params, prec);
    if (params.rational()) {
        b.exact = true;
        num::Matrix<mpq_class> inv = num::inverse(evaluation_matrix<mpq_class>(L, b.M, exact_orbit(params, b.M)));
        for (int j = 0; j < b.M; ++j) {
            QForm q(L);
            for (int idx = 0; idx < b.M; ++idx) q.set_at(idx, inv[idx][j]);
            b.exact_polys.push_back(q);
        }
    } else {
        long wp = prec + 8L * b.M;
        num::Matrix<ComplexBall> inv =
            num::inverse(evaluation_matrix<ComplexBall>(L, b.M, ball_orbit(params, b.M, wp)));
        for (int j = 0; j < b.M; ++j) {
            BallForm q(L);
            for (int idx = 0; idx < b.M; ++idx) q.set_at(idx, inv[idx][j]);
            b.ball_polys.push_back(q);
        }
    }
    fill_lengths(b, prec);
    return b;
}

DualBasis dual_basis_falling(int L, const TranslationParams& params, long prec) {
    if (L < 0) throw PreconditionFailed("negative degree");
    if (abs(params.s) <= 1) throw PreconditionFailed("dual basis needs |s| > 1");
    using G = num::GaussianRational;
    DualBasis b;
    b.L = L;
    b.M = monomial_count(L);
    b.bound = interpolation_bound(L, params, prec);

    // Q(gamma_i) = P(1, i, s^i) = sum_{mu,nu} p_{mu,nu} s^(mu nu) i^(mu) (s^nu)^(i - mu), so the
    // coefficients of the dual polynomial Q_j are the recurrence coefficients of the unit
    // sequence e_j; A_{mu,nu} = (b(tau) e_j)_0 is the j-th coefficient of the certificate polynomial.
    std::vector<rec::Node<G>> nodes;
    for (int nu = 0; nu <= L; ++nu) nodes.push_back({G(poly::rational_pow(params.s, nu)), L - nu + 1});
    std::vector<std::vector<mpq_class>> p(b.M);  // p[j][pair]
    for (int j = 0; j < b.M; ++j) p[j].resize(b.M);
    int pair = 0;
    for (int nu = 0; nu <= L; ++nu)
        for (int mu = 0; mu <= L - nu; ++mu, ++pair) {
            num::Poly<G> cert = rec::certificate_poly(nodes, mu, nu);
            mpq_class scale = poly::rational_pow(params.s, -(long)mu * nu);
            for (int j = 0; j < b.M; ++j) {
                G a = cert.coeff(j);
                if (sgn(a.im()) != 0) throw Error("non-real recovery coefficient for real nodes");
                p[j][pair] = a.re() * scale;
            }
        }

    if (params.rational()) {
        b.exact = true;
        auto images = falling_images<mpq_class>(L, mpq_class(1) / params.r, params.xi_q(), mpq_class(1) / params.eta_q());
        for (int j = 0; j < b.M; ++j) {
            QForm q(L);
            for (int t = 0; t < b.M; ++t)
                if (sgn(p[j][t]) != 0) q = q + p[j][t] * images[t];
            b.exact_polys.push_back(q);
        }
    } else {
        long wp = prec + 4L * b.M;
        ComplexBall inv_eta = params.eta_ball(wp).inv();
        auto images = falling_images<ComplexBall>(L, ComplexBall::from_mpq(mpq_class(1) / params.r, wp),
                                                  params.xi_ball(wp), inv_eta);
        for (int j = 0; j < b.M; ++j) {
            BallForm q(L);
            for (int t = 0; t < b.M; ++t)
                if (sgn(p[j][t]) != 0) q = q + ComplexBall::from_mpq(p[j][t], wp) * images[t];
            b.ball_polys.push_back(q);
        }
    }
    fill_lengths(b, prec);
    return b;
}

bool kronecker_holds(const DualBasis& basis, const TranslationParams& params, long prec) {
    if (basis.exact) {
        auto pts = exact_orbit(params, basis.M);
        for (int j = 0; j < basis.M; ++j)
            for (int i = 0; i < basis.M; ++i)
                if (basis.exact_polys[j].eval(pts[i]) != (i == j ? 1 : 0)) return false;
        return true;
    }
    auto pts = ball_orbit(params, basis.M, prec + 8L * basis.M);
    for (int j = 0; j < basis.M; ++j)
        for (int i = 0; i < basis.M; ++i)
            if (!basis.ball_polys[j].eval(pts[i]).contains(ComplexBall(i == j ? 1 : 0))) return false;
    return true;
}

Interpolant interpolate(const std::vector<mpq_class>& values, int L, const TranslationParams& params, long prec) {
    if ((int)values.size() != monomial_count(L)) throw PreconditionFailed("expected C(L+2, 2) values");
    if (!params.rational()) {
        std::vector<ComplexBall> bv;
        for (const auto& v : values) bv.push_back(ComplexBall::from_mpq(v, prec));
        return interpolate(bv, L, params, prec);
    }
    DualBasis b = dual_basis(L, params, prec);
    Interpolant out;
    out.exact = true;
    out.exact_poly = QForm(L);
    mpq_class vmax = 0;
    for (int j = 0; j < b.M; ++j) {
        if (sgn(values[j]) != 0) out.exact_poly = out.exact_poly + values[j] * b.exact_polys[j];
        vmax = std::max(vmax, mpq_class(abs(values[j])));
    }
    out.ball_poly = poly::to_ball_form(out.exact_poly, prec);
    out.length = RealBall::from_mpq(out.exact_poly.length(), prec);
    out.bound = b.bound * RealBall::from_mpq(vmax, prec);
    out.certified = num::certainly_le(out.length, out.bound);
    return out;
}

Interpolant interpolate(const std::vector<ComplexBall>& values, int L, const TranslationParams& params, long prec) {
    if ((int)values.size() != monomial_count(L)) throw PreconditionFailed("expected C(L+2, 2) values");
    DualBasis b = dual_basis(L, params, prec);
    Interpolant out;
    out.ball_poly = BallForm(L);
    RealBall vmax;
    for (int j = 0; j < b.M; ++j) {
        out.ball_poly = out.ball_poly + values[j] * b.ball_polys[j];
        vmax = num::max(vmax, values[j].abs());
    }
    out.length = out.ball_poly.length();
    out.bound = b.bound * vmax;
    out.certified = num::certainly_le(out.length, out.bound);
    return out;
}

}  // namespace svt::interp
