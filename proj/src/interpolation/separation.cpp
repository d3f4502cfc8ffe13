#include "svt/interpolation/interpolation.hpp"

#include "svt/polyring/transforms.hpp"

#include "orbit.hpp"

namespace svt::interp {

using namespace detail;

namespace {

// Scalar helpers shared by the exact (mpq_class) and enclosure (ComplexBall) paths.
mpq_class mag(const mpq_class& x) { return abs(x); }
RealBall mag(const ComplexBall& x) { return x.abs(); }
RealBall to_ball(const mpq_class& x, long prec) { return RealBall::from_mpq(x, prec); }
RealBall to_ball(const RealBall& x, long) { return x; }
bool le(const mpq_class& a, const mpq_class& b) { return a <= b; }
bool le(const RealBall& a, const RealBall& b) { return num::certainly_le(a, b); }
bool same(const mpq_class& a, const mpq_class& b) { return a == b; }
bool same(const RealBall& a, const RealBall& b) { return a.overlaps(b); }
mpq_class biggest(const mpq_class& a, const mpq_class& b) { return a < b ? b : a; }
RealBall biggest(const RealBall& a, const RealBall& b) { return num::max(a, b); }

template <class A>
A lift(const mpz_class& v, long prec) {
    if constexpr (std::is_same_v<A, RealBall>)
        return RealBall::from_mpz(v, prec);
    else
        return mpq_class(v);
}

template <class C>
C power(const C& x, int e) {
    C acc(1);
    for (int t = 0; t < e; ++t) acc = acc * x;
    return acc;
}

template <class C>
auto max_norm(const std::array<C, 3>& z) {
    return biggest(biggest(mag(z[0]), mag(z[1])), mag(z[2]));
}

template <class C>
std::array<C, 3> wedge3(const std::array<C, 3>& a, const std::array<C, 3>& b) {
    return {a[0] * b[1] - a[1] * b[0], a[0] * b[2] - a[2] * b[0], a[1] * b[2] - a[2] * b[1]};
}

template <class C>
auto point_dist(const std::array<C, 3>& a, const std::array<C, 3>& b) {
    using A = decltype(mag(std::declval<C>()));
    A w = max_norm(wedge3(a, b)), na = max_norm(a), nb = max_norm(b);
    return A(w / (na * nb));
}

// |x| > |y| decided on the exact values or on enclosures; ties keep the earlier index.
bool strictly_larger(const mpq_class& x, const mpq_class& y) { return x > y; }
bool strictly_larger(const RealBall& x, const RealBall& y) { return num::certainly_lt(y, x); }

struct Inputs {
    int D, T, L, M, k;
    long c2;
    RealBall c3_pow;  // c3^(T^(3/2))
    long prec;
};

template <class C>
void build(SeparationCertificate& cert, const Inputs& in, const std::array<C, 3>& alpha,
           const std::vector<std::array<C, 3>>& orbit, const std::vector<poly::HomogeneousPoly<C>>& Q) {
    using H = poly::HomogeneousPoly<C>;
    using A = decltype(mag(std::declval<C>()));
    const long prec = in.prec;
    auto add = [&](std::string name, const A& lhs, const A& rhs, bool ok) {
        cert.chain.push_back({std::move(name), to_ball(lhs, prec), to_ball(rhs, prec), ok});
    };
    auto add_ball = [&](std::string name, const RealBall& lhs, const RealBall& rhs, bool ok) {
        cert.chain.push_back({std::move(name), lhs, rhs, ok});
    };

    // X_k^L = sum_j gamma_j[k]^L Q_j, so at alpha (alpha_k = 1) the terms a_j Q_j(alpha) sum to 1.
    std::vector<A> w(in.M);
    std::vector<C> qa(in.M);
    std::vector<C> a(in.M);
    for (int j = 0; j < in.M; ++j) {
        a[j] = power(orbit[j][in.k], in.L);
        qa[j] = Q[j].eval(alpha);
        w[j] = mag(a[j] * qa[j]);
    }
    int i = 0;
    for (int j = 1; j < in.M; ++j)
        if (strictly_larger(w[j], w[i])) i = j;
    cert.i = i;
    cert.inside = i < in.T;

    const A one(1);
    const A M(in.M);
    const A gnorm = max_norm(orbit[i]);
    const A gnorm_L = power(gnorm, in.L);
    const A qi = mag(qa[i]);
    const A bigc = lift<A>(c2_power(in.c2, in.L), prec);  // (c2 L)^(3L)
    const A lq = Q[i].length();

    add("max |alpha_j| <= 1", max_norm(alpha), one, le(max_norm(alpha), one));
    add("1 <= M |a_i| |Q_i(alpha)|", one, M * w[i], le(one, M * w[i]));
    add("|a_i| <= ||gamma_i||^L", mag(a[i]), gnorm_L, le(mag(a[i]), gnorm_L));
    add("1 <= M ||gamma_i||^L |Q_i(alpha)|", one, M * gnorm_L * qi, le(one, M * gnorm_L * qi));
    add("L(Q_i) <= (c2 L)^(3L)", lq, bigc, le(lq, bigc));

    H P;
    if (cert.inside) {
        const C& y = orbit[i][1];
        const C& z = orbit[i][2];
        H x0 = H::variable(0), x1 = H::variable(1), x2 = H::variable(2);
        std::array<H, 3> E = {x1 - y * x0, x2 - z * x0, y * x2 - z * x1};
        int t = 0;
        std::array<A, 3> ev;
        for (int u = 0; u < 3; ++u) ev[u] = mag(E[u].eval(alpha));
        for (int u = 1; u < 3; ++u)
            if (strictly_larger(ev[u], ev[t])) t = u;
        cert.linear_form = t;
        H xk = H::monomial(C(1), in.k == 0 ? in.D - in.L - 1 : 0, in.k == 1 ? in.D - in.L - 1 : 0,
                           in.k == 2 ? in.D - in.L - 1 : 0);
        P = xk * E[t] * Q[i];

        const A d = point_dist(alpha, orbit[i]);
        const A le_ = E[t].length();
        const A lp = P.length();
        const A pa = mag(P.eval(alpha));
        const A two(2);
        add("|E(alpha)| = ||gamma_i|| dist(alpha, gamma_i)", ev[t], gnorm * d, same(ev[t], gnorm * d));
        add("L(E) <= 2 ||gamma_i||", le_, two * gnorm, le(le_, two * gnorm));
        add("L(P) <= L(E) L(Q_i)", lp, le_ * lq, le(lp, le_ * lq));
        add("L(P) <= 2 ||gamma_i|| (c2 L)^(3L)", lp, two * gnorm * bigc, le(lp, two * gnorm * bigc));
        add("|P(alpha)| = ||gamma_i|| dist(alpha, gamma_i) |Q_i(alpha)|", pa, gnorm * d * qi,
            same(pa, gnorm * d * qi));
        // |Q_i(alpha)| > 0 by the entries above, so the division is safe once they hold.
        if (le(one, M * gnorm_L * qi)) {
            const A vp = pa / lp;
            add("dist(alpha, gamma_i) <= 2 (c2 L)^(3L) |P(alpha)| / (L(P) |Q_i(alpha)|)", d, two * bigc * vp / qi,
                le(d, two * bigc * vp / qi));
            add("2 (c2 L)^(3L) / |Q_i(alpha)| <= 2 M ||gamma_i||^L (c2 L)^(3L)", two * bigc / qi,
                two * M * gnorm_L * bigc, le(two * bigc / qi, two * M * gnorm_L * bigc));
        }
    } else {
        H xk = H::monomial(C(1), in.k == 0 ? in.D - in.L : 0, in.k == 1 ? in.D - in.L : 0,
                           in.k == 2 ? in.D - in.L : 0);
        P = xk * Q[i];
        const A lp = P.length();
        const A pa = mag(P.eval(alpha));
        add("L(P) = L(Q_i) <= (c2 L)^(3L)", lp, bigc, same(lp, lq) && le(lp, bigc));
        if (le(one, M * gnorm_L * qi)) {
            const A vp = pa / lp;
            add("1 <= (c2 L)^(3L) |P(alpha)| / (L(P) |Q_i(alpha)|)", one, bigc * vp / qi, le(one, bigc * vp / qi));
            add("(c2 L)^(3L) / |Q_i(alpha)| <= M ||gamma_i||^L (c2 L)^(3L)", bigc / qi, M * gnorm_L * bigc,
                le(bigc / qi, M * gnorm_L * bigc));
        }
    }

    // Common tail.
    A vanish(0);
    for (int j = 0; j < in.T; ++j) vanish = biggest(vanish, mag(P.eval(orbit[j])));
    add("P vanishes on gamma_0..gamma_{T-1}", vanish, A(0),
        [&] {
            if constexpr (std::is_same_v<A, RealBall>)
                return vanish.contains_zero();
            else
                return sgn(vanish) == 0;
        }());

    A od = point_dist(alpha, orbit[0]);
    for (int j = 1; j < in.T; ++j) {
        A dj = point_dist(alpha, orbit[j]);
        if constexpr (std::is_same_v<A, RealBall>)
            od = num::min(od, dj);
        else
            od = std::min(od, dj);
    }
    const A pa = mag(P.eval(alpha));
    const A lp = P.length();
    const A np = P.norm();
    const A factor = A(2) * M * gnorm_L * bigc;
    add("dist(alpha, Gamma_T) <= 2 M ||gamma_i||^L (c2 L)^(3L) |P(alpha)| / L(P)", od, factor * pa / lp,
        le(od, factor * pa / lp));
    add("|P(alpha)| / L(P) <= |P(alpha)| / ||P||", pa / lp, pa / np, le(pa / lp, pa / np));
    RealBall fb = to_ball(factor, prec);
    add_ball("2 M ||gamma_i||^L (c2 L)^(3L) <= c3^(T^(3/2))", fb, in.c3_pow, num::certainly_le(fb, in.c3_pow));
    RealBall v = to_ball(pa / np, prec);
    RealBall odb = to_ball(od, prec);
    add_ball("dist(alpha, Gamma_T) <= c3^(T^(3/2)) |P(alpha)| / ||P||", odb, in.c3_pow * v,
             num::certainly_le(odb, in.c3_pow * v));

    cert.value = v;
    cert.orbit_dist = odb;
    if constexpr (std::is_same_v<A, RealBall>) {
        cert.trivial = od.is_exact() && od.mid().is_zero();
        cert.ball_poly = P;
    } else {
        cert.trivial = sgn(od) == 0;
        cert.exact_poly = P;
        cert.ball_poly = poly::to_ball_form(P, prec);
    }
}

}  // namespace

InterpolationConstants derive_constants(const TranslationParams& params, long prec) {
    if (abs(params.s) <= 1) throw PreconditionFailed("constants need |s| > 1");
    InterpolationConstants out;
    out.change = change_constant(params, prec);
    out.c2 = derive_c2(params, 12, prec);

    // max_{i >= 0} i x^i with x = 1/|s| is attained at floor(x/(1-x)) or the next integer.
    mpq_class x = 1 / abs(params.s);
    mpq_class peak = x / (1 - x);
    mpz_class t = peak.get_num() / peak.get_den();
    mpq_class best = 0;
    for (mpz_class i = t; i <= t + 1; ++i)
        best = std::max(best, mpq_class(i * poly::rational_pow(x, i.get_si())));
    RealBall xi = params.xi_ball(prec).abs();
    RealBall eta = params.eta_ball(prec).abs();
    out.c_gamma = num::max(num::max(RealBall(1), xi + RealBall::from_mpq(abs(params.r) * best, prec)), eta);

    // The bound 4T c_gamma^L |s|^(L (2T-1)) (c2 L)^(3L) with L <= sqrt(2T), divided by T^(3/2) in
    // the exponent, decreases in T, so its value at T = 1 fixes c3.  Rounded up to an integer.
    RealBall r2 = num::sqrt(RealBall(2));
    RealBall lc = num::log(RealBall(4)) + r2 * num::log(out.c_gamma) +
                  RealBall(2) * r2 * num::log(RealBall::from_mpq(abs(params.s), prec)) +
                  RealBall(3) * r2 * num::log(RealBall(out.c2) * r2);
    RealBall c3 = num::exp(lc);
    mpfr_t up;
    mpfr_init2(up, c3.upper().precision());
    mpfr_ceil(up, c3.upper().get());
    mpz_class ci;
    mpfr_get_z(ci.get_mpz_t(), up, MPFR_RNDU);
    mpfr_clear(up);
    out.c3 = RealBall::from_mpz(ci, prec);
    return out;
}

bool SeparationCertificate::verified() const {
    if (chain.empty()) return false;
    for (const auto& e : chain)
        if (!e.ok) return false;
    return true;
}

SeparationCertificate separation_certificate(const ProjectivePoint& alpha, int D, int T,
                                             const TranslationParams& params, const InterpolationConstants& consts,
                                             long prec) {
    if (D < 1) throw PreconditionFailed("degree must be positive");
    if (T < 1 || T > monomial_count(D - 1)) throw PreconditionFailed("need 1 <= T <= C(D+1, 2)");
    Inputs in;
    in.D = D;
    in.T = T;
    in.L = 0;
    while (monomial_count(in.L) < T) ++in.L;
    in.M = monomial_count(in.L);
    in.c2 = consts.c2;
    in.prec = prec;
    RealBall tt(T);
    in.c3_pow = num::exp(tt * num::sqrt(tt) * num::log(consts.c3));

    SeparationCertificate cert;
    cert.L = in.L;
    cert.M = in.M;

    // Larger L goes through the falling-factorial route, which avoids the dense exact inverse.
    DualBasis basis = in.L <= 5 ? dual_basis(in.L, params, prec) : dual_basis_falling(in.L, params, prec);

    if (alpha.is_exact() && params.rational()) {
        ProjectivePoint n = alpha.normalized(prec);
        in.k = n.unit_index(prec);
        proj::ExactTriple z = n.exact_coords();
        mpq_class zk = z[in.k];
        for (auto& c : z) c /= zk;  // alpha_k = 1 exactly
        cert.k = in.k;
        cert.exact = true;
        build<mpq_class>(cert, in, z, exact_orbit(params, in.M), basis.exact_polys);
        return cert;
    }

    // Enclosure path: the chosen coordinate is divided out so that it is exactly 1; the
    // "max |alpha_j| <= 1" entry records whether that choice is certified to be maximal.
    ProjectivePoint n = alpha.normalized(prec);
    in.k = n.unit_index(prec);
    proj::BallTriple z = n.balls(prec);
    ComplexBall zk = z[in.k];
    if (zk.contains_zero()) throw PrecisionExhausted("cannot normalize alpha");
    for (int j = 0; j < 3; ++j) z[j] = j == in.k ? ComplexBall(1) : z[j] / zk;
    cert.k = in.k;
    build<ComplexBall>(cert, in, z, ball_orbit(params, in.M, prec), basis.ball_polys);
    return cert;
}

}  // namespace svt::interp
