#include "svt/construction/construction.hpp"

#include "svt/numerics/linalg.hpp"
#include "svt/polyring/transforms.hpp"

#include <cmath>

namespace svt::cons {

namespace {

using num::ComplexBall;
using poly::monomial_count;

struct PointSet {
    bool exact = false;
    std::vector<std::pair<mpq_class, mpq_class>> q;
    std::vector<std::pair<ComplexBall, ComplexBall>> b;
};

PointSet orbit_points(const TranslationParams& params, long count, long prec) {
    PointSet ps;
    ps.exact = params.rational();
    mpq_class spow = 1;
    for (long i = 0; i < count; ++i) {
        if (ps.exact) {
            ps.q.push_back({params.xi_q() + mpq_class(i) * params.r, params.eta_q() * spow});
        } else {
            ps.b.push_back({params.xi_ball(prec) + ComplexBall::from_mpq(mpq_class(i) * params.r, prec),
                            params.eta_ball(prec) * ComplexBall::from_mpq(spow, prec)});
        }
        spow *= params.s;
    }
    return ps;
}

// x^a y^b for every monomial of degree <= D, in monomial_index order.
template <class T, class Lift>
std::vector<T> monomial_values(int D, const T& x, const T& y, Lift lift) {
    std::vector<T> xp{lift(1)}, yp{lift(1)};
    for (int e = 1; e <= D; ++e) {
        xp.push_back(xp.back() * x);
        yp.push_back(yp.back() * y);
    }
    std::vector<T> out(monomial_count(D), lift(0));
    for (int idx = 0; idx < monomial_count(D); ++idx) {
        poly::Exponent e = poly::monomial_at(D, idx);
        out[idx] = xp[e.e1] * yp[e.e2];
    }
    return out;
}

mpq_class eval_exact(const BiPoly& p, const mpq_class& x, const mpq_class& y) {
    mpq_class acc = 0;
    for (int j = p.degree(); j >= 0; --j) acc = acc * y + p.coeff(j).eval<mpq_class>(x);
    return acc;
}

ComplexBall eval_ball(const BiPoly& p, const ComplexBall& x, const ComplexBall& y, long prec) {
    ComplexBall acc(0);
    for (int j = p.degree(); j >= 0; --j) {
        const QPoly& c = p.coeff(j);
        ComplexBall cj(0);
        for (int e = c.degree(); e >= 0; --e) cj = cj * x + ComplexBall::from_mpq(c.coeff(e), prec);
        acc = acc * y + cj;
    }
    return acc;
}

RealBall power_of(long D, const mpq_class& e, long prec) {
    return num::pow(RealBall::from_mpz(mpz_class(D), prec), RealBall::from_mpq(e, prec));
}

long bits_of(const mpz_class& z) { return z == 0 ? 0 : static_cast<long>(mpz_sizeinbase(z.get_mpz_t(), 2)); }

BiPoly poly_from_vector(const std::vector<mpz_class>& v, int D) {
    BiPoly p;
    for (int idx = 0; idx < monomial_count(D); ++idx) {
        if (v[idx] == 0) continue;
        poly::Exponent e = poly::monomial_at(D, idx);
        p = p + poly::bi_monomial(mpq_class(v[idx]), e.e1, e.e2);
    }
    return p;
}

// Bits of the largest coordinate among the points, for precision planning.
long coordinate_bits(const TranslationParams& params, long count) {
    double x = std::fabs(params.xi_ball(64).abs().to_double()) + std::fabs(params.r.get_d()) * count;
    double y = params.eta_ball(64).abs().to_double() * std::pow(std::fabs(params.s.get_d()), count);
    double m = std::max({x, y, 1.0});
    return static_cast<long>(std::ceil(std::log2(m))) + 1;
}

long cert_precision(const BiPoly& p, int D, const mpq_class& nu, const TranslationParams& params, long count,
                    long prec) {
    mpz_class norm = 0;
    for (const auto& c : p.coeffs())
        for (const auto& a : c.coeffs()) norm += abs(a.get_num());
    double dnu = std::pow(static_cast<double>(D), nu.get_d()) / std::log(2.0);
    return prec + bits_of(norm) + D * coordinate_bits(params, count) + static_cast<long>(dnu) + 64;
}

}  // namespace

AuxCertificate certify_aux(const BiPoly& p, int D, const mpq_class& sigma, const mpq_class& beta,
                           const mpq_class& nu, const TranslationParams& params, long prec) {
    AuxCertificate c;
    const long count = 4 * poly::floor_power(D, sigma);
    c.degree_ok = !p.is_zero() && poly::total_degree(p) <= D;

    mpq_class norm = 0;
    for (const auto& q : p.coeffs())
        for (const auto& a : q.coeffs()) norm = std::max(norm, mpq_class(abs(a)));
    RealBall dbeta = power_of(D, beta, prec), dnu = power_of(D, nu, prec);
    bool norm_decided = true;
    if (sgn(norm) == 0) {
        c.norm_ok = true;
        c.log_norm = RealBall(0);
        c.norm_margin = dbeta;
    } else {
        c.log_norm = num::log(RealBall::from_mpq(norm, prec));
        c.norm_margin = dbeta - c.log_norm;
        c.norm_ok = num::certainly_le(c.log_norm, dbeta);
        norm_decided = c.norm_ok || num::certainly_lt(dbeta, c.log_norm);
    }

    bool value_decided = true;
    PointSet pts = orbit_points(params, count, prec);
    if (pts.exact) {
        mpq_class best = 0;
        for (const auto& [x, y] : pts.q) best = std::max(best, mpq_class(abs(eval_exact(p, x, y))));
        c.exact_zero = sgn(best) == 0;
        if (c.exact_zero) {
            c.value_ok = true;
            c.log_value = RealBall(0);
            c.value_margin = -dnu;
        } else {
            c.log_value = num::log(RealBall::from_mpq(best, prec));
            c.value_margin = -dnu - c.log_value;
            c.value_ok = num::certainly_le(c.log_value, -dnu);
            value_decided = c.value_ok || num::certainly_lt(-dnu, c.log_value);
        }
    } else {
        RealBall best(0);
        for (const auto& [x, y] : pts.b) best = num::max(best, eval_ball(p, x, y, prec).abs());
        RealBall target = num::exp(-dnu);
        c.value_ok = num::certainly_le(best, target);
        value_decided = c.value_ok || num::certainly_lt(target, best);
        num::LogValue lv = num::log_or_neg_inf(best);
        if (!lv.minus_infinity) {
            c.log_value = lv.value;
            c.value_margin = -dnu - lv.value;
        }
    }
    c.decided = norm_decided && value_decided;
    return c;
}

AuxSearchResult dirichlet_search(int D, const mpq_class& sigma, const mpq_class& beta, const mpq_class& nu,
                                 const TranslationParams& params, long prec) {
    if (D < 1) throw PreconditionFailed("D must be positive");
    if (sgn(sigma) <= 0) throw PreconditionFailed("sigma must be positive");
    AuxSearchResult out;
    out.D = D;
    out.region = parameter_region(sigma, beta, nu).classification;
    if (out.region != Region::dirichlet) out.note = "parameters outside the dirichlet region; ";
    out.points = 4 * poly::floor_power(D, sigma);
    out.monomials = monomial_count(D);
    const int n = out.monomials;
    const long N = out.points;

    bool any_undecided = false;
    // Certifies the candidates in order; the first success is re-checked at doubled precision.
    auto try_candidates = [&](const std::vector<std::vector<mpz_class>>& rows) {
        for (const auto& row : rows) {
            BiPoly p = poly_from_vector(row, D);
            if (p.is_zero()) continue;
            long cp = cert_precision(p, D, nu, params, N, prec);
            AuxCertificate c = certify_aux(p, D, sigma, beta, nu, params, cp);
            if (!c.decided) any_undecided = true;
            if (!c.ok()) continue;
            AuxCertificate again = certify_aux(p, D, sigma, beta, nu, params, 2 * cp);
            if (!again.ok()) {
                any_undecided = true;
                continue;
            }
            out.status = SearchStatus::found;
            out.poly = p;
            out.certificate = again;
            return true;
        }
        return false;
    };

    if (params.rational()) {
        PointSet pts = orbit_points(params, N, prec);
        num::Matrix<mpq_class> a;
        for (const auto& [x, y] : pts.q)
            a.push_back(monomial_values<mpq_class>(D, x, y, [](long v) { return mpq_class(v); }));
        auto kernel = num::kernel_basis(a, n);
        out.kernel_dim = static_cast<int>(kernel.size());
        if (!kernel.empty()) {
            std::vector<std::vector<mpz_class>> rows;
            for (const auto& v : kernel) {
                mpz_class l = 1, g = 0;
                for (const auto& c : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
                std::vector<mpz_class> z;
                for (const auto& c : v) {
                    mpq_class t = c * l;
                    z.push_back(t.get_num());
                    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.back().get_mpz_t());
                }
                for (auto& e : z) e /= g;
                rows.push_back(z);
            }
            if (!lll_reduce(rows)) out.note += "kernel reduction hit its iteration budget; ";
            if (try_candidates(rows)) {
                out.note += "exact kernel";
                return out;
            }
        }
    }

    // Lattice of (coefficients | S * values) with S = ceil(e^(D^nu)).
    double dnu_bits = std::pow(static_cast<double>(D), nu.get_d()) / std::log(2.0);
    if (dnu_bits > 200000) {
        out.status = SearchStatus::unresolved;
        out.note += "scaling factor e^(D^nu) beyond the precision budget";
        return out;
    }
    const long sp = prec + static_cast<long>(dnu_bits) + 64;
    RealBall sball = num::exp(power_of(D, nu, sp));
    mpz_class S;
    mpfr_get_z(S.get_mpz_t(), sball.upper().get(), MPFR_RNDU);

    const long wp = prec + bits_of(S) + D * coordinate_bits(params, N) + 64;
    bool real = poly::scalar_is_real(params.xi, wp) && poly::scalar_is_real(params.eta, wp);
    std::vector<std::vector<mpz_class>> basis(n);
    for (int j = 0; j < n; ++j) {
        basis[j].assign(n, 0);
        basis[j][j] = 1;
    }
    PointSet pts = orbit_points(params, N, wp);
    RealBall sb = RealBall::from_mpz(S, wp);
    auto to_int = [](const RealBall& v) {
        mpz_class z;
        mpfr_get_z(z.get_mpz_t(), v.mid().get(), MPFR_RNDN);
        return z;
    };
    for (long i = 0; i < N; ++i) {
        if (pts.exact) {
            auto vals = monomial_values<mpq_class>(D, pts.q[i].first, pts.q[i].second,
                                                   [](long v) { return mpq_class(v); });
            for (int j = 0; j < n; ++j) {
                mpq_class t = vals[j] * S;
                mpz_class z;
                mpz_fdiv_q(z.get_mpz_t(), t.get_num_mpz_t(), t.get_den_mpz_t());
                if (mpq_class(t - z) >= mpq_class(1, 2)) z += 1;
                basis[j].push_back(z);
            }
        } else {
            auto vals = monomial_values<ComplexBall>(D, pts.b[i].first, pts.b[i].second,
                                                     [](long v) { return ComplexBall(v); });
            for (int j = 0; j < n; ++j) basis[j].push_back(to_int(sb * vals[j].real()));
            if (!real)
                for (int j = 0; j < n; ++j) basis[j].push_back(to_int(sb * vals[j].imag()));
        }
    }
    if (!lll_reduce(basis)) out.note += "lattice reduction hit its iteration budget; ";
    if (try_candidates(basis)) {
        out.note += "lattice";
        return out;
    }
    out.status = any_undecided ? SearchStatus::unresolved : SearchStatus::infeasible;
    out.note += any_undecided ? "some candidates stayed undecided" : "no reduced vector meets the bounds";
    return out;
}

}  // namespace svt::cons
