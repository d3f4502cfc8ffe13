#include "svt/varieties/variety.hpp"

#include "svt/numerics/algebraic.hpp"
#include "svt/polyring/bivariate.hpp"
#include "svt/polyring/transforms.hpp"

namespace svt::var {

using poly::Exponent;
using poly::monomial_at;
using poly::monomial_count;
using poly::monomial_index;

namespace {

// Power sums of the roots of a monic polynomial: s_j = sum theta_i^j for j < n.
std::vector<mpq_class> root_power_sums(const num::QPoly& f) {
    const int n = f.degree();
    std::vector<mpq_class> s(std::max(n, 1));
    s[0] = n;
    for (int j = 1; j < n; ++j) {
        mpq_class acc = mpq_class(j) * f.coeff(n - j);
        for (int i = 1; i < j; ++i) acc += f.coeff(n - i) * s[j - i];
        s[j] = -acc;
    }
    return s;
}

mpq_class trace(const NfElem& a, const std::vector<mpq_class>& s) {
    mpq_class t = 0;
    const auto& c = a.poly().coeffs();
    for (size_t j = 0; j < c.size(); ++j) t += c[j] * s[j];
    return t;
}

mpz_class multinomial(int m, const Exponent& e) {
    mpz_class r, b;
    mpz_bin_uiui(r.get_mpz_t(), m, e.e0);
    mpz_bin_uiui(b.get_mpz_t(), m - e.e0, e.e1);
    return r * b;
}

// Whether the conjugates sigma_i(alpha) are pairwise distinct, i.e. the two free coordinates
// generate the field.
bool conjugates_distinct(const num::FieldPtr& field, const std::array<NfElem, 3>& c, int k) {
    const int n = field->degree();
    if (n == 1) return true;
    const NfElem& b = c[(k + 1) % 3];
    const NfElem& g = c[(k + 2) % 3];
    // At most C(n, 2) values of t make b + t g a non-primitive element of Q(b, g).
    for (long t = 0; t <= (long)n * (n - 1) / 2; ++t) {
        NfElem e = b + NfElem(t) * g;
        if (e.is_rational()) continue;
        if (num::minimal_polynomial(NfElem(field, e.poly())).degree() == n) return true;
    }
    return false;
}

RealBall log_mpq(const mpq_class& q, long prec) { return num::log(RealBall::from_mpq(q, prec)); }

}  // namespace

QForm primitive_form(const QForm& f) {
    if (f.is_zero()) return f;
    mpz_class den = 1, num = 0;
    for (const auto& c : f.coeffs()) {
        if (sgn(c) == 0) continue;
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    }
    for (const auto& c : f.coeffs()) {
        mpz_class v = c.get_num() * (den / c.get_den());
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), v.get_mpz_t());
    }
    mpq_class scale(den, num);
    scale.canonicalize();
    QForm out = scale * f;
    for (const auto& c : out.coeffs())
        if (sgn(c) != 0) return sgn(c) < 0 ? -out : out;
    return out;
}

QForm norm_form(const num::FieldPtr& field, const std::array<NfElem, 3>& coords) {
    const int n = field->degree();
    std::vector<mpq_class> s = root_power_sums(field->modulus);
    std::array<NfElem, 3> a;
    for (int j = 0; j < 3; ++j) a[j] = NfElem(field, coords[j].poly());

    // p_m(u) = Tr((u0 a0 + u1 a1 + u2 a2)^m), from the traces of all monomials in a of degree m.
    std::vector<QForm> p(n + 1);
    std::vector<NfElem> level{NfElem(field, num::QPoly(mpq_class(1)))};
    for (int m = 1; m <= n; ++m) {
        std::vector<NfElem> next(monomial_count(m));
        QForm pm(m);
        for (int idx = 0; idx < monomial_count(m); ++idx) {
            Exponent e = monomial_at(m, idx);
            if (e.e0 > 0)
                next[idx] = a[0] * level[monomial_index(e.e1, e.e2)];
            else if (e.e1 > 0)
                next[idx] = a[1] * level[monomial_index(e.e1 - 1, e.e2)];
            else
                next[idx] = a[2] * level[monomial_index(e.e1, e.e2 - 1)];
            pm.set_at(idx, mpq_class(multinomial(m, e)) * trace(next[idx], s));
        }
        p[m] = pm;
        level = std::move(next);
    }
    // Newton: m e_m = sum_{j=1}^m (-1)^(j-1) e_{m-j} p_j; e_n is the product of the n linear forms.
    std::vector<QForm> e(n + 1);
    e[0] = QForm::constant(1);
    for (int m = 1; m <= n; ++m) {
        QForm acc(m);
        for (int j = 1; j <= m; ++j) {
            QForm t = e[m - j] * p[j];
            acc = (j % 2 == 1) ? acc + t : acc - t;
        }
        e[m] = mpq_class(1, m) * acc;
    }
    return e[n];
}

std::vector<proj::BallTriple> ZeroDimVariety::conjugate_points(long prec) const {
    std::vector<proj::BallTriple> out;
    for (const auto& theta : num::conjugate_embeddings(field->minpoly, prec))
        out.push_back({coords[0].embed(theta), coords[1].embed(theta), coords[2].embed(theta)});
    return out;
}

ZeroDimVariety variety_from_elements(const num::FieldPtr& field, const std::array<NfElem, 3>& coords, long prec) {
    int k = -1;
    for (int j = 0; j < 3 && k < 0; ++j)
        if (!num::is_zero(coords[j])) k = j;
    if (k < 0) throw PreconditionFailed("all coordinates are zero");
    ZeroDimVariety z;
    z.field = field;
    z.k = k;
    z.degree = field->degree();
    for (int j = 0; j < 3; ++j) z.coords[j] = NfElem(field, (coords[j] / coords[k]).poly());
    if (!conjugates_distinct(field, z.coords, k)) throw MalformedInput("conjugate points coincide");

    QForm f = norm_form(field, z.coords);
    z.chow = primitive_form(f);
    const int n = z.degree;
    int kidx = k == 0 ? monomial_index(0, 0) : k == 1 ? monomial_index(n, 0) : monomial_index(0, n);
    z.content = abs(z.chow.at(kidx).get_num());
    z.height = log_mpq(z.chow.norm(), prec);
    z.weil = weil_height(z, prec).h_abs;
    return z;
}

ZeroDimVariety variety_from_point(const num::ZPoly& minpoly, const std::array<num::QPoly, 3>& coords, long prec) {
    num::FieldPtr field = num::make_field(minpoly);
    std::array<NfElem, 3> c;
    for (int j = 0; j < 3; ++j) c[j] = NfElem(field, coords[j]);
    return variety_from_elements(field, c, prec);
}

ZeroDimVariety variety_from_rational(const proj::ExactTriple& z, long prec) {
    num::FieldPtr field = num::make_field(num::ZPoly(std::vector<mpz_class>{0, 1}));
    return variety_from_elements(field, {NfElem(z[0]), NfElem(z[1]), NfElem(z[2])}, prec);
}

bool same_variety(const ZeroDimVariety& a, const ZeroDimVariety& b) { return a.chow == b.chow; }

WeilReport weil_height(const ZeroDimVariety& z, long prec) {
    WeilReport r;
    RealBall sum = num::log(RealBall::from_mpz(z.content, prec));
    for (const auto& pt : z.conjugate_points(prec))
        sum = sum + num::log(num::max(num::max(pt[0].abs(), pt[1].abs()), pt[2].abs()));
    RealBall n(z.degree);
    r.h_abs = sum / n;
    r.gap = num::abs(z.height / n - r.h_abs);
    r.height_gap_ok = num::certainly_le(r.gap, RealBall(3));
    return r;
}

TranslateReport translate_variety(const ZeroDimVariety& z, long i, const poly::TranslationParams& params,
                                  long prec) {
    proj::ConstantsTable ct = proj::translation_constants(params, prec);
    const auto& c = z.coords;
    std::array<NfElem, 3> img = {c[0], c[1] + NfElem(mpq_class(i) * params.r) * c[0],
                                 NfElem(poly::rational_pow(params.s, i)) * c[2]};
    TranslateReport r;
    r.image = variety_from_elements(z.field, img, prec);
    r.same_degree = r.image.degree == z.degree;
    // Heights are logs of exact norms, so the difference is the log of an exact ratio.
    mpq_class ratio = r.image.chow.norm() / z.chow.norm();
    if (ratio < 1) ratio = 1 / ratio;
    r.lhs = ratio == 1 ? RealBall(0) : log_mpq(ratio, prec);
    r.rhs = ct.c4 * RealBall(std::abs(i)) * RealBall(z.degree);
    r.height_change_ok = r.same_degree && num::certainly_le(r.lhs, r.rhs);
    return r;
}

SeparationBound separation_lower_bound(const ZeroDimVariety& z, const ZeroDimVariety& zs,
                                       const std::vector<std::pair<int, int>>& pairs, long prec) {
    if (same_variety(z, zs)) throw PreconditionFailed("the two varieties coincide");
    SeparationBound out;
    RealBall d(z.degree), ds(zs.degree);
    out.bound = -(RealBall(7) * d * ds) - d * zs.height - ds * z.height;
    for (long p = prec;; p *= 2) {
        auto a = z.conjugate_points(p);
        auto b = zs.conjugate_points(p);
        RealBall sum;
        bool ok = true;
        for (auto [i, j] : pairs) {
            if (i < 0 || i >= (int)a.size() || j < 0 || j >= (int)b.size())
                throw PreconditionFailed("pair index out of range");
            RealBall dist = proj::dist(proj::ProjectivePoint::from_balls(a[i]), proj::ProjectivePoint::from_balls(b[j]), p);
            if (!dist.certainly_positive()) {
                ok = false;
                break;
            }
            sum = sum + num::log(dist);
        }
        if (ok) {
            out.sum = sum;
            out.verified = num::certainly_le(out.bound, sum);
            return out;
        }
        if (p >= 4096) throw PrecisionExhausted("distance not separated from zero");
    }
}

QForm substitute_linear(const QForm& p, const std::array<QForm, 3>& lin) {
    const int d = p.degree();
    std::array<std::vector<QForm>, 3> pw;
    for (int k = 0; k < 3; ++k) {
        pw[k].push_back(QForm::constant(1));
        for (int e = 1; e <= d; ++e) pw[k].push_back(pw[k].back() * lin[k]);
    }
    QForm out(d);
    for (int idx = 0; idx < p.size(); ++idx) {
        if (sgn(p.at(idx)) == 0) continue;
        Exponent e = monomial_at(d, idx);
        out = out + p.at(idx) * (pw[0][e.e0] * pw[1][e.e1] * pw[2][e.e2]);
    }
    return out;
}

namespace {

using NfPoly = num::Poly<NfElem>;

NfPoly specialize(const poly::BiPoly& p, const num::FieldPtr& field) {
    NfElem theta = NfElem::generator(field);
    std::vector<NfElem> c;
    for (const auto& q : p.coeffs()) c.push_back(q.eval<NfElem>(theta));
    return NfPoly(c);
}

NfPoly squarefree(const NfPoly& g) {
    if (g.degree() < 1) return g;
    NfPoly h = num::gcd(g, g.derivative());
    return num::divmod(g, h).first;
}

// Affine common zeros with X1 sheared by t; nullopt when the projection is not injective.
std::optional<std::vector<ZeroDimVariety>> affine_pass(const QForm& p, const QForm& q, long t, long prec) {
    QForm x0 = QForm::variable(0), x1 = QForm::variable(1), x2 = QForm::variable(2);
    std::array<QForm, 3> lin = {x0, x1 + mpq_class(t) * x2, x2};
    poly::BiPoly a = poly::dehomogenize(substitute_linear(p, lin));
    poly::BiPoly b = poly::dehomogenize(substitute_linear(q, lin));
    num::QPoly res = num::resultant(a, b);
    if (res.is_zero()) throw PreconditionFailed("forms share a common factor");
    std::vector<ZeroDimVariety> out;
    if (res.degree() < 1) return out;
    for (const auto& [g, mult] : num::factor(num::to_primitive_z(res))) {
        (void)mult;
        if (g.degree() < 1) continue;
        num::FieldPtr field = num::make_field(g);
        NfPoly common = squarefree(num::gcd(specialize(a, field), specialize(b, field)));
        if (common.degree() < 1) continue;
        if (common.degree() > 1) return std::nullopt;
        NfElem y = -(common.coeff(0) / common.coeff(1));
        NfElem x = NfElem::generator(field) - NfElem(t) * y;
        out.push_back(variety_from_elements(field, {NfElem(field, num::QPoly(mpq_class(1))), x, y}, prec));
    }
    return out;
}

}  // namespace

SolveReport zero_dim_solve(const QForm& p, const QForm& q, long slack, long prec) {
    if (p.degree() != q.degree()) throw PreconditionFailed("forms must have the same degree");
    if (p.is_zero() || q.is_zero()) throw PreconditionFailed("zero form");
    const int D = p.degree();
    if (D < 1) throw PreconditionFailed("forms must have positive degree");
    if (poly::form_gcd(p, q).degree() > 0) throw PreconditionFailed("forms share a common factor");

    SolveReport r;
    r.slack = slack;
    std::optional<std::vector<ZeroDimVariety>> aff;
    for (long t = 0; t <= 4L * D * D && !aff; ++t) aff = affine_pass(p, q, t, prec);
    if (!aff) throw Error("no injective projection found");
    r.varieties = std::move(*aff);

    // The line X0 = 0: points (0 : 1 : t) from a gcd of binary forms, then (0 : 0 : 1).
    num::QPoly a, b;
    {
        std::vector<mpq_class> ca(D + 1), cb(D + 1);
        for (int e2 = 0; e2 <= D; ++e2) {
            ca[e2] = p.coeff(D - e2, e2);
            cb[e2] = q.coeff(D - e2, e2);
        }
        a = num::QPoly(ca);
        b = num::QPoly(cb);
    }
    num::QPoly g = num::gcd(a, b);
    if (g.degree() >= 1)
        for (const auto& [f, mult] : num::factor(num::to_primitive_z(g))) {
            (void)mult;
            if (f.degree() < 1) continue;
            num::FieldPtr field = num::make_field(f);
            r.varieties.push_back(variety_from_elements(field, {NfElem(0), NfElem(1), NfElem::generator(field)}, prec));
        }
    if (sgn(p.coeff(0, D)) == 0 && sgn(q.coeff(0, D)) == 0) r.varieties.push_back(variety_from_rational({0, 0, 1}, prec));

    for (const auto& v : r.varieties) {
        r.total_degree += v.degree;
        r.total_height = r.total_height + v.height;
    }
    RealBall dd(D);
    r.height_bound = dd * log_mpq(primitive_form(p).norm(), prec) + dd * log_mpq(primitive_form(q).norm(), prec) +
                     RealBall(slack) * dd * dd;
    r.degree_ok = r.total_degree <= D * D;
    r.height_ok = num::certainly_le(r.total_height, r.height_bound);
    return r;
}

}  // namespace svt::var
