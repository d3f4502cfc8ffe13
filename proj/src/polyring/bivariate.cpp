#include "svt/polyring/bivariate.hpp"

namespace svt::poly {

BiPoly bi_monomial(const mpq_class& c, int e1, int e2) {
    return BiPoly::monomial(QPoly::monomial(c, e1), e2);
}

const mpq_class bi_coeff(const BiPoly& p, int e1, int e2) { return p.coeff(e2).coeff(e1); }

int total_degree(const BiPoly& p) {
    int d = -1;
    for (int j = 0; j <= p.degree(); ++j) {
        const QPoly& c = p.coeffs()[j];
        if (!c.is_zero()) d = std::max(d, j + c.degree());
    }
    return d;
}

int x2_valuation(const BiPoly& p) {
    for (int j = 0; j <= p.degree(); ++j)
        if (!p.coeffs()[j].is_zero()) return j;
    return -1;
}

int x1_valuation(const BiPoly& p) {
    int v = -1;
    for (const auto& c : p.coeffs()) {
        for (int i = 0; i <= c.degree(); ++i) {
            if (sgn(c.coeffs()[i]) == 0) continue;
            if (v < 0 || i < v) v = i;
            break;
        }
    }
    return v;
}

bool has_integer_coeffs(const BiPoly& p) {
    for (const auto& c : p.coeffs())
        for (const auto& a : c.coeffs())
            if (a.get_den() != 1) return false;
    return true;
}

BiPoly bi_scale(const mpq_class& c, const BiPoly& p) {
    std::vector<QPoly> v;
    for (const auto& a : p.coeffs()) v.push_back(c * a);
    return BiPoly(std::move(v));
}

BiPoly dehomogenize(const QForm& p) {
    std::vector<QPoly> rows(p.degree() + 1);
    for (int idx = 0; idx < p.size(); ++idx) {
        if (sgn(p.at(idx)) == 0) continue;
        Exponent e = monomial_at(p.degree(), idx);
        QPoly& row = rows[e.e2];
        row.set_coeff(e.e1, row.coeff(e.e1) + p.at(idx));
    }
    return BiPoly(std::move(rows));
}

QForm homogenize(const BiPoly& p, int d) {
    if (total_degree(p) > d) throw PreconditionFailed("homogenizing below the total degree");
    QForm out(d);
    for (int j = 0; j <= p.degree(); ++j) {
        const QPoly& c = p.coeffs()[j];
        for (int i = 0; i <= c.degree(); ++i)
            if (sgn(c.coeffs()[i]) != 0) out.set(i, j, c.coeffs()[i]);
    }
    return out;
}

QPoly bi_content(const BiPoly& p) {
    QPoly g;
    for (const auto& c : p.coeffs()) {
        g = num::gcd(g, c);
        if (g.degree() == 0) break;
    }
    return g;
}

BiPoly bi_primitive(const BiPoly& p) {
    if (p.is_zero()) return p;
    QPoly c = bi_content(p);
    std::vector<QPoly> v;
    for (const auto& a : p.coeffs()) v.push_back(num::divmod(a, c).first);
    return BiPoly(std::move(v));
}

BiPoly bi_normalize(const BiPoly& p) {
    if (p.is_zero()) return p;
    return bi_scale(mpq_class(1) / p.lead().lead(), p);
}

BiPoly bi_gcd(const BiPoly& a, const BiPoly& b) {
    if (a.is_zero()) return bi_normalize(b);
    if (b.is_zero()) return bi_normalize(a);
    QPoly c = num::gcd(bi_content(a), bi_content(b));
    BiPoly x = bi_primitive(a), y = bi_primitive(b);
    if (x.degree() < y.degree()) std::swap(x, y);
    while (!y.is_zero() && y.degree() > 0) {
        BiPoly r = num::pseudo_rem(x, y);
        x = std::move(y);
        y = bi_primitive(r);
    }
    // y is either zero (x is the gcd) or a nonzero constant in X2 (primitive gcd is 1).
    BiPoly g = y.is_zero() ? bi_primitive(x) : BiPoly(QPoly(mpq_class(1)));
    std::vector<QPoly> v;
    for (const auto& t : g.coeffs()) v.push_back(c * t);
    return bi_normalize(BiPoly(std::move(v)));
}

QForm form_gcd(const QForm& a, const QForm& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    int v0 = std::min(a.x0_valuation(), b.x0_valuation());
    BiPoly g = bi_gcd(dehomogenize(a), dehomogenize(b));
    int dg = total_degree(g);
    QForm hg = homogenize(g, dg);
    if (v0 > 0) hg = QForm::monomial(mpq_class(1), v0, 0, 0) * hg;
    return hg;
}

QForm form_div(const QForm& a, const QForm& b) {
    if (b.is_zero()) throw PreconditionFailed("division by the zero form");
    if (b.degree() > a.degree()) throw PreconditionFailed("form does not divide");
    // Dense triangular solve over monomials in graded-lex order.
    int dq = a.degree() - b.degree();
    QForm q(dq), rem = a;
    int lead_b = -1;
    for (int idx = 0; idx < b.size(); ++idx)
        if (sgn(b.at(idx)) != 0) {
            lead_b = idx;
            break;
        }
    Exponent eb = monomial_at(b.degree(), lead_b);
    for (int idx = 0; idx < rem.size(); ++idx) {
        if (sgn(rem.at(idx)) == 0) continue;
        Exponent e = monomial_at(rem.degree(), idx);
        int e0 = e.e0 - eb.e0, e1 = e.e1 - eb.e1, e2 = e.e2 - eb.e2;
        if (e0 < 0 || e1 < 0 || e2 < 0) throw PreconditionFailed("form does not divide");
        mpq_class f = rem.at(idx) / b.at(lead_b);
        QForm t = QForm::monomial(f, e0, e1, e2);
        q = q + t;
        rem = rem - t * b;
    }
    if (!rem.is_zero()) throw PreconditionFailed("form does not divide");
    return q;
}

}  // namespace svt::poly
