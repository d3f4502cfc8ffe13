#include "svt/numerics/number_field.hpp"

#include "svt/numerics/linalg.hpp"

#include <sstream>

namespace svt::num {

FieldPtr make_field(const ZPoly& minpoly, std::optional<AlgebraicNumber> generator) {
    ZPoly f = primitive_part(minpoly);
    if (f.degree() < 1) throw MalformedInput("field polynomial must have positive degree");
    if (!is_irreducible(f)) throw MalformedInput("field polynomial is reducible");
    auto k = std::make_shared<NumberField>();
    k->minpoly = f;
    k->modulus = monic(to_q(f));
    k->generator = std::move(generator);
    return k;
}

NfElem::NfElem(FieldPtr field, QPoly v) : field_(std::move(field)), v_(std::move(v)) {
    if (field_ && v_.degree() >= field_->degree()) v_ = v_ % field_->modulus;
}

NfElem NfElem::generator(FieldPtr field) {
    if (field->degree() == 1) {
        const QPoly& m = field->modulus;
        return NfElem(field, QPoly(-m.coeff(0)));
    }
    return NfElem(field, QPoly::x());
}

namespace {

FieldPtr join(const NfElem& a, const NfElem& b) {
    if (!a.field()) return b.field();
    if (b.field() && a.field() != b.field() && !(a.field()->minpoly == b.field()->minpoly))
        throw PreconditionFailed("mixing elements of different number fields");
    return a.field();
}

}  // namespace

NfElem operator+(const NfElem& a, const NfElem& b) { return NfElem(join(a, b), a.v_ + b.v_); }
NfElem operator-(const NfElem& a, const NfElem& b) { return NfElem(join(a, b), a.v_ - b.v_); }
NfElem operator*(const NfElem& a, const NfElem& b) { return NfElem(join(a, b), a.v_ * b.v_); }

NfElem NfElem::inv() const {
    if (v_.is_zero()) throw PreconditionFailed("inverse of zero in a number field");
    if (v_.degree() == 0) return NfElem(field_, QPoly(mpq_class(1) / v_.coeff(0)));
    auto [g, s, t] = ext_gcd(v_, field_->modulus);
    if (g.degree() != 0) throw PreconditionFailed("element not invertible");
    return NfElem(field_, s);
}

NfElem operator/(const NfElem& a, const NfElem& b) {
    NfElem bi = b.inv();
    return NfElem(join(a, b), a.v_ * bi.v_);
}

ComplexBall NfElem::embed(const ComplexBall& theta) const {
    long prec = theta.precision();
    if (v_.is_zero()) return ComplexBall();
    ComplexBall acc = ComplexBall::from_mpq(v_.lead(), prec);
    for (int i = v_.degree() - 1; i >= 0; --i) acc = acc * theta + ComplexBall::from_mpq(v_.coeff(i), prec);
    return acc;
}

QPoly NfElem::charpoly() const {
    if (!field_) return QPoly(std::vector<mpq_class>{-v_.coeff(0), mpq_class(1)});
    const int n = field_->degree();
    // Column j holds the coordinates of theta^j * v.
    Matrix<mpq_class> m(n, std::vector<mpq_class>(n, 0));
    QPoly cur = v_;
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) m[i][j] = cur.coeff(i);
        cur = (cur * QPoly::x()) % field_->modulus;
    }
    Matrix<QPoly> xm(n, std::vector<QPoly>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            QPoly e(-m[i][j]);
            if (i == j) e = e + QPoly::x();
            xm[i][j] = e;
        }
    return bareiss_det(std::move(xm));
}

std::string NfElem::to_string() const {
    if (v_.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = v_.degree(); i >= 0; --i) {
        const mpq_class& c = v_.coeffs()[i];
        if (sgn(c) == 0) continue;
        if (!first) os << (sgn(c) > 0 ? "+" : "-");
        else if (sgn(c) < 0) os << "-";
        mpq_class a = abs(c);
        if (i == 0 || a != 1) os << a.get_str();
        if (i > 0 && a != 1) os << "*";
        if (i > 0) os << "t";
        if (i > 1) os << "^" << i;
        first = false;
    }
    return os.str();
}

ZPoly minimal_polynomial(const NfElem& a) { return squarefree_part(to_primitive_z(a.charpoly())); }

namespace {

using QTPoly = Poly<QPoly>;

// f(t - k y) as a polynomial in y over Q[t].
QTPoly shifted(const ZPoly& f, long k) {
    QTPoly lin(std::vector<QPoly>{QPoly::x(), QPoly(mpq_class(-k))});
    QTPoly acc;
    for (int i = f.degree(); i >= 0; --i) acc = acc * lin + QTPoly(QPoly(mpq_class(f.coeff(i))));
    return acc;
}

}  // namespace

Compositum compositum(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    if (a.degree() == 1 && b.degree() == 1) {
        mpq_class qa(-a.minpoly.coeff(0), a.minpoly.coeff(1)), qb(-b.minpoly.coeff(0), b.minpoly.coeff(1));
        qa.canonicalize();
        qb.canonicalize();
        return {nullptr, NfElem(qa), NfElem(qb)};
    }
    if (a.degree() == 1) {
        mpq_class qa(-a.minpoly.coeff(0), a.minpoly.coeff(1));
        qa.canonicalize();
        FieldPtr k = make_field(b.minpoly, b);
        return {k, NfElem(qa), NfElem::generator(k)};
    }
    if (b.degree() == 1) {
        mpq_class qb(-b.minpoly.coeff(0), b.minpoly.coeff(1));
        qb.canonicalize();
        FieldPtr k = make_field(a.minpoly, a);
        return {k, NfElem::generator(k), NfElem(qb)};
    }
    QTPoly g_y;
    {
        std::vector<QPoly> c;
        for (const auto& x : b.minpoly.coeffs()) c.emplace_back(mpq_class(x));
        g_y = QTPoly(std::move(c));
    }
    for (long step = 1; step < 64; ++step) {
        long k = (step % 2 == 1) ? (step + 1) / 2 : -(step / 2);
        QPoly res = resultant(shifted(a.minpoly, k), g_y);
        ZPoly r = to_primitive_z(res);
        if (!is_squarefree(r)) continue;
        for (long prec = 64; prec <= 4096; prec *= 2) {
            ComplexBall t = refine_embedding(a, prec) + ComplexBall(k) * refine_embedding(b, prec);
            int hits = 0;
            ZPoly h;
            ComplexBall root;
            bool ambiguous = false;
            for (const auto& [fac, mult] : factor(r)) {
                (void)mult;
                for (const auto& z : conjugate_embeddings(fac, prec)) {
                    if (z.overlaps(t)) {
                        ++hits;
                        h = fac;
                        root = z;
                    }
                }
            }
            if (hits == 0) throw PrecisionExhausted("compositum: no matching root");
            if (hits > 1) {
                ambiguous = true;
                continue;
            }
            (void)ambiguous;
            FieldPtr field = make_field(h, AlgebraicNumber{h, root});
            NfElem theta = NfElem::generator(field);
            // gcd over K of g(y) and f(theta - k y) must be linear.
            Poly<NfElem> gk, fk;
            {
                std::vector<NfElem> c;
                for (const auto& x : b.minpoly.coeffs()) c.emplace_back(mpq_class(x));
                gk = Poly<NfElem>(std::move(c));
                Poly<NfElem> lin(std::vector<NfElem>{theta, NfElem(mpq_class(-k))});
                for (int i = a.minpoly.degree(); i >= 0; --i)
                    fk = fk * lin + Poly<NfElem>(NfElem(mpq_class(a.minpoly.coeff(i))));
            }
            Poly<NfElem> g = gcd(gk, fk);
            if (g.degree() != 1) break;
            NfElem eta = -(g.coeff(0) / g.coeff(1));
            NfElem xi = theta - NfElem(mpq_class(k)) * eta;
            return {field, xi, eta};
        }
    }
    throw PrecisionExhausted("compositum: no separating combination found");
}

}  // namespace svt::num
