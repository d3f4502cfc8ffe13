#include "svt/polyring/params.hpp"

#include "svt/numerics/error.hpp"

namespace svt::poly {

using num::ComplexBall;

ComplexBall scalar_ball(const Scalar& x, long prec) {
    if (auto q = std::get_if<mpq_class>(&x)) return ComplexBall::from_mpq(*q, prec);
    if (auto a = std::get_if<num::AlgebraicNumber>(&x)) return num::refine_embedding(*a, prec);
    return std::get<ComplexBall>(x);
}

bool scalar_is_rational(const Scalar& x) {
    if (std::holds_alternative<mpq_class>(x)) return true;
    if (auto a = std::get_if<num::AlgebraicNumber>(&x)) return a->degree() == 1;
    return false;
}

bool scalar_is_exact(const Scalar& x) { return !std::holds_alternative<ComplexBall>(x); }

bool scalar_is_real(const Scalar& x, long prec) {
    if (std::holds_alternative<mpq_class>(x)) return true;
    if (auto a = std::get_if<num::AlgebraicNumber>(&x)) return num::is_real_root(*a);
    (void)prec;
    const ComplexBall& b = std::get<ComplexBall>(x);
    // Balls with a zero imaginary midpoint are taken as declared real values.
    return b.im_mid().is_zero();
}

std::string scalar_to_string(const Scalar& x) {
    if (auto q = std::get_if<mpq_class>(&x)) return q->get_str();
    if (auto a = std::get_if<num::AlgebraicNumber>(&x)) {
        std::string s = "root of [";
        for (int i = 0; i <= a->minpoly.degree(); ++i) s += (i ? "," : "") + a->minpoly.coeff(i).get_str();
        return s + "] near " + std::to_string(a->box.re_mid().to_double()) + "+" +
               std::to_string(a->box.im_mid().to_double()) + "i";
    }
    const ComplexBall& b = std::get<ComplexBall>(x);
    return std::to_string(b.re_mid().to_double()) + "+" + std::to_string(b.im_mid().to_double()) + "i";
}

mpz_class default_multiplier(const mpq_class& r, const mpq_class& s) {
    mpz_class m = r.get_den();
    mpz_class sn = abs(s.get_num());
    mpz_lcm(m.get_mpz_t(), m.get_mpz_t(), sn.get_mpz_t());
    return m;
}

TranslationParams TranslationParams::make(Scalar xi, Scalar eta, const mpq_class& r, const mpq_class& s,
                                          std::optional<mpz_class> m) {
    if (sgn(r) == 0) throw PreconditionFailed("r must be nonzero");
    if (sgn(s) == 0 || abs(s) == 1) throw PreconditionFailed("s must avoid 0, 1 and -1");
    if (auto q = std::get_if<mpq_class>(&eta); q && sgn(*q) == 0) throw PreconditionFailed("eta must be nonzero");
    if (auto b = std::get_if<ComplexBall>(&eta); b && b->contains_zero())
        throw PreconditionFailed("eta must be certainly nonzero");
    if (auto a = std::get_if<num::AlgebraicNumber>(&eta); a && a->minpoly.degree() == 1 && sgn(a->minpoly.coeff(0)) == 0)
        throw PreconditionFailed("eta must be nonzero");
    TranslationParams p;
    p.xi = std::move(xi);
    p.eta = std::move(eta);
    p.r = r;
    p.s = s;
    p.m = m ? *m : default_multiplier(r, s);
    if (sgn(p.m) <= 0) throw PreconditionFailed("m must be positive");
    mpq_class mr = p.m * r, ms = p.m / s;
    if (mr.get_den() != 1 || ms.get_den() != 1)
        throw PreconditionFailed("m must make m*r and m/s integers");
    return p;
}

const mpq_class& TranslationParams::xi_q() const {
    if (auto q = std::get_if<mpq_class>(&xi)) return *q;
    throw PreconditionFailed("xi is not given as a rational");
}

const mpq_class& TranslationParams::eta_q() const {
    if (auto q = std::get_if<mpq_class>(&eta)) return *q;
    throw PreconditionFailed("eta is not given as a rational");
}

}  // namespace svt::poly
