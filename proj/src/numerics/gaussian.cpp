#include "svt/numerics/gaussian.hpp"

#include "svt/numerics/error.hpp"

namespace svt::num {

GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    mpq_class n = b.norm();
    if (sgn(n) == 0) throw PreconditionFailed("division by zero in Q(i)");
    GaussianRational p = a * b.conj();
    return {p.re() / n, p.im() / n};
}

std::optional<mpq_class> rational_sqrt(const mpq_class& q) {
    if (sgn(q) < 0) return std::nullopt;
    mpz_class n = q.get_num(), d = q.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    return mpq_class(rn, rd);
}

RealBall GaussianRational::abs(long prec) const {
    if (sgn(im_) == 0) return RealBall::from_mpq(::abs(re_), prec);
    if (sgn(re_) == 0) return RealBall::from_mpq(::abs(im_), prec);
    mpq_class n = norm();
    if (auto r = rational_sqrt(n)) return RealBall::from_mpq(*r, prec);
    return sqrt(RealBall::from_mpq(n, prec + 8));
}

std::string GaussianRational::to_string() const {
    if (sgn(im_) == 0) return re_.get_str();
    std::string s = sgn(re_) == 0 ? "" : re_.get_str();
    if (sgn(im_) > 0 && !s.empty()) s += "+";
    return s + im_.get_str() + "i";
}

}  // namespace svt::num
