#include "svt/projective/point.hpp"

#include "svt/polyring/transforms.hpp"

namespace svt::proj {

namespace {

mpq_class qabs(const mpq_class& q) { return sgn(q) < 0 ? mpq_class(-q) : q; }

RealBall ball_max_norm(const BallTriple& z) {
    RealBall m = z[0].abs();
    m = num::max(m, z[1].abs());
    return num::max(m, z[2].abs());
}

mpq_class exact_max_norm(const ExactTriple& z) { return std::max({qabs(z[0]), qabs(z[1]), qabs(z[2])}); }

}  // namespace

ProjectivePoint ProjectivePoint::exact(const ExactTriple& z) {
    if (sgn(z[0]) == 0 && sgn(z[1]) == 0 && sgn(z[2]) == 0) throw PreconditionFailed("zero representative");
    ProjectivePoint p;
    p.exact_ = z;
    return p;
}

ProjectivePoint ProjectivePoint::from_balls(const BallTriple& z) {
    if (z[0].is_exact_zero() && z[1].is_exact_zero() && z[2].is_exact_zero())
        throw PreconditionFailed("zero representative");
    ProjectivePoint p;
    p.balls_ = z;
    return p;
}

const ExactTriple& ProjectivePoint::exact_coords() const {
    if (!exact_) throw PreconditionFailed("point has no exact coordinates");
    return *exact_;
}

BallTriple ProjectivePoint::balls(long prec) const {
    if (!exact_) return balls_;
    const auto& z = *exact_;
    return {ComplexBall::from_mpq(z[0], prec), ComplexBall::from_mpq(z[1], prec), ComplexBall::from_mpq(z[2], prec)};
}

RealBall ProjectivePoint::norm(long prec) const {
    if (exact_) return RealBall::from_mpq(exact_max_norm(*exact_), prec);
    return ball_max_norm(balls_);
}

std::optional<mpq_class> ProjectivePoint::exact_norm() const {
    if (!exact_) return std::nullopt;
    return exact_max_norm(*exact_);
}

ProjectivePoint ProjectivePoint::normalized(long prec) const {
    ProjectivePoint out;
    out.normalized_ = true;
    if (exact_) {
        const auto& z = *exact_;
        int k = 0;
        for (int i = 1; i < 3; ++i)
            if (qabs(z[i]) > qabs(z[k])) k = i;
        out.exact_ = ExactTriple{z[0] / z[k], z[1] / z[k], z[2] / z[k]};
        return out;
    }
    RealBall n = ball_max_norm(balls_);
    if (n.contains_zero()) throw PrecisionExhausted("norm of the representative not separated from 0");
    ComplexBall inv(n.inv(), RealBall());
    out.balls_ = {balls_[0] * inv, balls_[1] * inv, balls_[2] * inv};
    return out;
}

int ProjectivePoint::unit_index(long prec) const {
    if (exact_) {
        mpq_class n = exact_max_norm(*exact_);
        for (int k = 0; k < 3; ++k)
            if (qabs((*exact_)[k]) == n) return k;
    }
    // Ball case: the coordinate whose modulus certainly dominates, else the largest midpoint.
    BallTriple z = balls(prec);
    RealBall a[3] = {z[0].abs(), z[1].abs(), z[2].abs()};
    for (int k = 0; k < 3; ++k) {
        bool dominant = true;
        for (int j = 0; j < 3; ++j)
            if (j != k && num::certainly_lt(a[k], a[j])) dominant = false;
        if (dominant) return k;
    }
    return 0;
}

ProjectivePoint ProjectivePoint::scaled(const mpq_class& c) const {
    if (sgn(c) == 0) throw PreconditionFailed("scaling by zero");
    if (exact_) return exact({c * (*exact_)[0], c * (*exact_)[1], c * (*exact_)[2]});
    ComplexBall cb = ComplexBall::from_mpq(c, balls_[0].precision() + 64);
    return from_balls({cb * balls_[0], cb * balls_[1], cb * balls_[2]});
}

bool same_point(const ExactTriple& a, const ExactTriple& b) {
    ExactTriple w = wedge(a, b);
    return sgn(w[0]) == 0 && sgn(w[1]) == 0 && sgn(w[2]) == 0;
}

ProjectivePoint gamma(const TranslationParams& params, long i, long prec) {
    if (params.rational()) {
        return ProjectivePoint::exact(
            {mpq_class(1), params.xi_q() + mpq_class(i) * params.r, params.eta_q() * poly::rational_pow(params.s, i)});
    }
    ComplexBall y = params.xi_ball(prec) + ComplexBall::from_mpq(mpq_class(i) * params.r, prec);
    ComplexBall z = params.eta_ball(prec) * ComplexBall::from_mpq(poly::rational_pow(params.s, i), prec);
    return ProjectivePoint::from_balls({ComplexBall(1), y, z});
}

ExactTriple wedge(const ExactTriple& a, const ExactTriple& b) {
    return {a[0] * b[1] - a[1] * b[0], a[0] * b[2] - a[2] * b[0], a[1] * b[2] - a[2] * b[1]};
}

BallTriple wedge(const BallTriple& a, const BallTriple& b) {
    return {a[0] * b[1] - a[1] * b[0], a[0] * b[2] - a[2] * b[0], a[1] * b[2] - a[2] * b[1]};
}

std::optional<mpq_class> dist_exact(const ProjectivePoint& a, const ProjectivePoint& b) {
    if (!a.is_exact() || !b.is_exact()) return std::nullopt;
    const auto& x = a.exact_coords();
    const auto& y = b.exact_coords();
    return exact_max_norm(wedge(x, y)) / (exact_max_norm(x) * exact_max_norm(y));
}

RealBall dist(const ProjectivePoint& a, const ProjectivePoint& b, long prec) {
    if (auto q = dist_exact(a, b)) return RealBall::from_mpq(*q, prec);
    BallTriple x = a.balls(prec), y = b.balls(prec);
    RealBall na = ball_max_norm(x), nb = ball_max_norm(y);
    if (na.contains_zero() || nb.contains_zero()) throw PrecisionExhausted("representative norm not separated from 0");
    RealBall d = ball_max_norm(wedge(x, y)) / (na * nb);
    // The true value lies in [0, 2]; clip the enclosure so downstream logs see the known range.
    num::BigFloat lo = d.lower(), hi = d.upper();
    if (lo.sign() < 0) lo = num::BigFloat::from_si(0);
    if (hi > num::BigFloat::from_si(2)) hi = num::BigFloat::from_si(2);
    return RealBall::from_interval(lo, hi, prec);
}

RealBall dist_to_set(const ProjectivePoint& a, const std::vector<ProjectivePoint>& set, long prec) {
    if (set.empty()) throw PreconditionFailed("distance to an empty set");
    RealBall best = dist(a, set[0], prec);
    for (size_t i = 1; i < set.size(); ++i) best = num::min(best, dist(a, set[i], prec));
    return best;
}

ProjectivePoint tau_pow(const ProjectivePoint& p, long j, const mpq_class& r, const mpq_class& s, long prec) {
    mpq_class shift = mpq_class(j) * r, scale = poly::rational_pow(s, j);
    if (p.is_exact()) {
        const auto& z = p.exact_coords();
        return ProjectivePoint::exact({z[0], z[1] + shift * z[0], scale * z[2]});
    }
    BallTriple z = p.balls(prec);
    long wp = std::max<long>(prec, z[0].precision()) + 32;
    return ProjectivePoint::from_balls(
        {z[0], z[1] + ComplexBall::from_mpq(shift, wp) * z[0], ComplexBall::from_mpq(scale, wp) * z[2]});
}

ProjectivePoint tau_pow(const ProjectivePoint& p, long j, const TranslationParams& params, long prec) {
    return tau_pow(p, j, params.r, params.s, prec);
}

RealBall log_height(const mpq_class& q, long prec) {
    mpz_class n = abs(q.get_num());
    mpz_class m = std::max(n, mpz_class(q.get_den()));
    return num::log(RealBall::from_mpz(m, prec));
}

std::array<mpq_class, 4> operator_norms(const mpq_class& r, const mpq_class& s) {
    mpq_class ar = qabs(r), as = qabs(s), one(1);
    mpq_class is = one / as;
    // tau: rows (1,0,0), (r,1,0), (0,0,s)
    mpq_class t = std::max({one, mpq_class(ar + 1), as});
    mpq_class ti = std::max({one, mpq_class(ar + 1), is});
    // wedge^2 tau on (e0^e1, e0^e2, e1^e2): rows (1,0,0), (0,s,0), (0,rs,s)
    mpq_class w = std::max({one, as, mpq_class(ar * as + as)});
    mpq_class wi = std::max({one, is, mpq_class(ar * is + is)});
    return {t, ti, w, wi};
}

ConstantsTable translation_constants(const mpq_class& r, const mpq_class& s, long prec) {
    if (sgn(r) == 0) throw PreconditionFailed("r must be nonzero");
    if (qabs(s) <= 1) throw PreconditionFailed("translation constants need |s| > 1");
    ConstantsTable t;
    auto norms = operator_norms(r, s);
    t.c = std::max({norms[0], norms[1], norms[2], norms[3]});
    t.c1 = RealBall(3) * num::log(RealBall::from_mpq(t.c, prec));
    t.c4 = RealBall(6) + RealBall::log2_const(prec) + log_height(r, prec) + log_height(s, prec);

    // c' = prod_{i>=1} (1 + x^(i-1)) / (1 - x^i)^2 with x = 1/|s|.  Every factor is >= 1,
    // so the truncated product is a lower bound; the log of the tail is at most
    // x^N/(1-x) + 2 x^(N+1) / ((1-x)(1-x^(N+1))).
    mpq_class x = mpq_class(1) / qabs(s);
    const long terms = 64 + prec;
    RealBall prod(1);
    mpq_class xi(1);  // x^(i-1)
    for (long i = 1; i <= terms; ++i) {
        mpq_class next = xi * x;
        RealBall num_f = RealBall::from_mpq(1 + xi, prec);
        RealBall den_f = RealBall::from_mpq(1 - next, prec);
        prod = prod * num_f / (den_f * den_f);
        xi = next;
    }
    // xi is now x^N
    mpq_class tail = xi / (1 - x) + 2 * xi * x / ((1 - x) * (1 - xi * x));
    RealBall hi = prod * num::exp(RealBall::from_mpq(tail, prec));
    t.c_prime = RealBall::from_interval(prod.lower(), hi.upper(), prec);
    return t;
}

}  // namespace svt::proj
