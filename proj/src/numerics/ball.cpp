#include "svt/numerics/ball.hpp"

#include "svt/numerics/error.hpp"

#include <cctype>
#include <utility>

namespace svt::num {

// ---------------------------------------------------------------- BigFloat

BigFloat::BigFloat(mpfr_prec_t prec) {
    mpfr_init2(v_, std::max<mpfr_prec_t>(prec, MPFR_PREC_MIN));
    mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(const BigFloat& other) {
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, other.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
    if (this != &other) {
        mpfr_set_prec(v_, mpfr_get_prec(other.v_));
        mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
    mpfr_swap(v_, other.v_);
    return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::from_si(long v, mpfr_prec_t prec) {
    BigFloat r(std::max<mpfr_prec_t>(prec, 64));
    mpfr_set_si(r.v_, v, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::from_mpz(const mpz_class& v, mpfr_prec_t prec, mpfr_rnd_t rnd) {
    BigFloat r(prec);
    mpfr_set_z(r.v_, v.get_mpz_t(), rnd);
    return r;
}

BigFloat BigFloat::from_mpq(const mpq_class& v, mpfr_prec_t prec, mpfr_rnd_t rnd) {
    BigFloat r(prec);
    mpfr_set_q(r.v_, v.get_mpq_t(), rnd);
    return r;
}

BigFloat BigFloat::from_double(double v) {
    BigFloat r(53);
    mpfr_set_d(r.v_, v, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::parse(const std::string& text, mpfr_prec_t prec) {
    BigFloat r(prec);
    char* end = nullptr;
    mpfr_strtofr(r.v_, text.c_str(), &end, 0, MPFR_RNDN);
    if (end == text.c_str() || *end != '\0') throw MalformedInput("bad float literal '" + text + "'");
    return r;
}

mpq_class BigFloat::to_mpq() const {
    mpq_class q;
    mpfr_get_q(q.get_mpq_t(), v_);
    return q;
}

std::string BigFloat::to_hex() const {
    char* s = nullptr;
    mpfr_asprintf(&s, "%Ra", v_);
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

std::string BigFloat::to_decimal(int digits, mpfr_rnd_t rnd) const {
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*R*e", digits, rnd, v_);
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

BigFloat pow2(long e, mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_set_ui_2exp(r.get(), 1, e, MPFR_RNDN);
    return r;
}

namespace {

// Bound on the rounding error of a value produced with round-to-nearest.
void add_rounding(BigFloat& rad, const BigFloat& x, int ternary) {
    if (ternary == 0 || x.is_zero()) return;
    BigFloat half_ulp(kRadPrec);
    mpfr_set_ui_2exp(half_ulp.get(), 1, mpfr_get_exp(x.get()) - x.precision() - 1, MPFR_RNDU);
    mpfr_add(rad.get(), rad.get(), half_ulp.get(), MPFR_RNDU);
}

BigFloat abs_upper(const BigFloat& x) {
    BigFloat r(kRadPrec);
    mpfr_abs(r.get(), x.get(), MPFR_RNDU);
    return r;
}

BigFloat abs_lower(const BigFloat& x) {
    BigFloat r(kRadPrec);
    mpfr_abs(r.get(), x.get(), MPFR_RNDD);
    return r;
}

BigFloat rad_add(const BigFloat& a, const BigFloat& b) {
    BigFloat r(kRadPrec);
    mpfr_add(r.get(), a.get(), b.get(), MPFR_RNDU);
    return r;
}

BigFloat rad_mul(const BigFloat& a, const BigFloat& b) {
    BigFloat r(kRadPrec);
    mpfr_mul(r.get(), a.get(), b.get(), MPFR_RNDU);
    return r;
}

// |a - b| rounded away from zero (upper bound) or toward zero (lower bound).
BigFloat diff_abs(const BigFloat& a, const BigFloat& b, bool upper) {
    BigFloat r(std::max(a.precision(), b.precision()) + 2);
    mpfr_sub(r.get(), a.get(), b.get(), upper ? MPFR_RNDA : MPFR_RNDZ);
    mpfr_abs(r.get(), r.get(), MPFR_RNDN);
    return r;
}

}  // namespace

// ---------------------------------------------------------------- RealBall

RealBall::RealBall() : mid_(64) {}

RealBall::RealBall(long v) : mid_(BigFloat::from_si(v, 64)) {}

RealBall RealBall::from_mpz(const mpz_class& v, long prec) {
    RealBall r;
    r.mid_ = BigFloat(prec);
    int t = mpfr_set_z(r.mid_.get(), v.get_mpz_t(), MPFR_RNDN);
    add_rounding(r.rad_, r.mid_, t);
    return r;
}

RealBall RealBall::from_mpq(const mpq_class& v, long prec) {
    RealBall r;
    r.mid_ = BigFloat(prec);
    int t = mpfr_set_q(r.mid_.get(), v.get_mpq_t(), MPFR_RNDN);
    add_rounding(r.rad_, r.mid_, t);
    return r;
}

RealBall RealBall::from_mid_rad(BigFloat mid, BigFloat rad) {
    RealBall r;
    r.mid_ = std::move(mid);
    mpfr_abs(r.rad_.get(), rad.get(), MPFR_RNDU);
    return r;
}

RealBall RealBall::from_interval(const BigFloat& lo, const BigFloat& hi, long prec) {
    RealBall r;
    r.mid_ = BigFloat(prec);
    mpfr_add(r.mid_.get(), lo.get(), hi.get(), MPFR_RNDN);
    mpfr_div_2ui(r.mid_.get(), r.mid_.get(), 1, MPFR_RNDN);
    BigFloat a(kRadPrec), b(kRadPrec);
    mpfr_sub(a.get(), hi.get(), r.mid_.get(), MPFR_RNDU);
    mpfr_sub(b.get(), r.mid_.get(), lo.get(), MPFR_RNDU);
    mpfr_max(r.rad_.get(), a.get(), b.get(), MPFR_RNDU);
    if (r.rad_.sign() < 0) mpfr_set_zero(r.rad_.get(), 1);
    return r;
}

RealBall RealBall::log2_const(long prec) {
    BigFloat lo(prec), hi(prec);
    mpfr_const_log2(lo.get(), MPFR_RNDD);
    mpfr_const_log2(hi.get(), MPFR_RNDU);
    return from_interval(lo, hi, prec);
}

RealBall RealBall::pi_const(long prec) {
    BigFloat lo(prec), hi(prec);
    mpfr_const_pi(lo.get(), MPFR_RNDD);
    mpfr_const_pi(hi.get(), MPFR_RNDU);
    return from_interval(lo, hi, prec);
}

BigFloat RealBall::lower() const {
    BigFloat r(std::max<mpfr_prec_t>(mid_.precision(), kRadPrec));
    mpfr_sub(r.get(), mid_.get(), rad_.get(), MPFR_RNDD);
    return r;
}

BigFloat RealBall::upper() const {
    BigFloat r(std::max<mpfr_prec_t>(mid_.precision(), kRadPrec));
    mpfr_add(r.get(), mid_.get(), rad_.get(), MPFR_RNDU);
    return r;
}

bool RealBall::contains_zero() const { return lower().sign() <= 0 && upper().sign() >= 0; }

bool RealBall::contains(const RealBall& inner) const {
    return lower() <= inner.lower() && inner.upper() <= upper();
}

bool RealBall::overlaps(const RealBall& other) const {
    return !(upper() < other.lower() || other.upper() < lower());
}

RealBall RealBall::widened(const BigFloat& extra) const {
    RealBall r = *this;
    BigFloat e = abs_upper(extra);
    r.rad_ = rad_add(r.rad_, e);
    return r;
}

RealBall RealBall::operator-() const {
    RealBall r = *this;
    mpfr_neg(r.mid_.get(), r.mid_.get(), MPFR_RNDN);
    return r;
}

RealBall operator+(const RealBall& a, const RealBall& b) {
    RealBall r;
    r.mid_ = BigFloat(std::max(a.precision(), b.precision()));
    int t = mpfr_add(r.mid_.get(), a.mid_.get(), b.mid_.get(), MPFR_RNDN);
    r.rad_ = rad_add(a.rad_, b.rad_);
    add_rounding(r.rad_, r.mid_, t);
    return r;
}

RealBall operator-(const RealBall& a, const RealBall& b) {
    RealBall r;
    r.mid_ = BigFloat(std::max(a.precision(), b.precision()));
    int t = mpfr_sub(r.mid_.get(), a.mid_.get(), b.mid_.get(), MPFR_RNDN);
    r.rad_ = rad_add(a.rad_, b.rad_);
    add_rounding(r.rad_, r.mid_, t);
    return r;
}

RealBall operator*(const RealBall& a, const RealBall& b) {
    RealBall r;
    r.mid_ = BigFloat(std::max(a.precision(), b.precision()));
    int t = mpfr_mul(r.mid_.get(), a.mid_.get(), b.mid_.get(), MPFR_RNDN);
    BigFloat e = rad_add(rad_mul(abs_upper(a.mid_), b.rad_), rad_mul(abs_upper(b.mid_), a.rad_));
    r.rad_ = rad_add(e, rad_mul(a.rad_, b.rad_));
    add_rounding(r.rad_, r.mid_, t);
    return r;
}

RealBall RealBall::inv() const {
    BigFloat m = abs_lower(mid_);
    BigFloat gap(kRadPrec);
    mpfr_sub(gap.get(), m.get(), rad_.get(), MPFR_RNDD);
    if (gap.sign() <= 0) throw PrecisionExhausted("division by a ball containing zero");
    RealBall r;
    r.mid_ = BigFloat(precision());
    int t = mpfr_ui_div(r.mid_.get(), 1, mid_.get(), MPFR_RNDN);
    if (!rad_.is_zero()) {
        BigFloat den(kRadPrec);
        mpfr_mul(den.get(), m.get(), gap.get(), MPFR_RNDD);
        mpfr_div(r.rad_.get(), rad_.get(), den.get(), MPFR_RNDU);
    }
    add_rounding(r.rad_, r.mid_, t);
    return r;
}

RealBall operator/(const RealBall& a, const RealBall& b) {
    if (b.is_exact()) {
        if (b.mid_.is_zero()) throw PrecisionExhausted("division by exact zero");
        RealBall r;
        r.mid_ = BigFloat(std::max(a.precision(), b.precision()));
        int t = mpfr_div(r.mid_.get(), a.mid_.get(), b.mid_.get(), MPFR_RNDN);
        BigFloat bl = abs_lower(b.mid_);
        mpfr_div(r.rad_.get(), a.rad_.get(), bl.get(), MPFR_RNDU);
        add_rounding(r.rad_, r.mid_, t);
        return r;
    }
    return a * b.inv();
}

RealBall abs(const RealBall& x) {
    if (x.lower().sign() >= 0) return x;
    if (x.upper().sign() <= 0) return -x;
    BigFloat lo(kRadPrec);
    BigFloat hi = x.upper();
    BigFloat nl = x.lower();
    mpfr_neg(nl.get(), nl.get(), MPFR_RNDU);
    if (nl > hi) hi = nl;
    return RealBall::from_interval(lo, hi, x.precision());
}

RealBall max(const RealBall& a, const RealBall& b) {
    if (certainly_le(b, a)) return a;
    if (certainly_le(a, b)) return b;
    BigFloat lo = a.lower(), hi = a.upper();
    BigFloat bl = b.lower(), bh = b.upper();
    if (bl > lo) lo = bl;
    if (bh > hi) hi = bh;
    return RealBall::from_interval(lo, hi, std::max(a.precision(), b.precision()));
}

RealBall min(const RealBall& a, const RealBall& b) { return -max(-a, -b); }

RealBall sqrt(const RealBall& x) {
    long prec = x.precision();
    if (x.is_exact() && x.mid().sign() >= 0) {
        RealBall r;
        BigFloat m(prec);
        int t = mpfr_sqrt(m.get(), x.mid().get(), MPFR_RNDN);
        BigFloat rad(kRadPrec);
        add_rounding(rad, m, t);
        return RealBall::from_mid_rad(std::move(m), std::move(rad));
    }
    BigFloat lo = x.lower(), hi = x.upper();
    if (hi.sign() < 0) throw PreconditionFailed("sqrt of a negative ball");
    if (lo.sign() < 0) mpfr_set_zero(lo.get(), 1);
    BigFloat slo(prec), shi(prec);
    mpfr_sqrt(slo.get(), lo.get(), MPFR_RNDD);
    mpfr_sqrt(shi.get(), hi.get(), MPFR_RNDU);
    return RealBall::from_interval(slo, shi, prec);
}

RealBall exp(const RealBall& x) {
    long prec = x.precision();
    BigFloat lo(prec), hi(prec);
    mpfr_exp(lo.get(), x.lower().get(), MPFR_RNDD);
    mpfr_exp(hi.get(), x.upper().get(), MPFR_RNDU);
    return RealBall::from_interval(lo, hi, prec);
}

RealBall log(const RealBall& x) {
    BigFloat xl = x.lower();
    if (xl.sign() <= 0) throw PreconditionFailed("log of a ball that is not certainly positive");
    long prec = x.precision();
    BigFloat lo(prec), hi(prec);
    mpfr_log(lo.get(), xl.get(), MPFR_RNDD);
    mpfr_log(hi.get(), x.upper().get(), MPFR_RNDU);
    return RealBall::from_interval(lo, hi, prec);
}

LogValue log_or_neg_inf(const RealBall& x) {
    if (x.lower().sign() <= 0) return LogValue{true, RealBall()};
    return LogValue{false, log(x)};
}

RealBall pow(const RealBall& x, long n) {
    if (n < 0) return pow(x, -n).inv();
    RealBall result(1);
    RealBall base = x;
    while (n > 0) {
        if (n & 1) result = result * base;
        n >>= 1;
        if (n) base = base * base;
    }
    return result;
}

RealBall pow(const RealBall& x, const RealBall& y) { return exp(y * log(x)); }

bool certainly_lt(const RealBall& a, const RealBall& b) { return a.upper() < b.lower(); }

bool certainly_le(const RealBall& a, const RealBall& b) { return a.upper() <= b.lower(); }

// ---------------------------------------------------------------- ComplexBall

ComplexBall::ComplexBall() : re_(64), im_(64) {}

ComplexBall::ComplexBall(long re) : re_(BigFloat::from_si(re, 64)), im_(64) {}

ComplexBall::ComplexBall(const RealBall& re, const RealBall& im) : re_(re.mid()), im_(im.mid()) {
    rad_ = rad_add(re.rad(), im.rad());
}

ComplexBall ComplexBall::from_mid_rad(BigFloat re, BigFloat im, BigFloat rad) {
    ComplexBall z;
    z.re_ = std::move(re);
    z.im_ = std::move(im);
    mpfr_abs(z.rad_.get(), rad.get(), MPFR_RNDU);
    return z;
}

ComplexBall ComplexBall::from_mpq(const mpq_class& re, long prec) {
    return ComplexBall(RealBall::from_mpq(re, prec), RealBall());
}

ComplexBall ComplexBall::from_mpq(const mpq_class& re, const mpq_class& im, long prec) {
    return ComplexBall(RealBall::from_mpq(re, prec), RealBall::from_mpq(im, prec));
}

RealBall ComplexBall::real() const { return RealBall::from_mid_rad(re_, rad_); }
RealBall ComplexBall::imag() const { return RealBall::from_mid_rad(im_, rad_); }

BigFloat ComplexBall::mid_abs_upper() const {
    BigFloat r(kRadPrec);
    mpfr_hypot(r.get(), re_.get(), im_.get(), MPFR_RNDU);
    return r;
}

RealBall ComplexBall::abs() const {
    long prec = precision();
    if (im_.is_zero()) return num::abs(real());
    if (re_.is_zero()) return num::abs(imag());
    BigFloat lo(prec), hi(prec);
    mpfr_hypot(lo.get(), re_.get(), im_.get(), MPFR_RNDD);
    mpfr_hypot(hi.get(), re_.get(), im_.get(), MPFR_RNDU);
    mpfr_sub(lo.get(), lo.get(), rad_.get(), MPFR_RNDD);
    if (lo.sign() < 0) mpfr_set_zero(lo.get(), 1);
    mpfr_add(hi.get(), hi.get(), rad_.get(), MPFR_RNDU);
    return RealBall::from_interval(lo, hi, prec);
}

bool ComplexBall::contains_zero() const {
    BigFloat m(kRadPrec);
    mpfr_hypot(m.get(), re_.get(), im_.get(), MPFR_RNDD);
    return m <= rad_;
}

bool ComplexBall::contains(const ComplexBall& inner) const {
    BigFloat dr = diff_abs(re_, inner.re_, true);
    BigFloat di = diff_abs(im_, inner.im_, true);
    BigFloat d(kRadPrec);
    mpfr_hypot(d.get(), dr.get(), di.get(), MPFR_RNDU);
    mpfr_add(d.get(), d.get(), inner.rad_.get(), MPFR_RNDU);
    return d <= rad_;
}

bool ComplexBall::overlaps(const ComplexBall& other) const {
    BigFloat dr = diff_abs(re_, other.re_, false);
    BigFloat di = diff_abs(im_, other.im_, false);
    BigFloat d(kRadPrec);
    mpfr_hypot(d.get(), dr.get(), di.get(), MPFR_RNDD);
    return d <= rad_add(rad_, other.rad_);
}

ComplexBall ComplexBall::midpoint() const {
    ComplexBall z = *this;
    mpfr_set_zero(z.rad_.get(), 1);
    return z;
}

ComplexBall ComplexBall::widened(const BigFloat& extra) const {
    ComplexBall z = *this;
    z.rad_ = rad_add(rad_, abs_upper(extra));
    return z;
}

ComplexBall ComplexBall::conj() const {
    ComplexBall z = *this;
    mpfr_neg(z.im_.get(), z.im_.get(), MPFR_RNDN);
    return z;
}

ComplexBall ComplexBall::operator-() const {
    ComplexBall z = *this;
    mpfr_neg(z.re_.get(), z.re_.get(), MPFR_RNDN);
    mpfr_neg(z.im_.get(), z.im_.get(), MPFR_RNDN);
    return z;
}

ComplexBall operator+(const ComplexBall& a, const ComplexBall& b) {
    ComplexBall z;
    long prec = std::max(a.precision(), b.precision());
    z.re_ = BigFloat(prec);
    z.im_ = BigFloat(prec);
    int t1 = mpfr_add(z.re_.get(), a.re_.get(), b.re_.get(), MPFR_RNDN);
    int t2 = mpfr_add(z.im_.get(), a.im_.get(), b.im_.get(), MPFR_RNDN);
    z.rad_ = rad_add(a.rad_, b.rad_);
    add_rounding(z.rad_, z.re_, t1);
    add_rounding(z.rad_, z.im_, t2);
    return z;
}

ComplexBall operator-(const ComplexBall& a, const ComplexBall& b) {
    ComplexBall z;
    long prec = std::max(a.precision(), b.precision());
    z.re_ = BigFloat(prec);
    z.im_ = BigFloat(prec);
    int t1 = mpfr_sub(z.re_.get(), a.re_.get(), b.re_.get(), MPFR_RNDN);
    int t2 = mpfr_sub(z.im_.get(), a.im_.get(), b.im_.get(), MPFR_RNDN);
    z.rad_ = rad_add(a.rad_, b.rad_);
    add_rounding(z.rad_, z.re_, t1);
    add_rounding(z.rad_, z.im_, t2);
    return z;
}

namespace {

// x*y exactly.
BigFloat exact_mul(const BigFloat& x, const BigFloat& y) {
    BigFloat p(x.precision() + y.precision());
    mpfr_mul(p.get(), x.get(), y.get(), MPFR_RNDN);
    return p;
}

}  // namespace

ComplexBall operator*(const ComplexBall& a, const ComplexBall& b) {
    ComplexBall z;
    long prec = std::max(a.precision(), b.precision());
    z.re_ = BigFloat(prec);
    z.im_ = BigFloat(prec);
    int t1 = 0, t2 = 0;
    if (a.im_.is_zero() && b.im_.is_zero()) {
        t1 = mpfr_mul(z.re_.get(), a.re_.get(), b.re_.get(), MPFR_RNDN);
    } else {
        BigFloat ac = exact_mul(a.re_, b.re_), bd = exact_mul(a.im_, b.im_);
        BigFloat ad = exact_mul(a.re_, b.im_), bc = exact_mul(a.im_, b.re_);
        t1 = mpfr_sub(z.re_.get(), ac.get(), bd.get(), MPFR_RNDN);
        t2 = mpfr_add(z.im_.get(), ad.get(), bc.get(), MPFR_RNDN);
    }
    if (!a.rad_.is_zero() || !b.rad_.is_zero()) {
        BigFloat e = rad_add(rad_mul(a.mid_abs_upper(), b.rad_), rad_mul(b.mid_abs_upper(), a.rad_));
        z.rad_ = rad_add(e, rad_mul(a.rad_, b.rad_));
    }
    add_rounding(z.rad_, z.re_, t1);
    add_rounding(z.rad_, z.im_, t2);
    return z;
}

ComplexBall ComplexBall::inv() const {
    long prec = precision();
    BigFloat m(kRadPrec);
    mpfr_hypot(m.get(), re_.get(), im_.get(), MPFR_RNDD);
    BigFloat gap(kRadPrec);
    mpfr_sub(gap.get(), m.get(), rad_.get(), MPFR_RNDD);
    if (gap.sign() <= 0) throw PrecisionExhausted("inverse of a complex ball containing zero");
    RealBall re = RealBall::from_mid_rad(re_, BigFloat(kRadPrec));
    RealBall im = RealBall::from_mid_rad(im_, BigFloat(kRadPrec));
    ComplexBall z;
    if (im_.is_zero()) {
        RealBall one(1);
        RealBall q = one / re;
        z = ComplexBall(q, RealBall());
    } else {
        RealBall n2 = re * re + im * im;
        RealBall qr = re / n2;
        RealBall qi = -(im / n2);
        z = ComplexBall(qr, qi);
    }
    (void)prec;
    if (!rad_.is_zero()) {
        BigFloat den(kRadPrec), extra(kRadPrec);
        mpfr_mul(den.get(), m.get(), gap.get(), MPFR_RNDD);
        mpfr_div(extra.get(), rad_.get(), den.get(), MPFR_RNDU);
        z.rad_ = rad_add(z.rad_, extra);
    }
    return z;
}

ComplexBall operator/(const ComplexBall& a, const ComplexBall& b) { return a * b.inv(); }

ComplexBall ComplexBall::pow(long n) const {
    if (n < 0) return pow(-n).inv();
    ComplexBall result(1);
    ComplexBall base = *this;
    while (n > 0) {
        if (n & 1) result = result * base;
        n >>= 1;
        if (n) base = base * base;
    }
    return result;
}

// ---------------------------------------------------------------- literals

mpq_class parse_rational(const std::string& raw) {
    std::string text;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) text.push_back(c);
    if (text.empty()) throw MalformedInput("empty rational literal");
    auto slash = text.find('/');
    try {
        if (slash != std::string::npos) {
            mpz_class num(text.substr(0, slash), 10);
            mpz_class den(text.substr(slash + 1), 10);
            if (den == 0) throw MalformedInput("zero denominator in '" + raw + "'");
            mpq_class q(num, den);
            q.canonicalize();
            return q;
        }
        std::string mant = text;
        long exp10 = 0;
        auto epos = text.find_first_of("eE");
        if (epos != std::string::npos) {
            mant = text.substr(0, epos);
            exp10 = std::stol(text.substr(epos + 1));
        }
        bool neg = false;
        if (!mant.empty() && (mant[0] == '-' || mant[0] == '+')) {
            neg = mant[0] == '-';
            mant = mant.substr(1);
        }
        auto dot = mant.find('.');
        std::string digits = mant;
        if (dot != std::string::npos) {
            digits = mant.substr(0, dot) + mant.substr(dot + 1);
            exp10 -= static_cast<long>(mant.size() - dot - 1);
        }
        if (digits.empty()) throw MalformedInput("bad rational literal '" + raw + "'");
        for (char c : digits)
            if (!std::isdigit(static_cast<unsigned char>(c))) throw MalformedInput("bad rational literal '" + raw + "'");
        mpz_class num(digits, 10);
        if (neg) num = -num;
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exp10 < 0 ? -exp10 : exp10));
        mpq_class q = exp10 >= 0 ? mpq_class(num * scale) : mpq_class(num, scale);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw MalformedInput("bad rational literal '" + raw + "'");
    }
}

std::string format_rational(const mpq_class& q) { return q.get_str(10); }

}  // namespace svt::num
