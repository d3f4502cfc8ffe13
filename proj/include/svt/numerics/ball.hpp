#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <algorithm>
#include <optional>
#include <string>

namespace svt::num {

// Owning wrapper around an mpfr_t.
class BigFloat {
public:
    explicit BigFloat(mpfr_prec_t prec = 64);
    BigFloat(const BigFloat& other);
    BigFloat(BigFloat&& other) noexcept;
    BigFloat& operator=(const BigFloat& other);
    BigFloat& operator=(BigFloat&& other) noexcept;
    ~BigFloat();

    static BigFloat from_si(long v, mpfr_prec_t prec = 64);
    static BigFloat from_mpz(const mpz_class& v, mpfr_prec_t prec, mpfr_rnd_t rnd);
    static BigFloat from_mpq(const mpq_class& v, mpfr_prec_t prec, mpfr_rnd_t rnd);
    static BigFloat from_double(double v);
    // Accepts any mpfr_strtofr syntax (including hex "0x1.8p+1").  Throws on junk.
    static BigFloat parse(const std::string& text, mpfr_prec_t prec);

    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }
    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }

    int sign() const { return mpfr_sgn(v_); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    double to_double(mpfr_rnd_t rnd = MPFR_RNDN) const { return mpfr_get_d(v_, rnd); }
    // Exact conversion; the value must be finite.
    mpq_class to_mpq() const;

    std::string to_hex() const;
    std::string to_decimal(int digits, mpfr_rnd_t rnd) const;

    friend int compare(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_); }
    friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
    friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }

private:
    mpfr_t v_;
};

// Precision used for all radius arithmetic (always rounded upwards).
inline constexpr mpfr_prec_t kRadPrec = 64;

// Real ball [mid - rad, mid + rad].
class RealBall {
public:
    RealBall();
    explicit RealBall(long v);

    static RealBall from_mpz(const mpz_class& v, long prec);
    static RealBall from_mpq(const mpq_class& v, long prec);
    static RealBall from_mid_rad(BigFloat mid, BigFloat rad);
    static RealBall from_interval(const BigFloat& lo, const BigFloat& hi, long prec);
    static RealBall log2_const(long prec);
    static RealBall pi_const(long prec);

    const BigFloat& mid() const { return mid_; }
    const BigFloat& rad() const { return rad_; }
    long precision() const { return mid_.precision(); }

    BigFloat lower() const;
    BigFloat upper() const;

    bool is_exact() const { return rad_.is_zero(); }
    bool contains_zero() const;
    bool contains(const RealBall& inner) const;
    bool overlaps(const RealBall& other) const;
    bool certainly_positive() const { return lower().sign() > 0; }
    bool certainly_negative() const { return upper().sign() < 0; }

    double to_double() const { return mid_.to_double(); }
    // Adds extra uncertainty to the radius.
    RealBall widened(const BigFloat& extra) const;

    RealBall operator-() const;
    friend RealBall operator+(const RealBall& a, const RealBall& b);
    friend RealBall operator-(const RealBall& a, const RealBall& b);
    friend RealBall operator*(const RealBall& a, const RealBall& b);
    friend RealBall operator/(const RealBall& a, const RealBall& b);
    RealBall& operator+=(const RealBall& b) { return *this = *this + b; }
    RealBall& operator-=(const RealBall& b) { return *this = *this - b; }
    RealBall& operator*=(const RealBall& b) { return *this = *this * b; }
    RealBall& operator/=(const RealBall& b) { return *this = *this / b; }

    RealBall inv() const;

private:
    BigFloat mid_;
    BigFloat rad_{kRadPrec};
};

RealBall abs(const RealBall& x);
RealBall max(const RealBall& a, const RealBall& b);
RealBall min(const RealBall& a, const RealBall& b);
RealBall sqrt(const RealBall& x);
RealBall exp(const RealBall& x);
// Throws PreconditionFailed unless x is certainly positive.
RealBall log(const RealBall& x);
RealBall pow(const RealBall& x, long n);
// x^y for x certainly positive.
RealBall pow(const RealBall& x, const RealBall& y);

// Sound order tests: true only when the enclosures prove the relation.
bool certainly_lt(const RealBall& a, const RealBall& b);
bool certainly_le(const RealBall& a, const RealBall& b);

// Logarithm that maps enclosures touching zero to a -infinity sentinel.
struct LogValue {
    bool minus_infinity = false;
    RealBall value;
};
LogValue log_or_neg_inf(const RealBall& x);

// Complex disk {z : |z - mid| <= rad}.
class ComplexBall {
public:
    ComplexBall();
    explicit ComplexBall(long re);
    ComplexBall(const RealBall& re, const RealBall& im);

    static ComplexBall from_mid_rad(BigFloat re, BigFloat im, BigFloat rad);
    static ComplexBall from_mpq(const mpq_class& re, long prec);
    static ComplexBall from_mpq(const mpq_class& re, const mpq_class& im, long prec);

    const BigFloat& re_mid() const { return re_; }
    const BigFloat& im_mid() const { return im_; }
    const BigFloat& rad() const { return rad_; }
    long precision() const { return std::max(re_.precision(), im_.precision()); }

    RealBall real() const;
    RealBall imag() const;
    RealBall abs() const;
    // Upper bound for |mid|.
    BigFloat mid_abs_upper() const;

    bool is_exact() const { return rad_.is_zero(); }
    bool is_exact_zero() const { return rad_.is_zero() && re_.is_zero() && im_.is_zero(); }
    bool contains_zero() const;
    bool contains(const ComplexBall& inner) const;
    bool overlaps(const ComplexBall& other) const;
    bool disjoint(const ComplexBall& other) const { return !overlaps(other); }

    ComplexBall midpoint() const;
    ComplexBall widened(const BigFloat& extra) const;
    ComplexBall conj() const;
    ComplexBall operator-() const;
    ComplexBall inv() const;
    ComplexBall pow(long n) const;

    friend ComplexBall operator+(const ComplexBall& a, const ComplexBall& b);
    friend ComplexBall operator-(const ComplexBall& a, const ComplexBall& b);
    friend ComplexBall operator*(const ComplexBall& a, const ComplexBall& b);
    friend ComplexBall operator/(const ComplexBall& a, const ComplexBall& b);
    ComplexBall& operator+=(const ComplexBall& b) { return *this = *this + b; }
    ComplexBall& operator-=(const ComplexBall& b) { return *this = *this - b; }
    ComplexBall& operator*=(const ComplexBall& b) { return *this = *this * b; }
    ComplexBall& operator/=(const ComplexBall& b) { return *this = *this / b; }

    friend ComplexBall operator*(const RealBall& a, const ComplexBall& b) { return ComplexBall(a, RealBall()) * b; }

private:
    BigFloat re_, im_;
    BigFloat rad_{kRadPrec};
};

// Coefficient-domain hooks shared with exact types.
inline bool is_zero(const ComplexBall& z) { return z.is_exact_zero(); }
inline bool is_zero(const RealBall& x) { return x.is_exact() && x.mid().is_zero(); }

// Exact 2^e.
BigFloat pow2(long e, mpfr_prec_t prec = kRadPrec);

// Parses an exact decimal or fraction literal: "12", "-3/7", "1.25", "2.5e-3".
mpq_class parse_rational(const std::string& text);
std::string format_rational(const mpq_class& q);

}  // namespace svt::num
