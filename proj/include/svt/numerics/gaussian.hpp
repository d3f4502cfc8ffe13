#pragma once

#include "svt/numerics/ball.hpp"
#include "svt/numerics/poly.hpp"

#include <gmpxx.h>

#include <string>

namespace svt::num {

// Element of Q(i).
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(long re) : re_(re) {}  // NOLINT
    GaussianRational(const mpq_class& re) : re_(re) {}  // NOLINT
    GaussianRational(const mpq_class& re, const mpq_class& im) : re_(re), im_(im) {}

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    // |z|^2, always rational.
    mpq_class norm() const { return re_ * re_ + im_ * im_; }
    GaussianRational conj() const { return {re_, -im_}; }
    bool is_real() const { return sgn(im_) == 0; }

    ComplexBall to_ball(long prec) const { return ComplexBall::from_mpq(re_, im_, prec); }
    // |z| as a ball; exact when |z|^2 is the square of a rational.
    RealBall abs(long prec) const;

    GaussianRational operator-() const { return {-re_, -im_}; }
    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re_ + b.re_, a.im_ + b.im_};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re_ - b.re_, a.im_ - b.im_};
    }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b);
    GaussianRational& operator+=(const GaussianRational& b) { return *this = *this + b; }
    GaussianRational& operator-=(const GaussianRational& b) { return *this = *this - b; }
    GaussianRational& operator*=(const GaussianRational& b) { return *this = *this * b; }
    GaussianRational& operator/=(const GaussianRational& b) { return *this = *this / b; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    std::string to_string() const;

private:
    mpq_class re_{0}, im_{0};
};

inline bool is_zero(const GaussianRational& z) { return sgn(z.re()) == 0 && sgn(z.im()) == 0; }
inline GaussianRational exact_div(const GaussianRational& a, const GaussianRational& b) { return a / b; }

// Exact square root of a nonnegative rational when it exists.
std::optional<mpq_class> rational_sqrt(const mpq_class& q);

}  // namespace svt::num
