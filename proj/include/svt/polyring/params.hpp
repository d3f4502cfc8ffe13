#pragma once

#include "svt/numerics/algebraic.hpp"
#include "svt/numerics/ball.hpp"

#include <gmpxx.h>

#include <optional>
#include <string>
#include <variant>

namespace svt::poly {

// A coordinate value: exact rational, algebraic number, or a certified ball.
using Scalar = std::variant<mpq_class, num::AlgebraicNumber, num::ComplexBall>;

num::ComplexBall scalar_ball(const Scalar& x, long prec);
bool scalar_is_rational(const Scalar& x);
bool scalar_is_exact(const Scalar& x);
// True when the value is known to be real (rational, real algebraic, or ball with zero imaginary part).
bool scalar_is_real(const Scalar& x, long prec = 128);
std::string scalar_to_string(const Scalar& x);

// The data (xi, eta, r, s, m) defining the orbit points (1 : xi + i r : eta s^i).
struct TranslationParams {
    Scalar xi = mpq_class(0);
    Scalar eta = mpq_class(1);
    mpq_class r = 1;
    mpq_class s = 2;
    mpz_class m = 2;

    // Validates and fills m (smallest positive integer with m r and m/s integral when absent).
    static TranslationParams make(Scalar xi, Scalar eta, const mpq_class& r, const mpq_class& s,
                                  std::optional<mpz_class> m = std::nullopt);

    bool rational() const { return scalar_is_rational(xi) && scalar_is_rational(eta); }
    bool exact() const { return scalar_is_exact(xi) && scalar_is_exact(eta); }
    const mpq_class& xi_q() const;
    const mpq_class& eta_q() const;
    num::ComplexBall xi_ball(long prec) const { return scalar_ball(xi, prec); }
    num::ComplexBall eta_ball(long prec) const { return scalar_ball(eta, prec); }
};

mpz_class default_multiplier(const mpq_class& r, const mpq_class& s);

}  // namespace svt::poly
