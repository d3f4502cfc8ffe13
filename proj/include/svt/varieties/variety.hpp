#pragma once

#include "svt/numerics/number_field.hpp"
#include "svt/polyring/homogeneous.hpp"
#include "svt/polyring/params.hpp"
#include "svt/projective/point.hpp"

#include <array>
#include <utility>
#include <vector>

namespace svt::var {

using num::ComplexBall;
using num::NfElem;
using num::RealBall;
using poly::QForm;

// The Galois orbit of a point of P^2 with coordinates in Q(theta).
struct ZeroDimVariety {
    num::FieldPtr field;
    std::array<NfElem, 3> coords;  // coords[k] == 1
    int k = 0;
    int degree = 1;
    QForm chow;          // primitive integer form in (u0, u1, u2) of degree n
    mpz_class content;   // a with F(L) = a prod L(sigma_i(alpha)), a > 0
    RealBall height;     // log ||F||
    RealBall weil;       // h_abs

    // sigma_i(alpha) for the conjugates of theta, in conjugate_embeddings order.
    std::vector<proj::BallTriple> conjugate_points(long prec) const;
};

// coords are polynomials in a root theta of minpoly.
ZeroDimVariety variety_from_point(const num::ZPoly& minpoly, const std::array<num::QPoly, 3>& coords,
                                  long prec = 128);
ZeroDimVariety variety_from_elements(const num::FieldPtr& field, const std::array<NfElem, 3>& coords,
                                     long prec = 128);
ZeroDimVariety variety_from_rational(const proj::ExactTriple& z, long prec = 128);

// prod_i (u0 a0_i + u1 a1_i + u2 a2_i) over the conjugates, with rational coefficients.
QForm norm_form(const num::FieldPtr& field, const std::array<NfElem, 3>& coords);

// Scaled to a primitive integer form, first nonzero coefficient (graded-lex) positive.
QForm primitive_form(const QForm& f);

bool same_variety(const ZeroDimVariety& a, const ZeroDimVariety& b);

struct WeilReport {
    RealBall h_abs;
    RealBall gap;  // |h(Z)/n - h_abs|
    bool height_gap_ok = false;
};

WeilReport weil_height(const ZeroDimVariety& z, long prec = 128);

struct TranslateReport {
    ZeroDimVariety image;
    bool same_degree = false;
    RealBall lhs;  // |h(tau^i Z) - h(Z)|
    RealBall rhs;  // c4 |i| deg Z
    bool height_change_ok = false;
};

TranslateReport translate_variety(const ZeroDimVariety& z, long i, const poly::TranslationParams& params,
                                  long prec = 128);

struct SeparationBound {
    RealBall sum;    // sum of log dist over the chosen pairs
    RealBall bound;  // -7 d d* - d h* - d* h
    bool verified = false;
};

// pairs index the conjugate points of z and zs (conjugate_points order).
SeparationBound separation_lower_bound(const ZeroDimVariety& z, const ZeroDimVariety& zs,
                                       const std::vector<std::pair<int, int>>& pairs, long prec = 128);

struct SolveReport {
    std::vector<ZeroDimVariety> varieties;
    int total_degree = 0;
    RealBall total_height;
    RealBall height_bound;  // D log||P|| + D log||Q|| + C D^2 on primitive integer representatives
    long slack = 10;
    bool degree_ok = false;
    bool height_ok = false;
};

// Common zeros of two coprime forms of the same degree, split into varieties.
SolveReport zero_dim_solve(const QForm& p, const QForm& q, long slack = 10, long prec = 128);

// P(L0, L1, L2) for linear forms L0, L1, L2.
QForm substitute_linear(const QForm& p, const std::array<QForm, 3>& lin);

}  // namespace svt::var
