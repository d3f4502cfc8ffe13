#pragma once

#include "svt/numerics/factor.hpp"
#include "svt/polyring/homogeneous.hpp"

namespace svt::poly {

using num::QPoly;
// Polynomial in X2 whose coefficients are polynomials in X1: sum_j p_j(X1) X2^j.
using BiPoly = num::Poly<QPoly>;

BiPoly bi_monomial(const mpq_class& c, int e1, int e2);
const mpq_class bi_coeff(const BiPoly& p, int e1, int e2);
int total_degree(const BiPoly& p);
int x2_valuation(const BiPoly& p);
int x1_valuation(const BiPoly& p);
bool has_integer_coeffs(const BiPoly& p);
BiPoly bi_scale(const mpq_class& c, const BiPoly& p);

// X0 = 1.
BiPoly dehomogenize(const QForm& p);
// X0^(d - deg) * p(X1/X0, X2/X0); d >= total degree.
QForm homogenize(const BiPoly& p, int d);

// Content over Q[X1] and gcd in Q[X1][X2], normalized so the leading coefficient's leading
// coefficient is 1.
QPoly bi_content(const BiPoly& p);
BiPoly bi_primitive(const BiPoly& p);
BiPoly bi_gcd(const BiPoly& a, const BiPoly& b);
BiPoly bi_normalize(const BiPoly& p);

// Gcd of two forms (including the common power of X0), normalized as above.
QForm form_gcd(const QForm& a, const QForm& b);

// Exact quotient of forms; throws when b does not divide a.
QForm form_div(const QForm& a, const QForm& b);

}  // namespace svt::poly
