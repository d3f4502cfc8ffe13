#pragma once

#include "svt/construction/construction.hpp"
#include "svt/interpolation/interpolation.hpp"
#include "svt/varieties/variety.hpp"

#include <json.hpp>

#include <string>

namespace svt::io {

using json = nlohmann::ordered_json;

// Enclosures go out as {inf, sup} decimal strings rounded outwards.
json ball_json(const num::RealBall& x, int digits = 20);
json complex_json(const num::ComplexBall& z);  // {re, im, rad} in hex dyadic
json rational_json(const mpq_class& q);

json form_json(const poly::QForm& f);  // [{e0, e1, e2, coeff}] in graded-lex order
json ball_form_json(const poly::BallForm& f);
json bipoly_json(const poly::BiPoly& p);  // [{e1, e2, coeff}]
json zpoly_json(const num::ZPoly& p);     // coefficient strings, constant term first
json chain_json(const std::vector<interp::ChainEntry>& chain);
json variety_json(const var::ZeroDimVariety& z, long prec = 128);
json aux_json(const cons::AuxSearchResult& r);
// Rationals as strings; algebraic numbers as {minpoly, box, degree}.
json scalar_json(const poly::Scalar& x);
json params_json(const poly::TranslationParams& p);

// Field readers; errors name the offending path.
mpq_class read_rational(const json& j, const std::string& path);
long read_integer(const json& j, const std::string& path);
poly::Scalar read_scalar(const json& j, const std::string& path);
// {xi, eta, r, s[, m]}; xi and eta are rational strings or {minpoly: [...], approx: "..."[, approx_im: "..."]}.
poly::TranslationParams params_from_json(const json& j, const std::string& path = "params");
poly::QForm form_from_json(const json& j, const std::string& path);

// Pretty-printed with a trailing newline.
std::string dump(const json& j);

// Writes to a sibling temporary and renames over the target.
void write_atomic(const std::string& path, const std::string& content);

}  // namespace svt::io
