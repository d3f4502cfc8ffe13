#pragma once

#include "svt/numerics/ball.hpp"
#include "svt/polyring/bivariate.hpp"
#include "svt/polyring/params.hpp"
#include "svt/varieties/variety.hpp"

#include <optional>
#include <string>
#include <vector>

namespace svt::cons {

using num::RealBall;
using poly::BiPoly;
using poly::QPoly;
using poly::QForm;
using poly::TranslationParams;

enum class Region { theorem, dirichlet, gap, invalid };
std::string region_name(Region r);

struct ParamRegion {
    mpq_class sigma, beta, nu;
    Region classification = Region::invalid;
};

// Exact classification of (sigma, beta, nu).
ParamRegion parameter_region(const mpq_class& sigma, const mpq_class& beta, const mpq_class& nu);

// Integer LLL reduction of the rows; floating Gram-Schmidt in long double with exact
// integer row operations.  Returns false when the iteration budget runs out.
bool lll_reduce(std::vector<std::vector<mpz_class>>& basis, double delta = 0.99, long max_iterations = 2000000);

enum class SearchStatus { found, infeasible, unresolved };
std::string status_name(SearchStatus s);

// The three inequalities deg P <= D, ||P|| <= e^(D^beta), max_{i < 4 floor(D^sigma)} |P(gamma_i)| <= e^(-D^nu).
struct AuxCertificate {
    bool degree_ok = false;
    bool norm_ok = false;
    bool value_ok = false;
    bool decided = false;      // false when some comparison stayed ambiguous at this precision
    bool exact_zero = false;   // P vanishes exactly at every point
    RealBall log_norm;         // log ||P||
    RealBall log_value;        // log max |P(gamma_i)|, meaningless when exact_zero
    RealBall norm_margin;      // D^beta - log ||P||
    RealBall value_margin;     // -D^nu - log max |P(gamma_i)|
    bool ok() const { return degree_ok && norm_ok && value_ok; }
};

AuxCertificate certify_aux(const BiPoly& p, int D, const mpq_class& sigma, const mpq_class& beta,
                           const mpq_class& nu, const TranslationParams& params, long prec);

struct AuxSearchResult {
    SearchStatus status = SearchStatus::unresolved;
    BiPoly poly;
    AuxCertificate certificate;
    int D = 0;
    long points = 0;
    int monomials = 0;
    int kernel_dim = -1;  // exact kernel dimension when the points are exact
    Region region = Region::invalid;
    std::string note;
};

AuxSearchResult dirichlet_search(int D, const mpq_class& sigma, const mpq_class& beta, const mpq_class& nu,
                                 const TranslationParams& params, long prec = 128);

// prod_{0 <= i < count} m^i L(X1 - r i, X2 s^-i) for L = c0 + c1 X1 + c2 X2.
BiPoly product_counterexample(const BiPoly& linear, long count, const TranslationParams& params);

struct WitnessReport {
    // Affine common zeros only; tau fixes the line X0 = 0 setwise, so zeros there carry no
    // information about (1 : xi : eta) and are only counted.
    std::vector<var::ZeroDimVariety> varieties;
    int at_infinity = 0;
    // Minimal polynomials of X1/X0 and X2/X0 per variety.
    std::vector<std::pair<num::ZPoly, num::ZPoly>> minpolys;
    int match = -1;  // variety whose point enclosure meets (1, xi, eta), -1 when none
    bool vanishing_checked = false;  // P(gamma_i) = 0 for 0 <= i <= D, exactly or by enclosure
    bool empty() const { return varieties.empty(); }
};

// Common zeros of P, Phi P, ..., Phi^D P.
WitnessReport algebraicity_witness(const QForm& p, const TranslationParams& params, int dcheck, long prec = 128);

struct DyadicWindow {
    int j = 0;
    mpq_class sum;    // sum of delta over |t - m| < 2^j
    mpq_class bound;  // -2^(j+1) B
    bool ok = false;
};

struct DyadicResult {
    long m = 0;
    std::vector<DyadicWindow> windows;
    bool ok() const;
};

struct DyadicInstance {
    std::vector<std::pair<long, mpq_class>> pairs;  // (t, delta), delta <= 0
    mpq_class B;
    int k = 0;
};

DyadicResult dyadic_select(const DyadicInstance& instance);

}  // namespace svt::cons
