#pragma once

#include "svt/numerics/number_field.hpp"
#include "svt/polyring/homogeneous.hpp"
#include "svt/polyring/params.hpp"
#include "svt/projective/point.hpp"

#include <string>
#include <vector>

namespace svt::interp {

using num::ComplexBall;
using num::RealBall;
using poly::BallForm;
using poly::QForm;
using poly::TranslationParams;
using proj::ProjectivePoint;

using NfForm = poly::HomogeneousPoly<num::NfElem>;

// Q_0..Q_{M-1} of degree L with Q_j(gamma_i) = delta_ij, M = C(L+2, 2).
struct DualBasis {
    int L = 0;
    int M = 1;
    bool exact = false;
    std::vector<QForm> exact_polys;   // filled when xi, eta are rational
    std::vector<BallForm> ball_polys;  // always filled
    RealBall bound;                    // B(L): L(Q) <= B(L) max |Q(gamma_i)|
    std::vector<RealBall> lengths;     // L(Q_j)
};

// c = max(1, (1 + |xi|)/|r|, 1/|eta|), so that L(Q) <= c^L L(P) under the change of variables.
RealBall change_constant(const TranslationParams& params, long prec = 128);

// The explicit bound B(L) = c^L M L! a0/(a1 a2) with the recurrence constants for
// alpha_nu = s^nu, m_nu = L - nu + 1.
RealBall interpolation_bound(int L, const TranslationParams& params, long prec = 128);

// (c2 L)^(3L), with the value 1 at L = 0.
mpz_class c2_power(long c2, int L);

// Smallest power of two c2 >= 3 with B(L) <= (c2 L)^(3L) for 1 <= L <= lmax.
long derive_c2(const TranslationParams& params, int lmax = 12, long prec = 128);

// Monomial-basis route: inverts the evaluation matrix at gamma_0..gamma_{M-1}.
DualBasis dual_basis(int L, const TranslationParams& params, long prec = 128);
// Falling-factorial route through coefficient recovery of recurrence sequences.
DualBasis dual_basis_falling(int L, const TranslationParams& params, long prec = 128);

// Q_j(gamma_i) = delta_ij: exact for rational parameters, by enclosure otherwise.
bool kronecker_holds(const DualBasis& basis, const TranslationParams& params, long prec = 128);

struct Interpolant {
    bool exact = false;
    QForm exact_poly;
    BallForm ball_poly;
    RealBall length;
    RealBall bound;  // B(L) max |values|
    bool certified = false;
};

Interpolant interpolate(const std::vector<mpq_class>& values, int L, const TranslationParams& params,
                        long prec = 128);
Interpolant interpolate(const std::vector<ComplexBall>& values, int L, const TranslationParams& params,
                        long prec = 128);

// Basis of the degree-D forms vanishing at gamma_0..gamma_{T-1}.
struct IdealSlice {
    int D = 0;
    int T = 0;
    bool certified = true;
    std::vector<QForm> exact;   // rational parameters
    num::FieldPtr field;        // algebraic parameters: coefficients in this field
    std::vector<NfForm> nf;
    std::vector<BallForm> ball;  // ball parameters (not certified)
    int dimension() const;
};

IdealSlice ideal_slice_basis(int D, int T, const TranslationParams& params, long prec = 128);

struct InterpolationConstants {
    RealBall change;
    long c2 = 4;
    RealBall c_gamma;  // ||gamma_i|| <= c_gamma |s|^i for i >= 0
    RealBall c3;
};

InterpolationConstants derive_constants(const TranslationParams& params, long prec = 128);

struct ChainEntry {
    std::string name;
    RealBall lhs, rhs;
    bool ok = false;
};

struct SeparationCertificate {
    int i = 0;  // index maximizing |a_j Q_j(alpha)|
    int k = 0;  // coordinate with |alpha_k| = 1
    int L = 0;
    int M = 1;
    bool inside = false;  // i < T
    int linear_form = -1;  // which E was used (0, 1, 2) when inside
    bool trivial = false;  // alpha lies on the orbit segment
    bool exact = false;
    QForm exact_poly;
    BallForm ball_poly;
    std::vector<ChainEntry> chain;
    RealBall value;        // |P(alpha)| / ||P||, a lower bound for the ideal-slice sup
    RealBall orbit_dist;   // dist(alpha, {gamma_0, ..., gamma_{T-1}})
    bool verified() const;
};

SeparationCertificate separation_certificate(const ProjectivePoint& alpha, int D, int T,
                                             const TranslationParams& params, const InterpolationConstants& consts,
                                             long prec = 128);

}  // namespace svt::interp
