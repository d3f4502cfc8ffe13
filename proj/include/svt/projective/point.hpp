#pragma once

#include "svt/numerics/ball.hpp"
#include "svt/numerics/error.hpp"
#include "svt/polyring/params.hpp"

#include <array>
#include <optional>
#include <vector>

namespace svt::proj {

using num::ComplexBall;
using num::RealBall;
using poly::TranslationParams;

using ExactTriple = std::array<mpq_class, 3>;
using BallTriple = std::array<ComplexBall, 3>;

// A point of P^2(C) kept as a representative.  Rational representatives stay exact;
// everything else is a triple of certified complex balls.
class ProjectivePoint {
public:
    static ProjectivePoint exact(const ExactTriple& z);
    static ProjectivePoint from_balls(const BallTriple& z);

    bool is_exact() const { return exact_.has_value(); }
    const ExactTriple& exact_coords() const;
    // Ball coordinates; exact points are converted at the requested precision.
    BallTriple balls(long prec) const;

    // max |z_k| of the stored representative.
    RealBall norm(long prec) const;
    std::optional<mpq_class> exact_norm() const;

    // Representative of max-norm 1.  Exact points divide by their largest coordinate,
    // so that coordinate becomes exactly 1.
    ProjectivePoint normalized(long prec = 128) const;
    bool normalized_flag() const { return normalized_; }

    // Index k with |z_k| = 1 on a normalized representative (smallest such index).
    int unit_index(long prec = 128) const;

    ProjectivePoint scaled(const mpq_class& c) const;

private:
    std::optional<ExactTriple> exact_;
    BallTriple balls_;
    bool normalized_ = false;
};

bool same_point(const ExactTriple& a, const ExactTriple& b);

// (1 : xi + i r : eta s^i) as stored, unnormalized.
ProjectivePoint gamma(const TranslationParams& params, long i, long prec = 128);

// ||a ^ b|| / (||a|| ||b||) with max norms.
RealBall dist(const ProjectivePoint& a, const ProjectivePoint& b, long prec = 128);
std::optional<mpq_class> dist_exact(const ProjectivePoint& a, const ProjectivePoint& b);
RealBall dist_to_set(const ProjectivePoint& a, const std::vector<ProjectivePoint>& set, long prec = 128);

ExactTriple wedge(const ExactTriple& a, const ExactTriple& b);
BallTriple wedge(const BallTriple& a, const BallTriple& b);

// tau^j(x : y : z) = (x : y + j r x : s^j z).
ProjectivePoint tau_pow(const ProjectivePoint& p, long j, const TranslationParams& params, long prec = 128);
ProjectivePoint tau_pow(const ProjectivePoint& p, long j, const mpq_class& r, const mpq_class& s, long prec = 128);

// h_abs(1, q) = log max(|num q|, den q).
RealBall log_height(const mpq_class& q, long prec);

struct ConstantsTable {
    mpq_class c;  // max of the infinity norms of tau, tau^-1, wedge^2 tau, wedge^2 tau^-1
    RealBall c1;
    RealBall c4;
    RealBall c_prime;
};

ConstantsTable translation_constants(const mpq_class& r, const mpq_class& s, long prec = 128);
inline ConstantsTable translation_constants(const TranslationParams& params, long prec = 128) {
    return translation_constants(params.r, params.s, prec);
}

// Infinity norm (max row sum) of the four matrices, exposed for the tests.
std::array<mpq_class, 4> operator_norms(const mpq_class& r, const mpq_class& s);

}  // namespace svt::proj
