#pragma once

#include "svt/numerics/ball.hpp"
#include "svt/numerics/error.hpp"
#include "svt/numerics/gaussian.hpp"
#include "svt/numerics/poly.hpp"

#include <vector>

namespace svt::rec {

using num::ComplexBall;
using num::GaussianRational;
using num::RealBall;

// Linear recurrence sequences u_i = sum A[nu][mu] i^(mu) alpha_nu^(i - mu).
// F is GaussianRational (exact) or ComplexBall (certified).
template <class F>
struct Node {
    F alpha;
    int multiplicity = 1;
};

template <class F>
struct RecurrenceData {
    std::vector<Node<F>> nodes;
    std::vector<std::vector<F>> coeffs;  // coeffs[nu][mu], 0 <= mu < m_nu

    int order() const;  // M
    void validate() const;
};

template <class F>
int total_multiplicity(const std::vector<Node<F>>& nodes);

// Throws PreconditionFailed on repeated nodes (exact) and PrecisionExhausted when two ball
// nodes cannot be certified distinct.
template <class F>
void check_nodes(const std::vector<Node<F>>& nodes);

// i^(mu) = i (i - 1) ... (i - mu + 1), with i^(0) = 1.
mpz_class falling_factorial(long i, int mu);

template <class F>
std::vector<F> eval_recurrence(const RecurrenceData<F>& seq, long n, long prec = 128);

struct RecoveryConstants {
    int M = 0;
    RealBall a0, a1, a2;
    RealBall bound;  // a0 / (a1 a2)
    RealBall a;      // max(1, |alpha_nu|)
    bool improved_ok = false;  // a0 <= (4a)^M, certified
    bool classical_ok = false;    // a0 < 2 (6a)^M, certified
};

template <class F>
RecoveryConstants recovery_constants(const std::vector<Node<F>>& nodes, long prec = 128);

// b(X) = a(X - alpha_nu) c(X), the polynomial with A[nu][mu] = (b(tau) u)_0.
template <class F>
num::Poly<F> certificate_poly(const std::vector<Node<F>>& nodes, int mu, int nu, long prec = 128);

// Truncated inverse a(X) of prod_{nu' != nu} (1 - X / (alpha_nu' - alpha_nu))^m_nu' mod X^(m_nu - mu).
template <class F>
num::Poly<F> truncated_inverse(const std::vector<Node<F>>& nodes, int mu, int nu, long prec = 128);

// Coefficient recovery through the certificate polynomials.
template <class F>
std::vector<std::vector<F>> recover_coefficients(const std::vector<F>& values, const std::vector<Node<F>>& nodes,
                                                 long prec = 128);

// Same coefficients from the M x M confluent Vandermonde system; independent route.
template <class F>
std::vector<std::vector<F>> recover_by_solve(const std::vector<F>& values, const std::vector<Node<F>>& nodes,
                                             long prec = 128);

// Sum of |b_k| as a ball.
template <class F>
RealBall length(const num::Poly<F>& p, long prec = 128);

template <class F>
RealBall abs_ball(const F& x, long prec);

// Certified max|A| <= bound * max|u|.  Precision is escalated up to the policy cap; returns
// false if the comparison fails or stays undecided.
struct BoundCheck {
    bool ok = false;
    bool decided = false;
    RealBall ratio;  // max|A| / (bound max|u|), or 0 when u vanishes
};
BoundCheck check_recovery_bound(const std::vector<std::vector<GaussianRational>>& coeffs,
                                const std::vector<GaussianRational>& values,
                                const std::vector<Node<GaussianRational>>& nodes, PrecisionPolicy policy = {});

}  // namespace svt::rec
