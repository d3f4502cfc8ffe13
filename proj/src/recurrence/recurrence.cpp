#include "svt/recurrence/recurrence.hpp"

#include "svt/numerics/linalg.hpp"

#include <type_traits>

namespace svt::rec {

namespace {

template <class F>
F from_q(const mpq_class& q, long prec) {
    if constexpr (std::is_same_v<F, ComplexBall>)
        return ComplexBall::from_mpq(q, prec);
    else
        return F(q);
}

template <class F>
F power(const F& x, long k) {
    F acc(1), base = x;
    while (k > 0) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

mpz_class binomial(long n, long k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

mpz_class factorial(long n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

template <class F>
bool same_node(const F& a, const F& b) {
    if constexpr (std::is_same_v<F, ComplexBall>) {
        if (a.overlaps(b)) throw PrecisionExhausted("nodes not certified distinct");
        return false;
    } else {
        return a == b;
    }
}

}  // namespace

template <class F>
RealBall abs_ball(const F& x, long prec) {
    if constexpr (std::is_same_v<F, ComplexBall>)
        return x.abs();
    else
        return x.abs(prec);
}

mpz_class falling_factorial(long i, int mu) {
    mpz_class r = 1;
    for (int k = 0; k < mu; ++k) r *= (i - k);
    return r;
}

template <class F>
int total_multiplicity(const std::vector<Node<F>>& nodes) {
    int m = 0;
    for (const auto& n : nodes) m += n.multiplicity;
    return m;
}

template <class F>
void check_nodes(const std::vector<Node<F>>& nodes) {
    if (nodes.empty()) throw PreconditionFailed("no nodes");
    for (size_t i = 0; i < nodes.size(); ++i) {
        if (nodes[i].multiplicity < 1) throw PreconditionFailed("multiplicities must be positive");
        for (size_t j = 0; j < i; ++j)
            if (same_node(nodes[i].alpha, nodes[j].alpha)) throw PreconditionFailed("repeated node");
    }
}

template <class F>
int RecurrenceData<F>::order() const {
    return total_multiplicity(nodes);
}

template <class F>
void RecurrenceData<F>::validate() const {
    check_nodes(nodes);
    if (coeffs.size() != nodes.size()) throw PreconditionFailed("one coefficient row per node");
    for (size_t nu = 0; nu < nodes.size(); ++nu)
        if ((int)coeffs[nu].size() != nodes[nu].multiplicity)
            throw PreconditionFailed("coefficient row length must equal the multiplicity");
}

template <class F>
std::vector<F> eval_recurrence(const RecurrenceData<F>& seq, long n, long prec) {
    seq.validate();
    std::vector<F> u;
    for (long i = 0; i < n; ++i) {
        F acc(0);
        for (size_t nu = 0; nu < seq.nodes.size(); ++nu)
            for (int mu = 0; mu < seq.nodes[nu].multiplicity; ++mu) {
                mpz_class ff = falling_factorial(i, mu);
                if (ff == 0) continue;  // i < mu
                F term = from_q<F>(mpq_class(ff), prec) * power(seq.nodes[nu].alpha, i - mu);
                acc = acc + seq.coeffs[nu][mu] * term;
            }
        u.push_back(acc);
    }
    return u;
}

template <class F>
RecoveryConstants recovery_constants(const std::vector<Node<F>>& nodes, long prec) {
    check_nodes(nodes);
    RecoveryConstants mb;
    const int n = static_cast<int>(nodes.size());
    mb.M = total_multiplicity(nodes);
    mpz_class best = 0;
    for (const auto& nd : nodes) best = std::max(best, binomial(mb.M, nd.multiplicity));
    RealBall prod(1), a(1);
    for (const auto& nd : nodes) {
        RealBall abs_a = abs_ball(nd.alpha, prec);
        prod = prod * num::pow(RealBall(1) + abs_a, nd.multiplicity);
        a = num::max(a, abs_a);
    }
    mb.a = a;
    mb.a0 = RealBall::from_mpz(best, prec) * prod;
    if (n == 1) {
        mb.a1 = RealBall(1);
        mb.a2 = RealBall(1);
    } else {
        std::optional<RealBall> a1, a2;
        for (int nu = 0; nu < n; ++nu) {
            RealBall p(1);
            for (int nu2 = 0; nu2 < n; ++nu2) {
                if (nu2 == nu) continue;
                RealBall d = abs_ball(F(nodes[nu2].alpha - nodes[nu].alpha), prec);
                p = p * num::pow(d, nodes[nu2].multiplicity);
                RealBall t = num::min(RealBall(1), num::pow(d, nodes[nu].multiplicity));
                a2 = a2 ? num::min(*a2, t) : t;
            }
            a1 = a1 ? num::min(*a1, p) : p;
        }
        mb.a1 = *a1;
        mb.a2 = *a2;
    }
    mb.bound = mb.a0 / (mb.a1 * mb.a2);
    mb.improved_ok = num::certainly_le(mb.a0, num::pow(RealBall(4) * a, mb.M));
    mb.classical_ok = num::certainly_lt(mb.a0, RealBall(2) * num::pow(RealBall(6) * a, mb.M));
    return mb;
}

template <class F>
num::Poly<F> truncated_inverse(const std::vector<Node<F>>& nodes, int mu, int nu, long prec) {
    using P = num::Poly<F>;
    if (nu < 0 || nu >= (int)nodes.size()) throw PreconditionFailed("node index out of range");
    if (mu < 0 || mu >= nodes[nu].multiplicity) throw PreconditionFailed("derivative index out of range");
    const F& an = nodes[nu].alpha;
    P g(F(1));
    for (int k = 0; k < (int)nodes.size(); ++k) {
        if (k == nu) continue;
        F inv = F(1) / (nodes[k].alpha - an);
        P lin(std::vector<F>{F(1), -inv});
        g = g * num::pow(lin, nodes[k].multiplicity);
    }
    (void)prec;
    return num::series_inverse(g, nodes[nu].multiplicity - mu);
}

template <class F>
num::Poly<F> certificate_poly(const std::vector<Node<F>>& nodes, int mu, int nu, long prec) {
    using P = num::Poly<F>;
    check_nodes(nodes);
    P a = truncated_inverse(nodes, mu, nu, prec);
    const F& an = nodes[nu].alpha;
    P shift(std::vector<F>{-an, F(1)});  // X - alpha_nu
    P c = from_q<F>(mpq_class(1, factorial(mu)), prec) * num::pow(shift, mu);
    for (int k = 0; k < (int)nodes.size(); ++k) {
        if (k == nu) continue;
        F inv = F(1) / (an - nodes[k].alpha);
        P lin(std::vector<F>{-nodes[k].alpha * inv, inv});  // (X - alpha_k) / (alpha_nu - alpha_k)
        c = c * num::pow(lin, nodes[k].multiplicity);
    }
    return a.compose(shift) * c;
}

namespace {

template <class F>
num::Matrix<F> vandermonde(const std::vector<Node<F>>& nodes, long prec) {
    const int M = total_multiplicity(nodes);
    num::Matrix<F> a(M, std::vector<F>(M, F(0)));
    for (int i = 0; i < M; ++i) {
        int col = 0;
        for (const auto& nd : nodes)
            for (int mu = 0; mu < nd.multiplicity; ++mu, ++col) {
                mpz_class ff = falling_factorial(i, mu);
                if (ff != 0) a[i][col] = from_q<F>(mpq_class(ff), prec) * power(nd.alpha, i - mu);
            }
    }
    return a;
}

}  // namespace

template <class F>
std::vector<std::vector<F>> recover_coefficients(const std::vector<F>& values, const std::vector<Node<F>>& nodes,
                                                 long prec) {
    check_nodes(nodes);
    const int M = total_multiplicity(nodes);
    if ((int)values.size() != M) throw PreconditionFailed("expected exactly M values");
    if constexpr (std::is_same_v<F, ComplexBall>) {
        // Refuse unless the system is certified nonsingular.
        ComplexBall det = num::determinant(vandermonde(nodes, prec));
        if (det.contains_zero()) throw PrecisionExhausted("determinant enclosure contains zero");
    }
    std::vector<std::vector<F>> out(nodes.size());
    for (int nu = 0; nu < (int)nodes.size(); ++nu)
        for (int mu = 0; mu < nodes[nu].multiplicity; ++mu) {
            num::Poly<F> b = certificate_poly(nodes, mu, nu, prec);
            F acc(0);
            for (int k = 0; k <= b.degree(); ++k) acc = acc + b.coeffs()[k] * values[k];
            out[nu].push_back(acc);
        }
    return out;
}

template <class F>
std::vector<std::vector<F>> recover_by_solve(const std::vector<F>& values, const std::vector<Node<F>>& nodes,
                                             long prec) {
    check_nodes(nodes);
    const int M = total_multiplicity(nodes);
    if ((int)values.size() != M) throw PreconditionFailed("expected exactly M values");
    std::vector<F> x = num::solve_square(vandermonde(nodes, prec), values);
    std::vector<std::vector<F>> out(nodes.size());
    int col = 0;
    for (int nu = 0; nu < (int)nodes.size(); ++nu)
        for (int mu = 0; mu < nodes[nu].multiplicity; ++mu) out[nu].push_back(x[col++]);
    return out;
}

template <class F>
RealBall length(const num::Poly<F>& p, long prec) {
    RealBall acc;
    for (const auto& c : p.coeffs()) acc = acc + abs_ball(c, prec);
    return acc;
}

BoundCheck check_recovery_bound(const std::vector<std::vector<GaussianRational>>& coeffs,
                                const std::vector<GaussianRational>& values,
                                const std::vector<Node<GaussianRational>>& nodes, PrecisionPolicy policy) {
    // Squared moduli are rational, so compare max|A|^2 / max|u|^2 against bound^2.
    mpq_class a2 = 0, u2 = 0;
    for (const auto& row : coeffs)
        for (const auto& c : row) a2 = std::max(a2, c.norm());
    for (const auto& v : values) u2 = std::max(u2, v.norm());
    BoundCheck res;
    if (sgn(u2) == 0) {
        res.decided = true;
        res.ok = sgn(a2) == 0;
        res.ratio = RealBall();
        return res;
    }
    mpq_class q = a2 / u2;
    for (long prec = policy.start; prec <= policy.cap; prec *= 2) {
        RecoveryConstants mb = recovery_constants(nodes, prec);
        RealBall lhs = RealBall::from_mpq(q, prec);
        RealBall rhs = mb.bound * mb.bound;
        res.ratio = num::sqrt(lhs) / mb.bound;
        if (num::certainly_le(lhs, rhs)) {
            res.decided = res.ok = true;
            return res;
        }
        if (num::certainly_lt(rhs, lhs)) {
            res.decided = true;
            return res;
        }
    }
    return res;
}

#define SVT_REC_INSTANTIATE(F)                                                                                   \
    template struct RecurrenceData<F>;                                                                            \
    template int total_multiplicity(const std::vector<Node<F>>&);                                                \
    template void check_nodes(const std::vector<Node<F>>&);                                                      \
    template std::vector<F> eval_recurrence(const RecurrenceData<F>&, long, long);                               \
    template RecoveryConstants recovery_constants(const std::vector<Node<F>>&, long);                                    \
    template num::Poly<F> certificate_poly(const std::vector<Node<F>>&, int, int, long);                         \
    template num::Poly<F> truncated_inverse(const std::vector<Node<F>>&, int, int, long);                        \
    template std::vector<std::vector<F>> recover_coefficients(const std::vector<F>&, const std::vector<Node<F>>&, \
                                                              long);                                             \
    template std::vector<std::vector<F>> recover_by_solve(const std::vector<F>&, const std::vector<Node<F>>&,     \
                                                          long);                                                 \
    template RealBall length(const num::Poly<F>&, long);                                                         \
    template RealBall abs_ball(const F&, long);

SVT_REC_INSTANTIATE(GaussianRational)
SVT_REC_INSTANTIATE(ComplexBall)

}  // namespace svt::rec
