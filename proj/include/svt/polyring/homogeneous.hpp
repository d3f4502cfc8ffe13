#pragma once

#include "svt/numerics/ball.hpp"
#include "svt/numerics/error.hpp"
#include "svt/numerics/poly.hpp"

#include <array>
#include <vector>

namespace svt::poly {

using num::ComplexBall;
using num::RealBall;

struct Exponent {
    int e0, e1, e2;
};

// Number of monomials of degree d in three variables.
inline int monomial_count(int d) { return d < 0 ? 0 : (d + 1) * (d + 2) / 2; }

// Graded-lex position (X0 > X1 > X2) of X0^(d-e1-e2) X1^e1 X2^e2 among degree-d monomials.
inline int monomial_index(int e1, int e2) {
    int k = e1 + e2;
    return k * (k + 1) / 2 + e2;
}

inline Exponent monomial_at(int d, int idx) {
    int k = 0;
    while ((k + 1) * (k + 2) / 2 <= idx) ++k;
    int e2 = idx - k * (k + 1) / 2;
    int e1 = k - e2;
    return {d - k, e1, e2};
}

inline mpq_class coeff_abs(const mpq_class& c) { return abs(c); }
inline RealBall coeff_abs(const ComplexBall& c) { return c.abs(); }
inline mpq_class larger(const mpq_class& a, const mpq_class& b) { return a < b ? b : a; }
inline RealBall larger(const RealBall& a, const RealBall& b) { return num::max(a, b); }

// Homogeneous polynomial of degree D in X0, X1, X2 with dense graded-lex coefficient storage.
template <class C>
class HomogeneousPoly {
public:
    HomogeneousPoly() : HomogeneousPoly(0) {}
    explicit HomogeneousPoly(int degree) : d_(degree), c_(monomial_count(degree), C(0)) {
        if (degree < 0) throw PreconditionFailed("negative degree");
    }

    static HomogeneousPoly monomial(const C& a, int e0, int e1, int e2) {
        HomogeneousPoly p(e0 + e1 + e2);
        p.set(e1, e2, a);
        return p;
    }
    static HomogeneousPoly variable(int k) {
        return monomial(C(1), k == 0 ? 1 : 0, k == 1 ? 1 : 0, k == 2 ? 1 : 0);
    }
    static HomogeneousPoly constant(const C& a) { return monomial(a, 0, 0, 0); }

    int degree() const { return d_; }
    int size() const { return static_cast<int>(c_.size()); }
    const C& coeff(int e1, int e2) const { return c_[monomial_index(e1, e2)]; }
    const C& at(int idx) const { return c_[idx]; }
    void set(int e1, int e2, const C& a) { c_[monomial_index(e1, e2)] = a; }
    void set_at(int idx, const C& a) { c_[idx] = a; }
    const std::vector<C>& coeffs() const { return c_; }

    bool is_zero() const {
        for (const auto& a : c_)
            if (!num::coeff_is_zero(a)) return false;
        return true;
    }

    // Largest power of X0 (resp. X2) dividing the polynomial; -1 for zero.
    int x0_valuation() const { return valuation(0); }
    int x2_valuation() const { return valuation(2); }

    auto norm() const {
        using A = decltype(coeff_abs(std::declval<C>()));
        A best(0);
        for (const auto& a : c_) best = larger(best, coeff_abs(a));
        return best;
    }
    auto length() const {
        using A = decltype(coeff_abs(std::declval<C>()));
        A sum(0);
        for (const auto& a : c_) sum = sum + coeff_abs(a);
        return sum;
    }

    // Evaluation at x, converting coefficients with conv.
    template <class T, class Conv>
    T eval(const std::array<T, 3>& x, Conv conv) const {
        std::array<std::vector<T>, 3> pw;
        for (int k = 0; k < 3; ++k) {
            pw[k].push_back(T(1));
            for (int e = 1; e <= d_; ++e) pw[k].push_back(pw[k].back() * x[k]);
        }
        T acc(0);
        for (int idx = 0; idx < size(); ++idx) {
            if (num::coeff_is_zero(c_[idx])) continue;
            Exponent e = monomial_at(d_, idx);
            acc = acc + conv(c_[idx]) * pw[0][e.e0] * pw[1][e.e1] * pw[2][e.e2];
        }
        return acc;
    }
    C eval(const std::array<C, 3>& x) const {
        return eval<C>(x, [](const C& a) { return a; });
    }

    template <class C2, class Conv>
    HomogeneousPoly<C2> map(Conv conv) const {
        HomogeneousPoly<C2> out(d_);
        for (int idx = 0; idx < size(); ++idx) out.set_at(idx, conv(c_[idx]));
        return out;
    }

    HomogeneousPoly operator-() const {
        HomogeneousPoly r = *this;
        for (auto& a : r.c_) a = -a;
        return r;
    }
    friend HomogeneousPoly operator+(const HomogeneousPoly& a, const HomogeneousPoly& b) {
        a.require_same_degree(b);
        HomogeneousPoly r = a;
        for (int i = 0; i < r.size(); ++i) r.c_[i] = r.c_[i] + b.c_[i];
        return r;
    }
    friend HomogeneousPoly operator-(const HomogeneousPoly& a, const HomogeneousPoly& b) {
        a.require_same_degree(b);
        HomogeneousPoly r = a;
        for (int i = 0; i < r.size(); ++i) r.c_[i] = r.c_[i] - b.c_[i];
        return r;
    }
    friend HomogeneousPoly operator*(const HomogeneousPoly& a, const HomogeneousPoly& b) {
        HomogeneousPoly r(a.d_ + b.d_);
        for (int i = 0; i < a.size(); ++i) {
            if (num::coeff_is_zero(a.c_[i])) continue;
            Exponent ea = monomial_at(a.d_, i);
            for (int j = 0; j < b.size(); ++j) {
                if (num::coeff_is_zero(b.c_[j])) continue;
                Exponent eb = monomial_at(b.d_, j);
                int k = monomial_index(ea.e1 + eb.e1, ea.e2 + eb.e2);
                r.c_[k] = r.c_[k] + a.c_[i] * b.c_[j];
            }
        }
        return r;
    }
    friend HomogeneousPoly operator*(const C& s, const HomogeneousPoly& p) {
        HomogeneousPoly r = p;
        for (auto& a : r.c_) a = s * a;
        return r;
    }
    friend bool operator==(const HomogeneousPoly& a, const HomogeneousPoly& b) {
        if (a.d_ != b.d_) return false;
        for (int i = 0; i < a.size(); ++i)
            if (!(a.c_[i] == b.c_[i])) return false;
        return true;
    }
    friend bool operator!=(const HomogeneousPoly& a, const HomogeneousPoly& b) { return !(a == b); }

private:
    void require_same_degree(const HomogeneousPoly& b) const {
        if (d_ != b.d_) throw PreconditionFailed("adding forms of different degrees");
    }

    int valuation(int var) const {
        int best = -1;
        for (int idx = 0; idx < size(); ++idx) {
            if (num::coeff_is_zero(c_[idx])) continue;
            Exponent e = monomial_at(d_, idx);
            int v = var == 0 ? e.e0 : (var == 1 ? e.e1 : e.e2);
            if (best < 0 || v < best) best = v;
        }
        return best;
    }

    int d_;
    std::vector<C> c_;
};

template <class C>
HomogeneousPoly<C> pow(const HomogeneousPoly<C>& p, int k) {
    HomogeneousPoly<C> r = HomogeneousPoly<C>::constant(C(1));
    for (int i = 0; i < k; ++i) r = r * p;
    return r;
}

using QForm = HomogeneousPoly<mpq_class>;
using BallForm = HomogeneousPoly<ComplexBall>;

// Coefficient-wise ball image of a rational form.
inline BallForm to_ball_form(const QForm& p, long prec) {
    return p.map<ComplexBall>([prec](const mpq_class& c) { return ComplexBall::from_mpq(c, prec); });
}

inline std::array<ComplexBall, 3> to_ball_point(const std::array<mpq_class, 3>& x, long prec) {
    return {ComplexBall::from_mpq(x[0], prec), ComplexBall::from_mpq(x[1], prec), ComplexBall::from_mpq(x[2], prec)};
}

}  // namespace svt::poly
