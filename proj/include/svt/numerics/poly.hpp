#pragma once

#include "svt/numerics/ball.hpp"
#include "svt/numerics/error.hpp"

#include <gmpxx.h>

#include <tuple>
#include <type_traits>
#include <utility>
#include <vector>

namespace svt::num {

inline bool is_zero(const mpz_class& x) { return sgn(x) == 0; }
inline bool is_zero(const mpq_class& x) { return sgn(x) == 0; }

template <class R>
class Poly;
template <class R>
bool is_zero(const Poly<R>& p);

template <class R>
bool coeff_is_zero(const R& a) {
    return is_zero(a);
}

// Dense univariate polynomial, coefficients stored low degree first.
// The zero polynomial has an empty coefficient vector and degree -1.
template <class R>
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<R> coeffs) : c_(std::move(coeffs)) { trim(); }
    Poly(const R& constant) {  // NOLINT: implicit lift of scalars
        if (!coeff_is_zero(constant)) c_.push_back(constant);
    }

    static Poly monomial(const R& a, int k) {
        std::vector<R> v(k + 1, R(0));
        v[k] = a;
        return Poly(std::move(v));
    }
    // The polynomial X.
    static Poly x() { return monomial(R(1), 1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    R coeff(int i) const { return (i >= 0 && i < (int)c_.size()) ? c_[i] : R(0); }
    const R& lead() const { return c_.back(); }
    const std::vector<R>& coeffs() const { return c_; }

    void set_coeff(int i, const R& a) {
        if ((int)c_.size() <= i) c_.resize(i + 1, R(0));
        c_[i] = a;
        trim();
    }

    template <class T>
    T eval(const T& x) const {
        if (c_.empty()) return T(0);
        T acc = lift<T>(c_.back());
        for (int i = (int)c_.size() - 2; i >= 0; --i) acc = acc * x + lift<T>(c_[i]);
        return acc;
    }

    R operator()(const R& x) const { return eval<R>(x); }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<R> v(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * R(static_cast<long>(i));
        return Poly(std::move(v));
    }

    // p(q(X)).
    Poly compose(const Poly& q) const {
        Poly acc;
        for (int i = degree(); i >= 0; --i) acc = acc * q + Poly(c_[i]);
        return acc;
    }

    Poly operator-() const {
        Poly r = *this;
        for (auto& a : r.c_) a = -a;
        return r;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<R> v(std::max(a.c_.size(), b.c_.size()), R(0));
        for (size_t i = 0; i < a.c_.size(); ++i) v[i] = a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) v[i] = v[i] + b.c_[i];
        return Poly(std::move(v));
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<R> v(std::max(a.c_.size(), b.c_.size()), R(0));
        for (size_t i = 0; i < a.c_.size(); ++i) v[i] = a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) v[i] = v[i] - b.c_[i];
        return Poly(std::move(v));
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<R> v(a.c_.size() + b.c_.size() - 1, R(0));
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (coeff_is_zero(a.c_[i])) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] = v[i + j] + a.c_[i] * b.c_[j];
        }
        return Poly(std::move(v));
    }
    friend Poly operator*(const R& s, const Poly& p) {
        std::vector<R> v(p.c_.size());
        for (size_t i = 0; i < v.size(); ++i) v[i] = s * p.c_[i];
        return Poly(std::move(v));
    }
    Poly& operator+=(const Poly& b) { return *this = *this + b; }
    Poly& operator-=(const Poly& b) { return *this = *this - b; }
    Poly& operator*=(const Poly& b) { return *this = *this * b; }

    friend bool operator==(const Poly& a, const Poly& b) {
        if (a.c_.size() != b.c_.size()) return false;
        for (size_t i = 0; i < a.c_.size(); ++i)
            if (!(a.c_[i] == b.c_[i])) return false;
        return true;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    void trim() {
        while (!c_.empty() && coeff_is_zero(c_.back())) c_.pop_back();
    }

private:
    template <class T>
    static T lift(const R& a) {
        if constexpr (std::is_same_v<T, R>) {
            return a;
        } else {
            return T(a);
        }
    }

    std::vector<R> c_;
};

template <class R>
bool is_zero(const Poly<R>& p) {
    return p.is_zero();
}

template <class R>
Poly<R> pow(const Poly<R>& p, unsigned k) {
    Poly<R> result(R(1)), base = p;
    while (k) {
        if (k & 1) result = result * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return result;
}

// Division with remainder over a field.
template <class R>
std::pair<Poly<R>, Poly<R>> divmod(const Poly<R>& a, const Poly<R>& b) {
    if (b.is_zero()) throw PreconditionFailed("polynomial division by zero");
    std::vector<R> rem = a.coeffs();
    int db = b.degree();
    if (a.degree() < db) return {Poly<R>(), a};
    std::vector<R> q(a.degree() - db + 1, R(0));
    R inv_lead = R(1) / b.lead();
    for (int i = a.degree(); i >= db; --i) {
        if (is_zero(rem[i])) continue;
        R f = rem[i] * inv_lead;
        q[i - db] = f;
        for (int j = 0; j <= db; ++j) rem[i - db + j] = rem[i - db + j] - f * b.coeff(j);
    }
    rem.resize(db);
    return {Poly<R>(std::move(q)), Poly<R>(std::move(rem))};
}

template <class R>
Poly<R> operator%(const Poly<R>& a, const Poly<R>& b) {
    return divmod(a, b).second;
}

template <class R>
Poly<R> monic(const Poly<R>& p) {
    if (p.is_zero()) return p;
    R inv = R(1) / p.lead();
    return inv * p;
}

// Monic gcd over a field.
template <class R>
Poly<R> gcd(Poly<R> a, Poly<R> b) {
    while (!b.is_zero()) {
        Poly<R> r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

// Returns (g, s, t) with s*a + t*b = g, g monic.
template <class R>
std::tuple<Poly<R>, Poly<R>, Poly<R>> ext_gcd(const Poly<R>& a, const Poly<R>& b) {
    Poly<R> r0 = a, r1 = b, s0(R(1)), s1, t0, t1(R(1));
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Poly<R> s2 = s0 - q * s1, t2 = t0 - q * t1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    R inv = R(1) / r0.lead();
    return {inv * r0, inv * s0, inv * t0};
}

// Truncated power-series inverse: returns b with a*b = 1 mod X^n.  Requires a(0) invertible.
template <class R>
Poly<R> series_inverse(const Poly<R>& a, int n) {
    if (is_zero(a.coeff(0))) throw PreconditionFailed("series inverse of a series without constant term");
    std::vector<R> b(std::max(n, 0), R(0));
    if (n <= 0) return Poly<R>();
    R inv0 = R(1) / a.coeff(0);
    b[0] = inv0;
    for (int k = 1; k < n; ++k) {
        R acc(0);
        for (int j = 1; j <= k && j <= a.degree(); ++j) acc = acc + a.coeff(j) * b[k - j];
        b[k] = -(acc * inv0);
    }
    return Poly<R>(std::move(b));
}

template <class R>
Poly<R> truncate(const Poly<R>& a, int n) {
    std::vector<R> v;
    for (int i = 0; i < n && i <= a.degree(); ++i) v.push_back(a.coeff(i));
    return Poly<R>(std::move(v));
}

// Exact division of scalars in an integral domain.
inline mpz_class exact_div(const mpz_class& a, const mpz_class& b) {
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}
inline mpq_class exact_div(const mpq_class& a, const mpq_class& b) { return a / b; }

// Exact division a/b of polynomials over an integral domain whose scalars support exact_div.
template <class R>
Poly<R> exact_div(const Poly<R>& a, const Poly<R>& b) {
    if (b.is_zero()) throw PreconditionFailed("exact division by zero polynomial");
    if (a.is_zero()) return a;
    int db = b.degree();
    if (a.degree() < db) throw PreconditionFailed("inexact polynomial division");
    std::vector<R> rem = a.coeffs();
    std::vector<R> q(a.degree() - db + 1, R(0));
    for (int i = a.degree(); i >= db; --i) {
        if (is_zero(rem[i])) continue;
        R f = exact_div(rem[i], b.lead());
        q[i - db] = f;
        for (int j = 0; j <= db; ++j) rem[i - db + j] = rem[i - db + j] - f * b.coeff(j);
    }
    for (int i = 0; i < db; ++i)
        if (!is_zero(rem[i])) throw PreconditionFailed("inexact polynomial division");
    return Poly<R>(std::move(q));
}

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b.
template <class R>
Poly<R> pseudo_rem(const Poly<R>& a, const Poly<R>& b) {
    if (b.is_zero()) throw PreconditionFailed("pseudo-remainder by zero");
    std::vector<R> rem = a.coeffs();
    int db = b.degree();
    if (a.degree() < db) return a;
    const R& lb = b.lead();
    for (int i = a.degree(); i >= db; --i) {
        R f = rem[i];
        for (auto& x : rem) x = x * lb;
        if (is_zero(f)) continue;
        for (int j = 0; j <= db; ++j) rem[i - db + j] = rem[i - db + j] - f * b.coeff(j);
    }
    rem.resize(db);
    return Poly<R>(std::move(rem));
}

// Determinant by fraction-free elimination over an integral domain.
template <class R>
R bareiss_det(std::vector<std::vector<R>> m) {
    const size_t n = m.size();
    if (n == 0) return R(1);
    R prev(1);
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (is_zero(m[k][k])) {
            size_t piv = k + 1;
            while (piv < n && is_zero(m[piv][k])) ++piv;
            if (piv == n) return R(0);
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                R t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = exact_div(t, prev);
            }
            m[i][k] = R(0);
        }
        prev = m[k][k];
    }
    R d = m[n - 1][n - 1];
    return sign < 0 ? R(-d) : d;
}

// Resultant via the Sylvester determinant (integral-domain coefficients).
template <class R>
R resultant(const Poly<R>& f, const Poly<R>& g) {
    if (f.is_zero() || g.is_zero()) return R(0);
    int m = f.degree(), n = g.degree();
    if (m == 0 && n == 0) return R(1);
    if (m == 0) {
        R r(1);
        for (int i = 0; i < n; ++i) r = r * f.lead();
        return r;
    }
    if (n == 0) {
        R r(1);
        for (int i = 0; i < m; ++i) r = r * g.lead();
        return r;
    }
    int size = m + n;
    std::vector<std::vector<R>> s(size, std::vector<R>(size, R(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) s[i][i + j] = f.coeff(m - j);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) s[n + i][i + j] = g.coeff(n - j);
    return bareiss_det(std::move(s));
}

}  // namespace svt::num
