#include "svt/construction/construction.hpp"

#include <cmath>

namespace svt::cons {

namespace {

using LD = long double;

LD to_ld(const mpz_class& z) {
    long e = 0;
    double d = mpz_get_d_2exp(&e, z.get_mpz_t());
    return std::ldexp(static_cast<LD>(d), static_cast<int>(e));
}

mpz_class round_to_mpz(LD x) {
    LD r = std::round(x);
    if (std::fabs(r) < 9.0e18L) return mpz_class(static_cast<long>(r));
    int e = 0;
    LD mant = std::frexp(r, &e);  // r = mant 2^e, 0.5 <= |mant| < 1
    mpz_class z(static_cast<long>(std::ldexp(mant, 62)));
    if (e > 62)
        z <<= (e - 62);
    else
        z >>= (62 - e);
    return z;
}

// Four independent accumulators; the sums are latency bound otherwise.
LD dot4(const LD* a, const LD* b, size_t n) {
    LD s0 = 0, s1 = 0, s2 = 0, s3 = 0;
    size_t c = 0;
    for (; c + 4 <= n; c += 4) {
        s0 += a[c] * b[c];
        s1 += a[c + 1] * b[c + 1];
        s2 += a[c + 2] * b[c + 2];
        s3 += a[c + 3] * b[c + 3];
    }
    for (; c < n; ++c) s0 += a[c] * b[c];
    return (s0 + s1) + (s2 + s3);
}

struct Gso {
    std::vector<std::vector<mpz_class>>& b;
    std::vector<std::vector<LD>> bf, mu, r;
    std::vector<LD> norm2, norm;

    explicit Gso(std::vector<std::vector<mpz_class>>& basis) : b(basis) {
        const size_t n = b.size();
        bf.resize(n);
        mu.assign(n, std::vector<LD>(n, 0));
        r.assign(n, std::vector<LD>(n, 0));
        norm2.assign(n, 0);
        norm.assign(n, 0);
        for (size_t i = 0; i < n; ++i) refresh(i);
    }

    void refresh(size_t i) {
        bf[i].resize(b[i].size());
        for (size_t c = 0; c < b[i].size(); ++c) bf[i][c] = to_ld(b[i][c]);
        norm2[i] = dot4(bf[i].data(), bf[i].data(), bf[i].size());
        norm[i] = std::sqrt(norm2[i]);
    }

    void swap_rows(size_t i, size_t j) {
        std::swap(b[i], b[j]);
        std::swap(bf[i], bf[j]);
        std::swap(norm2[i], norm2[j]);
        std::swap(norm[i], norm[j]);
    }

    // Floating dot product, recomputed exactly when cancellation is visible.
    LD dot(size_t i, size_t j) const {
        LD s = dot4(bf[i].data(), bf[j].data(), bf[i].size());
        if (std::fabs(s) < 1e-10L * norm[i] * norm[j]) {
            mpz_class e = 0;
            for (size_t c = 0; c < b[i].size(); ++c) mpz_addmul(e.get_mpz_t(), b[i][c].get_mpz_t(), b[j][c].get_mpz_t());
            return to_ld(e);
        }
        return s;
    }

    void row(size_t k) {
        for (size_t j = 0; j < k; ++j) {
            LD v = dot(k, j) - dot4(mu[j].data(), r[k].data(), j);
            r[k][j] = v;
            mu[k][j] = r[j][j] > 0 ? v / r[j][j] : 0;
        }
        r[k][k] = norm2[k] - dot4(mu[k].data(), r[k].data(), k);
    }
};

}  // namespace

namespace {

bool reduce_pass(std::vector<std::vector<mpz_class>>& basis, LD delta, long& budget) {
    const size_t n = basis.size();
    Gso g(basis);
    g.row(0);
    size_t k = 1;
    while (k < n) {
        if (--budget < 0) return false;
        // Size reduction, repeated while the floating coefficients keep moving.
        g.row(k);
        for (int pass = 0; pass < 20; ++pass) {
            bool changed = false;
            for (size_t jj = k; jj-- > 0;) {
                if (std::fabs(g.mu[k][jj]) <= 0.51L) continue;
                mpz_class x = round_to_mpz(g.mu[k][jj]);
                LD xf = to_ld(x);
                for (size_t c = 0; c < basis[k].size(); ++c)
                    mpz_submul(basis[k][c].get_mpz_t(), x.get_mpz_t(), basis[jj][c].get_mpz_t());
                for (size_t i = 0; i < jj; ++i) g.mu[k][i] -= xf * g.mu[jj][i];
                g.mu[k][jj] -= xf;
                changed = true;
            }
            if (!changed) break;
            g.refresh(k);
            g.row(k);
        }
        LD lhs = delta * g.r[k - 1][k - 1];
        LD rhs = g.r[k][k] + g.mu[k][k - 1] * g.mu[k][k - 1] * g.r[k - 1][k - 1];
        if (lhs > rhs) {
            g.swap_rows(k, k - 1);
            if (k == 1) {
                g.row(0);
            } else {
                --k;
            }
        } else {
            ++k;
        }
    }
    return true;
}

}  // namespace

bool lll_reduce(std::vector<std::vector<mpz_class>>& basis, double delta, long max_iterations) {
    if (basis.size() < 2) return true;
    long budget = max_iterations;
    // A cheap pass at 3/4 first; the final pass at delta then starts from a nearly reduced basis.
    if (delta > 0.75 && !reduce_pass(basis, 0.75L, budget)) return false;
    return reduce_pass(basis, static_cast<LD>(delta), budget);
}

}  // namespace svt::cons
