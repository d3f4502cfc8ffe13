#include "svt/numerics/factor.hpp"

#include "svt/numerics/error.hpp"

#include <algorithm>
#include <cstdint>
#include <random>

namespace svt::num {

mpz_class content(const ZPoly& f) {
    mpz_class g = 0;
    for (const auto& c : f.coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

ZPoly primitive_part(const ZPoly& f) {
    if (f.is_zero()) return f;
    mpz_class g = content(f);
    if (sgn(f.lead()) < 0) g = -g;
    std::vector<mpz_class> v;
    for (const auto& c : f.coeffs()) v.push_back(exact_div(c, g));
    return ZPoly(std::move(v));
}

ZPoly to_primitive_z(const QPoly& f) {
    mpz_class l = 1;
    for (const auto& c : f.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    std::vector<mpz_class> v;
    for (const auto& c : f.coeffs()) {
        mpq_class s = c * l;
        v.push_back(s.get_num());
    }
    return primitive_part(ZPoly(std::move(v)));
}

QPoly to_q(const ZPoly& f) {
    std::vector<mpq_class> v;
    for (const auto& c : f.coeffs()) v.emplace_back(c);
    return QPoly(std::move(v));
}

mpz_class max_norm(const ZPoly& f) {
    mpz_class m = 0;
    for (const auto& c : f.coeffs())
        if (abs(c) > m) m = abs(c);
    return m;
}

mpz_class one_norm(const ZPoly& f) {
    mpz_class m = 0;
    for (const auto& c : f.coeffs()) m += abs(c);
    return m;
}

std::vector<std::pair<ZPoly, int>> squarefree_decomposition(const ZPoly& f) {
    std::vector<std::pair<ZPoly, int>> out;
    if (f.degree() < 1) return out;
    QPoly a = monic(to_q(f));
    QPoly da = a.derivative();
    QPoly b = gcd(a, da);
    QPoly c = divmod(a, b).first;
    QPoly d = divmod(da, b).first - c.derivative();
    for (int i = 1; c.degree() > 0; ++i) {
        QPoly g = gcd(c, d);
        if (g.degree() > 0) out.emplace_back(to_primitive_z(g), i);
        c = divmod(c, g).first;
        d = divmod(d, g).first - c.derivative();
    }
    return out;
}

ZPoly squarefree_part(const ZPoly& f) {
    if (f.degree() < 1) return ZPoly(mpz_class(1));
    QPoly a = to_q(f);
    QPoly g = gcd(a, a.derivative());
    return to_primitive_z(divmod(a, g).first);
}

bool is_squarefree(const ZPoly& f) {
    if (f.degree() < 1) return true;
    QPoly a = to_q(f);
    return gcd(a, a.derivative()).degree() == 0;
}

namespace {

// ---- polynomials over Z/p, p an odd prime below 2^31

using u64 = std::uint64_t;
using PPoly = std::vector<u64>;

void ptrim(PPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

u64 powmod_u(u64 b, u64 e, u64 p) {
    u64 r = 1;
    b %= p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

u64 inv_u(u64 a, u64 p) { return powmod_u(a, p - 2, p); }

PPoly reduce(const ZPoly& f, u64 p) {
    PPoly v;
    for (const auto& c : f.coeffs()) v.push_back(mpz_fdiv_ui(c.get_mpz_t(), p));
    ptrim(v);
    return v;
}

PPoly psub(const PPoly& a, const PPoly& b, u64 p) {
    PPoly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + p - b[i]) % p;
    ptrim(r);
    return r;
}

PPoly pmul(const PPoly& a, const PPoly& b, u64 p) {
    if (a.empty() || b.empty()) return {};
    PPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    ptrim(r);
    return r;
}

std::pair<PPoly, PPoly> pdivmod(PPoly a, const PPoly& b, u64 p) {
    if (a.size() < b.size()) return {{}, a};
    u64 inv = inv_u(b.back(), p);
    size_t db = b.size() - 1;
    PPoly q(a.size() - db, 0);
    for (size_t i = a.size(); i-- > db;) {
        u64 f = a[i] * inv % p;
        q[i - db] = f;
        if (!f) continue;
        for (size_t j = 0; j <= db; ++j) a[i - db + j] = (a[i - db + j] + p - f * b[j] % p) % p;
    }
    a.resize(db);
    ptrim(a);
    ptrim(q);
    return {q, a};
}

PPoly pmonic(PPoly a, u64 p) {
    if (a.empty()) return a;
    u64 inv = inv_u(a.back(), p);
    for (auto& c : a) c = c * inv % p;
    return a;
}

PPoly pgcd(PPoly a, PPoly b, u64 p) {
    while (!b.empty()) {
        PPoly r = pdivmod(a, b, p).second;
        a = std::move(b);
        b = std::move(r);
    }
    return pmonic(a, p);
}

// s*a + t*b = 1 for coprime a, b.
void pext_gcd(const PPoly& a, const PPoly& b, u64 p, PPoly& s, PPoly& t) {
    PPoly r0 = a, r1 = b, s0{1}, s1, t0, t1{1};
    while (!r1.empty()) {
        auto [q, r] = pdivmod(r0, r1, p);
        r0 = std::move(r1);
        r1 = std::move(r);
        PPoly s2 = psub(s0, pmul(q, s1, p), p), t2 = psub(t0, pmul(q, t1, p), p);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    u64 inv = inv_u(r0.back(), p);
    for (auto& c : s0) c = c * inv % p;
    for (auto& c : t0) c = c * inv % p;
    s = s0;
    t = t0;
}

PPoly ppowmod(PPoly base, const mpz_class& e, const PPoly& mod, u64 p) {
    PPoly r{1};
    base = pdivmod(base, mod, p).second;
    size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (size_t i = bits; i-- > 0;) {
        r = pdivmod(pmul(r, r, p), mod, p).second;
        if (mpz_tstbit(e.get_mpz_t(), i)) r = pdivmod(pmul(r, base, p), mod, p).second;
    }
    return r;
}

PPoly pderiv(const PPoly& a, u64 p) {
    PPoly r;
    for (size_t i = 1; i < a.size(); ++i) r.push_back(a[i] * (i % p) % p);
    ptrim(r);
    return r;
}

// Distinct-degree factorization of a monic squarefree polynomial.
std::vector<std::pair<PPoly, int>> ddf(PPoly f, u64 p) {
    std::vector<std::pair<PPoly, int>> out;
    PPoly x{0, 1};
    PPoly h = x;
    mpz_class pz(static_cast<unsigned long>(p));
    for (int i = 1; 2 * i <= (int)f.size() - 1; ++i) {
        h = ppowmod(h, pz, f, p);
        PPoly g = pgcd(psub(h, x, p), f, p);
        if (g.size() > 1) {
            out.emplace_back(g, i);
            f = pdivmod(f, g, p).first;
            h = pdivmod(h, f, p).second;
        }
    }
    if (f.size() > 1) out.emplace_back(pmonic(f, p), (int)f.size() - 1);
    return out;
}

// Equal-degree splitting with random splitting polynomials.
void edf(const PPoly& g, int d, u64 p, std::mt19937_64& rng, std::vector<PPoly>& out) {
    int n = (int)g.size() - 1;
    if (n == d) {
        out.push_back(g);
        return;
    }
    mpz_class e;
    mpz_ui_pow_ui(e.get_mpz_t(), p, d);
    e = (e - 1) / 2;
    std::uniform_int_distribution<u64> dist(0, p - 1);
    for (;;) {
        PPoly a(n);
        for (auto& c : a) c = dist(rng);
        ptrim(a);
        if (a.size() < 2) continue;
        PPoly b = ppowmod(a, e, g, p);
        b = psub(b, PPoly{1}, p);
        PPoly c = pgcd(b, g, p);
        if (c.size() > 1 && c.size() < g.size()) {
            edf(c, d, p, rng, out);
            edf(pmonic(pdivmod(g, c, p).first, p), d, p, rng, out);
            return;
        }
    }
}

// ---- integer polynomials modulo m

ZPoly zmod(const ZPoly& f, const mpz_class& m) {
    std::vector<mpz_class> v;
    for (const auto& c : f.coeffs()) {
        mpz_class r;
        mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
        v.push_back(r);
    }
    return ZPoly(std::move(v));
}

ZPoly symmod(const ZPoly& f, const mpz_class& m) {
    mpz_class half = m / 2;
    std::vector<mpz_class> v;
    for (const auto& c : f.coeffs()) {
        mpz_class r;
        mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
        if (r > half) r -= m;
        v.push_back(r);
    }
    return ZPoly(std::move(v));
}

// Division by a monic polynomial modulo m.
std::pair<ZPoly, ZPoly> zdivmod_monic(const ZPoly& a, const ZPoly& h, const mpz_class& m) {
    std::vector<mpz_class> rem = a.coeffs();
    int dh = h.degree();
    if (a.degree() < dh) return {ZPoly(), zmod(a, m)};
    std::vector<mpz_class> q(a.degree() - dh + 1, 0);
    for (int i = a.degree(); i >= dh; --i) {
        mpz_class f;
        mpz_fdiv_r(f.get_mpz_t(), rem[i].get_mpz_t(), m.get_mpz_t());
        q[i - dh] = f;
        if (f == 0) continue;
        for (int j = 0; j <= dh; ++j) rem[i - dh + j] -= f * h.coeff(j);
    }
    rem.resize(dh);
    return {zmod(ZPoly(std::move(q)), m), zmod(ZPoly(std::move(rem)), m)};
}

ZPoly from_p(const PPoly& a) {
    std::vector<mpz_class> v;
    for (u64 c : a) v.emplace_back(static_cast<unsigned long>(c));
    return ZPoly(std::move(v));
}

// One quadratic Hensel step: f = g h mod m, s g + t h = 1 mod m, h monic  ->  same relations mod m^2.
void hensel_step(const mpz_class& m, const ZPoly& f, ZPoly& g, ZPoly& h, ZPoly& s, ZPoly& t) {
    mpz_class mm = m * m;
    ZPoly e = zmod(f - g * h, mm);
    auto [q, r] = zdivmod_monic(zmod(s * e, mm), h, mm);
    ZPoly g2 = zmod(g + t * e + q * g, mm);
    ZPoly h2 = zmod(h + r, mm);
    ZPoly b = zmod(s * g2 + t * h2 - ZPoly(mpz_class(1)), mm);
    auto [c, d] = zdivmod_monic(zmod(s * b, mm), h2, mm);
    s = zmod(s - d, mm);
    t = zmod(t - t * b - c * g2, mm);
    g = std::move(g2);
    h = std::move(h2);
}

// Lifts f = lc(f) * prod(facs) mod p to monic factors modulo target = p^(2^k).
void lift_tree(const ZPoly& f, const std::vector<PPoly>& facs, u64 p, const mpz_class& target,
               std::vector<ZPoly>& out) {
    if (facs.size() == 1) {
        mpz_class inv;
        mpz_class lc;
        mpz_fdiv_r(lc.get_mpz_t(), f.lead().get_mpz_t(), target.get_mpz_t());
        mpz_invert(inv.get_mpz_t(), lc.get_mpz_t(), target.get_mpz_t());
        out.push_back(zmod(inv * f, target));
        return;
    }
    size_t half = facs.size() / 2;
    std::vector<PPoly> first(facs.begin(), facs.begin() + half), second(facs.begin() + half, facs.end());
    PPoly g0{mpz_fdiv_ui(f.lead().get_mpz_t(), p)};
    for (const auto& a : first) g0 = pmul(g0, a, p);
    PPoly h0{1};
    for (const auto& a : second) h0 = pmul(h0, a, p);
    PPoly s0, t0;
    pext_gcd(g0, h0, p, s0, t0);
    ZPoly g = from_p(g0), h = from_p(h0), s = from_p(s0), t = from_p(t0);
    mpz_class m(static_cast<unsigned long>(p));
    while (m < target) {
        hensel_step(m, f, g, h, s, t);
        m *= m;
    }
    lift_tree(g, first, p, target, out);
    lift_tree(h, second, p, target, out);
}

std::vector<PPoly> factor_mod_p(const PPoly& f, u64 p) {
    std::mt19937_64 rng(0x5eedULL + p);
    std::vector<PPoly> out;
    for (const auto& [g, d] : ddf(pmonic(f, p), p)) edf(g, d, p, rng, out);
    std::sort(out.begin(), out.end(), [](const PPoly& a, const PPoly& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
    });
    return out;
}

int count_factors_mod_p(const PPoly& f, u64 p) {
    int count = 0;
    for (const auto& [g, d] : ddf(pmonic(f, p), p)) count += ((int)g.size() - 1) / d;
    return count;
}

bool next_combination(std::vector<int>& idx, int n) {
    int k = static_cast<int>(idx.size());
    for (int i = k - 1; i >= 0; --i) {
        if (idx[i] < n - k + i) {
            ++idx[i];
            for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace

std::vector<ZPoly> factor_squarefree(const ZPoly& f0) {
    ZPoly f = primitive_part(f0);
    const int n = f.degree();
    if (n < 1) throw PreconditionFailed("factoring a constant polynomial");
    if (n == 1) return {f};

    // Pick a prime keeping f squarefree, preferring the fewest modular factors.
    u64 best_p = 0;
    int best_count = 0;
    int tried = 0;
    mpz_class pz = 2;
    while (tried < 5) {
        mpz_nextprime(pz.get_mpz_t(), pz.get_mpz_t());
        if (pz > mpz_class(2147483647UL)) break;
        u64 p = pz.get_ui();
        if (mpz_divisible_ui_p(f.lead().get_mpz_t(), p)) continue;
        PPoly fp = reduce(f, p);
        if (pgcd(fp, pderiv(fp, p), p).size() != 1) continue;
        int c = count_factors_mod_p(fp, p);
        ++tried;
        if (best_p == 0 || c < best_count) {
            best_p = p;
            best_count = c;
        }
        if (c == 1) break;
    }
    if (best_p == 0) throw PreconditionFailed("no usable prime for factorization");
    if (best_count == 1) return {f};

    const u64 p = best_p;
    std::vector<PPoly> modular = factor_mod_p(reduce(f, p), p);

    // Factor coefficient bound: sqrt(n+1) 2^n |f|_inf lc(f).
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), mpz_class(n + 1).get_mpz_t());
    root += 1;
    mpz_class bound = root * max_norm(f) * abs(f.lead());
    mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), n);
    mpz_class target(static_cast<unsigned long>(p));
    while (target <= 2 * bound) target *= target;

    std::vector<ZPoly> lifted;
    lift_tree(f, modular, p, target, lifted);

    std::vector<ZPoly> result;
    std::vector<int> remaining(lifted.size());
    for (size_t i = 0; i < lifted.size(); ++i) remaining[i] = static_cast<int>(i);
    ZPoly cur = f;
    int s = 1;
    while (2 * s <= (int)remaining.size()) {
        bool found = false;
        std::vector<int> idx(s);
        for (int i = 0; i < s; ++i) idx[i] = i;
        do {
            mpz_class b = cur.lead();
            ZPoly g(b), h(b);
            std::vector<bool> in(remaining.size(), false);
            for (int i : idx) in[i] = true;
            for (size_t i = 0; i < remaining.size(); ++i) {
                if (in[i])
                    g = zmod(g * lifted[remaining[i]], target);
                else
                    h = zmod(h * lifted[remaining[i]], target);
            }
            g = symmod(g, target);
            h = symmod(h, target);
            if (one_norm(g) * one_norm(h) <= bound) {
                result.push_back(primitive_part(g));
                cur = primitive_part(h);
                std::vector<int> rest;
                for (size_t i = 0; i < remaining.size(); ++i)
                    if (!in[i]) rest.push_back(remaining[i]);
                remaining = std::move(rest);
                found = true;
                break;
            }
        } while (next_combination(idx, static_cast<int>(remaining.size())));
        if (!found) ++s;
    }
    result.push_back(cur);
    std::sort(result.begin(), result.end(), [](const ZPoly& a, const ZPoly& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        for (int i = a.degree(); i >= 0; --i)
            if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
        return false;
    });
    return result;
}

std::vector<std::pair<ZPoly, int>> factor(const ZPoly& f) {
    std::vector<std::pair<ZPoly, int>> out;
    for (const auto& [g, mult] : squarefree_decomposition(f))
        for (auto& h : factor_squarefree(g)) out.emplace_back(std::move(h), mult);
    return out;
}

bool is_irreducible(const ZPoly& f) {
    if (f.degree() < 1) return false;
    if (!is_squarefree(f)) return false;
    return factor_squarefree(f).size() == 1;
}

}  // namespace svt::num
