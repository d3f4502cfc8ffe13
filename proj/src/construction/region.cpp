#include "svt/construction/construction.hpp"

#include "svt/polyring/transforms.hpp"

#include <algorithm>
#include <map>

namespace svt::cons {

std::string region_name(Region r) {
    switch (r) {
        case Region::theorem: return "theorem";
        case Region::dirichlet: return "dirichlet";
        case Region::gap: return "gap";
        case Region::invalid: return "invalid";
    }
    return "invalid";
}

std::string status_name(SearchStatus s) {
    switch (s) {
        case SearchStatus::found: return "found";
        case SearchStatus::infeasible: return "infeasible";
        case SearchStatus::unresolved: return "unresolved";
    }
    return "unresolved";
}

ParamRegion parameter_region(const mpq_class& sigma, const mpq_class& beta, const mpq_class& nu) {
    ParamRegion out{sigma, beta, nu, Region::gap};
    if (sgn(sigma) <= 0 || sgn(beta) <= 0 || sgn(nu) <= 0 || sigma >= 2) {
        out.classification = Region::invalid;
        return out;
    }
    mpq_class base = 2 + beta - sigma;
    if (sigma >= 1 && beta > sigma + 1) {
        mpq_class threshold = base;
        if (sigma < mpq_class(3, 2)) {
            // 2 + beta - 2 sigma > 1 here, so the division is safe
            threshold += (sigma - 1) * (3 - 2 * sigma) / (2 + beta - 2 * sigma);
        }
        if (nu > threshold) {
            out.classification = Region::theorem;
            return out;
        }
    }
    if (beta > 2 * sigma - 1 && nu < base) out.classification = Region::dirichlet;
    return out;
}

BiPoly product_counterexample(const BiPoly& linear, long count, const TranslationParams& params) {
    if (count < 1) throw PreconditionFailed("count must be positive");
    if (poly::total_degree(linear) > 1) throw PreconditionFailed("the factor must be linear");
    if (!poly::has_integer_coeffs(linear)) throw PreconditionFailed("the factor needs integer coefficients");
    const mpq_class m(params.m);
    const mpq_class mr = m * params.r, ms = m / params.s;
    if (mr.get_den() != 1 || ms.get_den() != 1)
        throw PreconditionFailed("m r and m / s must be integers");
    const mpq_class c0 = poly::bi_coeff(linear, 0, 0), c1 = poly::bi_coeff(linear, 1, 0),
                    c2 = poly::bi_coeff(linear, 0, 1);
    BiPoly out(QPoly(mpq_class(1)));
    for (long i = 0; i < count; ++i) {
        // m^i L(X1 - r i, X2 s^-i) = m^i (c0 - c1 r i) + m^i c1 X1 + (m/s)^i c2 X2
        const mpq_class mi = poly::rational_pow(m, i);
        const mpq_class msi = poly::rational_pow(ms, i);
        mpq_class k0 = mi * (c0 - c1 * params.r * i);
        mpq_class k1 = mi * c1;
        mpq_class k2 = msi * c2;
        BiPoly factor(std::vector<QPoly>{QPoly(std::vector<mpq_class>{k0, k1}), QPoly(k2)});
        out = out * factor;
    }
    return out;
}

bool DyadicResult::ok() const {
    for (const auto& w : windows)
        if (!w.ok) return false;
    return !windows.empty();
}

DyadicResult dyadic_select(const DyadicInstance& inst) {
    if (inst.k < 0 || inst.k > 60) throw PreconditionFailed("k out of range");
    if (sgn(inst.B) <= 0) throw PreconditionFailed("B must be positive");
    std::map<long, mpq_class> weight;
    for (const auto& [t, d] : inst.pairs) {
        if (sgn(d) > 0) throw PreconditionFailed("delta must be nonpositive");
        weight[t] += d;
    }
    if (weight.empty()) throw PreconditionFailed("no pairs");

    std::vector<long> ts;
    std::vector<mpq_class> prefix{0};
    for (const auto& [t, d] : weight) {
        ts.push_back(t);
        prefix.push_back(prefix.back() + d);
    }
    // sum of weights with a <= t <= b
    auto range_sum = [&](long a, long b) -> mpq_class {
        auto lo = std::lower_bound(ts.begin(), ts.end(), a) - ts.begin();
        auto hi = std::upper_bound(ts.begin(), ts.end(), b) - ts.begin();
        return hi > lo ? mpq_class(prefix[hi] - prefix[lo]) : mpq_class(0);
    };

    const long len = 1L << inst.k;
    // The window sum only changes when a point enters or leaves, so the leftmost minimizer is one of
    // these starts.
    std::vector<long> starts;
    for (long t : ts) {
        starts.push_back(t - len + 1);
        starts.push_back(t + 1);
    }
    std::sort(starts.begin(), starts.end());
    long best_start = starts.front();
    mpq_class best = range_sum(best_start, best_start + len - 1);
    for (long s : starts) {
        mpq_class v = range_sum(s, s + len - 1);
        if (v < best) {
            best = v;
            best_start = s;
        }
    }
    auto bound_at = [&](int j) { return mpq_class(-inst.B * mpz_class(2) * mpz_class(1L << j)); };
    if (best > bound_at(inst.k)) throw PreconditionFailed("no window of length 2^k carries -2^(k+1) B");

    long lo = best_start, size = len;
    while (size > 1) {
        size /= 2;
        // ties keep the lower half
        if (range_sum(lo + size, lo + 2 * size - 1) < range_sum(lo, lo + size - 1)) lo += size;
    }
    DyadicResult out;
    out.m = lo;
    for (int j = 0; j <= inst.k; ++j) {
        long h = (1L << j) - 1;
        DyadicWindow w;
        w.j = j;
        w.sum = range_sum(out.m - h, out.m + h);
        w.bound = bound_at(j);
        w.ok = w.sum <= w.bound;
        out.windows.push_back(w);
    }
    return out;
}

}  // namespace svt::cons
