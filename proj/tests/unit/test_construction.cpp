#include <doctest.h>

#include "generators.hpp"
#include "svt/construction/construction.hpp"
#include "svt/interpolation/interpolation.hpp"
#include "svt/polyring/transforms.hpp"

using namespace svt;
using namespace svt::cons;
using poly::BiPoly;
using poly::QForm;

namespace {

poly::TranslationParams standard() { return poly::TranslationParams::make(mpq_class(0), mpq_class(1), 1, 2); }

mpq_class q(long a, long b = 1) {
    mpq_class r(a, b);
    r.canonicalize();
    return r;
}

// Independent restatement of the classification rules.
Region classify(const mpq_class& s, const mpq_class& b, const mpq_class& n) {
    if (s <= 0 || b <= 0 || n <= 0 || s >= 2) return Region::invalid;
    bool theorem = s >= 1 && b > s + 1 &&
                   (s >= q(3, 2) ? n > 2 + b - s : n > 2 + b - s + (s - 1) * (3 - 2 * s) / (2 + b - 2 * s));
    if (theorem) return Region::theorem;
    if (b > 2 * s - 1 && n < 2 + b - s) return Region::dirichlet;
    return Region::gap;
}

num::AlgebraicNumber root_of(long a) {
    return num::AlgebraicNumber::nearest_root(num::ZPoly({-a, 0, 1}), num::ComplexBall::from_mpq(q(3, 2), 64));
}

mpq_class eval_bi(const BiPoly& p, const mpq_class& x, const mpq_class& y) {
    mpq_class acc = 0;
    for (int j = p.degree(); j >= 0; --j) acc = acc * y + p.coeff(j).eval<mpq_class>(x);
    return acc;
}

// Exact Gram-Schmidt check of the LLL conditions.
bool is_lll_reduced(const std::vector<std::vector<mpz_class>>& b, const mpq_class& delta) {
    const size_t n = b.size();
    std::vector<std::vector<mpq_class>> star(n);
    std::vector<mpq_class> nrm(n);
    auto dot = [](const std::vector<mpq_class>& u, const std::vector<mpq_class>& v) {
        mpq_class s = 0;
        for (size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
        return s;
    };
    std::vector<std::vector<mpq_class>> mu(n, std::vector<mpq_class>(n, 0));
    for (size_t i = 0; i < n; ++i) {
        std::vector<mpq_class> bi(b[i].begin(), b[i].end());
        star[i] = bi;
        for (size_t j = 0; j < i; ++j) {
            mu[i][j] = dot(bi, star[j]) / nrm[j];
            if (abs(mu[i][j]) > q(51, 100)) return false;
            for (size_t c = 0; c < bi.size(); ++c) star[i][c] -= mu[i][j] * star[j][c];
        }
        nrm[i] = dot(star[i], star[i]);
        if (i > 0 && delta * nrm[i - 1] > nrm[i] + mu[i][i - 1] * mu[i][i - 1] * nrm[i - 1]) return false;
    }
    return true;
}

mpq_class gram_det(const std::vector<std::vector<mpz_class>>& b) {
    const size_t n = b.size();
    std::vector<std::vector<mpq_class>> g(n, std::vector<mpq_class>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            mpz_class s = 0;
            for (size_t c = 0; c < b[i].size(); ++c) s += b[i][c] * b[j][c];
            g[i][j] = s;
        }
    mpq_class det = 1;
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && g[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(g[p], g[c]);
            det = -det;
        }
        det *= g[c][c];
        for (size_t r = c + 1; r < n; ++r) {
            mpq_class f = g[r][c] / g[c][c];
            for (size_t k = c; k < n; ++k) g[r][k] -= f * g[c][k];
        }
    }
    return det;
}

}  // namespace

TEST_CASE("parameter region examples") {
    CHECK(parameter_region(q(3, 2), 3, q(18, 5)).classification == Region::theorem);
    CHECK(parameter_region(1, 2, q(5, 2)).classification == Region::dirichlet);
    CHECK(parameter_region(q(6, 5), q(5, 2), q(331, 100)).classification == Region::gap);
    CHECK(parameter_region(2, 5, 10).classification == Region::invalid);
    CHECK(parameter_region(0, 5, 10).classification == Region::invalid);
    CHECK(parameter_region(1, -1, 10).classification == Region::invalid);
    // just above the sigma < 3/2 threshold 3.3 + 0.12 / 2.1
    CHECK(parameter_region(q(6, 5), q(5, 2), q(33, 10) + q(12, 210) + q(1, 1000000)).classification ==
          Region::theorem);
    CHECK(region_name(Region::gap) == "gap");
}

TEST_CASE("parameter region is a partition with closed boundaries excluded") {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 10000; ++trial) {
        mpq_class s = gen::rational(rng, 60, 20), b = gen::rational(rng, 100, 20), n = gen::rational(rng, 150, 20);
        CHECK(parameter_region(s, b, n).classification == classify(s, b, n));
    }
    for (int trial = 0; trial < 2000; ++trial) {
        mpq_class s = q(gen::integer(rng, 1, 39), 20), b = q(gen::integer(rng, 1, 100), 20);
        // nu on the theorem threshold
        mpq_class th = 2 + b - s;
        if (s < q(3, 2) && 2 + b - 2 * s != 0) th += (s - 1) * (3 - 2 * s) / (2 + b - 2 * s);
        if (sgn(th) > 0) CHECK(parameter_region(s, b, th).classification != Region::theorem);
        // nu on the dirichlet line
        mpq_class base = 2 + b - s;
        if (sgn(base) > 0) CHECK(parameter_region(s, b, base).classification != Region::dirichlet);
        // beta on the dirichlet line
        mpq_class bb = 2 * s - 1;
        if (sgn(bb) > 0) CHECK(parameter_region(s, bb, q(1, 2)).classification != Region::dirichlet);
        // beta = sigma + 1 never reaches the theorem region
        CHECK(parameter_region(s, s + 1, 1000).classification != Region::theorem);
    }
}

TEST_CASE("LLL reduces small random lattices") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        int n = (int)gen::integer(rng, 2, 7);
        int m = n + (int)gen::integer(rng, 0, 2);
        std::vector<std::vector<mpz_class>> b;
        while ((int)b.size() < n) {
            std::vector<mpz_class> row;
            for (int c = 0; c < m; ++c) row.push_back(gen::integer(rng, -1000, 1000));
            b.push_back(row);
            if (gram_det(b) == 0) b.pop_back();
        }
        mpq_class before = gram_det(b);
        REQUIRE(lll_reduce(b));
        CHECK(gram_det(b) == before);
        CHECK(is_lll_reduced(b, q(99, 100)));
    }
    // an integer relation: 3 * 1 + 2 * 7 - 1 * 17 = 0
    std::vector<std::vector<mpz_class>> rel = {{1, 0, 0, 1000000}, {0, 1, 0, 7000000}, {0, 0, 1, 17000000}};
    REQUIRE(lll_reduce(rel));
    std::vector<mpz_class> v = rel[0];
    if (v[0] < 0)
        for (auto& e : v) e = -e;
    CHECK(v == std::vector<mpz_class>{3, 2, -1, 0});
}

TEST_CASE("dirichlet search on the rational pilot") {
    // the only integer kernel vector has log norm about 65.2, above 5^2 but below 5^3
    AuxSearchResult r = dirichlet_search(5, 1, 3, q(5, 2), standard());
    CHECK(r.status == SearchStatus::found);
    CHECK(r.points == 20);
    CHECK(r.monomials == 21);
    CHECK(r.kernel_dim >= 1);
    CHECK(r.region == Region::dirichlet);
    CHECK(r.certificate.exact_zero);
    CHECK(r.certificate.ok());
    CHECK(poly::has_integer_coeffs(r.poly));
    for (long i = 0; i < 20; ++i) CHECK(sgn(eval_bi(r.poly, mpq_class(i), poly::rational_pow(2, i))) == 0);
    CHECK(r.certificate.log_norm.overlaps(RealBall::from_mpq(q(6519691, 100000), 64).widened(num::pow2(-10))));

    AuxSearchResult tight = dirichlet_search(5, 1, 2, q(5, 2), standard());
    CHECK(tight.kernel_dim == 1);
    CHECK(tight.status != SearchStatus::found);
}

TEST_CASE("dirichlet search reports infeasibility") {
    AuxSearchResult r = dirichlet_search(1, q(19, 10), 2, 100, standard());
    CHECK(r.points == 4);
    CHECK(r.kernel_dim == 0);
    CHECK(r.status == SearchStatus::infeasible);
    CHECK(r.region != Region::dirichlet);
}

TEST_CASE("dirichlet search with irrational points") {
    auto p = poly::TranslationParams::make(root_of(2), root_of(3), 1, 2);
    for (int D : {2, 3, 4}) {
        AuxSearchResult r = dirichlet_search(D, 1, 2, q(12, 5), p);
        CAPTURE(D);
        CHECK(r.status != SearchStatus::unresolved);
        if (r.status == SearchStatus::found) {
            CHECK(certify_aux(r.poly, D, 1, 2, q(12, 5), p, 2048).ok());
            CHECK(!r.certificate.exact_zero);
        }
    }
    // certify_aux rejects the zero polynomial and large degrees
    CHECK(!certify_aux(BiPoly(), 3, 1, 2, 2, standard(), 128).ok());
    CHECK(!certify_aux(poly::bi_monomial(1, 4, 0), 3, 1, 2, 2, standard(), 128).degree_ok);
}

TEST_CASE("product counterexample examples") {
    BiPoly x1 = poly::bi_monomial(1, 1, 0), x2 = poly::bi_monomial(1, 0, 1);
    BiPoly L = x1 + x2;
    auto p = standard();
    CHECK(p.m == 2);
    BiPoly expect = L * (poly::bi_scale(2, x1) + x2 - BiPoly(QPoly(mpq_class(2))));
    CHECK(product_counterexample(L, 2, p) == expect);
    CHECK(product_counterexample(L, 1, p) == L);
    auto bad = p;
    bad.r = q(1, 2);
    bad.m = 1;
    CHECK_THROWS_AS(product_counterexample(L, 2, bad), PreconditionFailed);
    CHECK_THROWS_AS(product_counterexample(L, 0, p), PreconditionFailed);
    CHECK_THROWS_AS(product_counterexample(x1 * x2, 1, p), PreconditionFailed);
}

TEST_CASE("product counterexample has integer coefficients and factors pointwise") {
    std::mt19937_64 rng(211);
    for (int trial = 0; trial < 200; ++trial) {
        mpq_class r = gen::nonzero_rational(rng, 6, 4), s;
        do s = gen::nonzero_rational(rng, 9, 4);
        while (abs(s) == 1);
        auto p = poly::TranslationParams::make(mpq_class(0), mpq_class(1), r, s);
        BiPoly L;
        while (poly::total_degree(L) < 0) {
            L = BiPoly(QPoly(mpq_class(gen::integer(rng, -5, 5))));
            L = L + poly::bi_monomial(gen::integer(rng, -5, 5), 1, 0) + poly::bi_monomial(gen::integer(rng, -5, 5), 0, 1);
        }
        long count = gen::integer(rng, 1, 4);
        BiPoly P = product_counterexample(L, count, p);
        CHECK(poly::has_integer_coeffs(P));
        CHECK(poly::total_degree(P) == count * poly::total_degree(L));
        mpq_class x = gen::rational(rng, 7, 3), y = gen::rational(rng, 7, 3);
        mpq_class expect = 1;
        for (long i = 0; i < count; ++i)
            expect *= poly::rational_pow(mpq_class(p.m), i) *
                      eval_bi(L, x - mpq_class(i) * r, y * poly::rational_pow(s, -i));
        CHECK(eval_bi(P, x, y) == expect);
    }
}

TEST_CASE("algebraicity witness on the conic") {
    QForm P(2);
    P.set(0, 0, 2);
    P.set(1, 0, 1);
    P.set(0, 1, -2);
    P.set(2, 0, 1);
    WitnessReport w = algebraicity_witness(P, standard(), 2);
    CHECK(w.vanishing_checked);
    REQUIRE(w.varieties.size() == 1);
    CHECK(w.varieties[0].chow == var::variety_from_rational({1, 0, 1}).chow);
    REQUIRE(w.minpolys.size() == 1);
    CHECK(w.minpolys[0].first == num::ZPoly(std::vector<mpz_class>{0, 1}));
    CHECK(w.minpolys[0].second == num::ZPoly(std::vector<mpz_class>{-1, 1}));
    CHECK(w.match == 0);
    // (0 : 0 : 1) is a common zero of every shift
    CHECK(w.at_infinity == 1);

    CHECK_THROWS_AS(algebraicity_witness(QForm::variable(2) * P, standard(), 3), PreconditionFailed);
    CHECK_THROWS_AS(algebraicity_witness(QForm::variable(0) * P, standard(), 3), PreconditionFailed);
}

namespace {

// Integer combination of the slice basis that avoids X0 and X2 factors, if one turns up.
std::optional<QForm> vanishing_form(std::mt19937_64& rng, int D, const poly::TranslationParams& params) {
    auto slice = interp::ideal_slice_basis(D, D + 1, params);
    for (int attempt = 0; attempt < 20; ++attempt) {
        QForm f(D);
        for (const auto& b : slice.exact) f = f + mpq_class(gen::integer(rng, -3, 3)) * b;
        if (f.is_zero() || f.x0_valuation() > 0 || f.x2_valuation() > 0) continue;
        return f;
    }
    return std::nullopt;
}

}  // namespace

TEST_CASE("algebraicity witness on the cubic kernel") {
    std::mt19937_64 rng(3);
    auto f = vanishing_form(rng, 3, standard());
    REQUIRE(f);
    WitnessReport w = algebraicity_witness(*f, standard(), 3);
    CHECK(w.vanishing_checked);
    bool found = false;
    for (const auto& v : w.varieties) found = found || v.chow == var::variety_from_rational({1, 0, 1}).chow;
    CHECK(found);
    CHECK(w.match >= 0);
}

TEST_CASE("algebraicity witness recovers gamma_0") {
    std::mt19937_64 rng(313);
    int solved = 0;
    for (int trial = 0; trial < 30; ++trial) {
        int D = (int)gen::integer(rng, 2, 3);
        auto params = poly::TranslationParams::make(gen::rational(rng, 5, 3), gen::nonzero_rational(rng, 5, 3),
                                                    gen::nonzero_rational(rng, 3, 2), 2 + gen::integer(rng, 0, 1));
        auto f = vanishing_form(rng, D, params);
        if (!f) continue;
        try {
            WitnessReport w = algebraicity_witness(*f, params, D);
            ++solved;
            CHECK(w.vanishing_checked);
            auto g0 = var::variety_from_rational({1, params.xi_q(), params.eta_q()});
            bool found = false;
            for (const auto& v : w.varieties) found = found || v.chow == g0.chow;
            CHECK(found);
        } catch (const PreconditionFailed&) {
            // every shift combination shares a factor with P
        }
    }
    CHECK(solved >= 15);
}

TEST_CASE("dyadic selection examples") {
    DyadicResult a = dyadic_select({{{5, -4}}, 1, 0});
    CHECK(a.m == 5);
    REQUIRE(a.windows.size() == 1);
    CHECK(a.windows[0].sum == -4);
    CHECK(a.windows[0].bound == -2);
    CHECK(a.ok());

    DyadicResult b = dyadic_select({{{0, -3}, {1, -3}, {2, -3}, {3, -3}}, q(3, 2), 2});
    CHECK(b.m == 0);
    REQUIRE(b.windows.size() == 3);
    CHECK(b.windows[0].sum == -3);
    CHECK(b.windows[1].sum == -6);
    CHECK(b.windows[2].sum == -12);
    CHECK(b.windows[2].bound == -12);
    CHECK(b.ok());

    CHECK_THROWS_AS(dyadic_select({{{0, -1}}, 1, 0}), PreconditionFailed);
    CHECK_THROWS_AS(dyadic_select({{{0, 1}}, 1, 0}), PreconditionFailed);
}

TEST_CASE("dyadic selection on random instances") {
    std::mt19937_64 rng(1009);
    for (int trial = 0; trial < 1000; ++trial) {
        DyadicInstance inst;
        inst.k = (int)gen::integer(rng, 0, 8);
        long len = 1L << inst.k;
        long offset = gen::integer(rng, -100, 100);
        mpq_class total = 0;
        for (long t = 0; t < len; ++t) {
            if (gen::integer(rng, 0, 2) == 0) continue;
            mpq_class d = -abs(gen::rational(rng, 20, 5));
            inst.pairs.push_back({offset + t, d});
            total += d;
        }
        if (sgn(total) == 0) inst.pairs.push_back({offset, total = -1});
        inst.B = -total / (2 * len);
        DyadicResult r = dyadic_select(inst);
        CHECK(r.ok());
        CHECK((int)r.windows.size() == inst.k + 1);
    }
}
