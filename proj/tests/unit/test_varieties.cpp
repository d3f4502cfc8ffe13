#include <doctest.h>

#include "generators.hpp"
#include "svt/varieties/variety.hpp"

using namespace svt;
using namespace svt::var;
using num::QPoly;
using num::ZPoly;

namespace {

QPoly qp(std::initializer_list<long> c) {
    std::vector<mpq_class> v;
    for (long x : c) v.push_back(x);
    return QPoly(v);
}

ZeroDimVariety sqrt2_variety() { return variety_from_point(ZPoly({-2, 0, 1}), {qp({1}), qp({0, 1}), qp({1})}); }

QForm form_of(int d, std::initializer_list<std::tuple<int, int, long>> terms) {
    QForm f(d);
    for (auto [e1, e2, c] : terms) f.set(e1, e2, mpq_class(c));
    return f;
}

// Irreducible integer polynomial of degree n with coefficients in [-10, 10], positive leading term.
ZPoly random_minpoly(std::mt19937_64& rng, int n) {
    for (;;) {
        std::vector<mpz_class> c;
        for (int i = 0; i < n; ++i) c.push_back(gen::integer(rng, -10, 10));
        c.push_back(gen::integer(rng, 1, 10));
        ZPoly f(c);
        if (f.degree() == n && num::is_irreducible(f)) return f;
    }
}

ZeroDimVariety random_variety(std::mt19937_64& rng, int max_degree) {
    for (;;) {
        int n = (int)gen::integer(rng, 1, max_degree);
        ZPoly f = random_minpoly(rng, n);
        std::array<QPoly, 3> c;
        for (auto& q : c) {
            std::vector<mpq_class> v;
            for (int i = 0; i < n; ++i) v.push_back(gen::rational(rng, 10, 10));
            q = QPoly(v);
        }
        try {
            return variety_from_point(f, c);
        } catch (const Error&) {
            // all-zero or coinciding conjugates: draw again
        }
    }
}

}  // namespace

TEST_CASE("sqrt2 variety") {
    ZeroDimVariety z = sqrt2_variety();
    CHECK(z.degree == 2);
    CHECK(z.k == 0);
    CHECK(z.chow == form_of(2, {{0, 0, 1}, {0, 1, 2}, {2, 0, -2}, {0, 2, 1}}));
    CHECK(z.content == 1);
    RealBall log2 = RealBall::log2_const(128);
    CHECK(z.height.overlaps(log2));
    CHECK(num::certainly_lt(num::abs(z.height - log2), RealBall::from_mpq(mpq_class(1, mpz_class("100000000000000000000")), 128)));
    WeilReport w = weil_height(z);
    CHECK(num::certainly_lt(num::abs(w.h_abs - log2 / RealBall(2)),
                            RealBall::from_mpq(mpq_class(1, mpz_class("100000000000000000000")), 128)));
    CHECK(w.height_gap_ok);
}

TEST_CASE("rational varieties") {
    ZeroDimVariety a = variety_from_rational({1, 0, 1});
    CHECK(a.degree == 1);
    CHECK(a.chow == form_of(1, {{0, 0, 1}, {0, 1, 1}}));
    CHECK(a.height.contains(RealBall(0)));
    ZeroDimVariety b = variety_from_rational({1, 0, 0});
    CHECK(weil_height(b).h_abs.contains(RealBall(0)));
    ZeroDimVariety c = variety_from_rational({1, 2, 3});
    RealBall log3 = num::log(RealBall(3));
    CHECK(c.height.overlaps(log3));
    CHECK(c.weil.overlaps(log3));
    CHECK(weil_height(c).gap.contains(RealBall(0)));
    // same point, other representative
    CHECK(variety_from_rational({mpq_class(1, 3), mpq_class(2, 3), 1}).chow == c.chow);
}

TEST_CASE("variety errors") {
    CHECK_THROWS_AS(variety_from_point(ZPoly({-2, 0, 1}), {qp({}), qp({}), qp({})}), PreconditionFailed);
    CHECK_THROWS_AS(variety_from_point(ZPoly({-1, 0, 1}), {qp({1}), qp({0, 1}), qp({1})}), MalformedInput);
    // both free coordinates rational: the two conjugate points coincide
    CHECK_THROWS_AS(variety_from_point(ZPoly({-2, 0, 1}), {qp({1}), qp({3}), qp({1})}), MalformedInput);
}

TEST_CASE("Chow form against the product over embeddings") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        ZeroDimVariety z = random_variety(rng, 4);
        CHECK(z.chow.degree() == z.degree);
        // content 1
        mpz_class g = 0;
        for (const auto& c : z.chow.coeffs()) {
            REQUIRE(c.get_den() == 1);
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
        }
        CHECK(g == 1);
        std::array<mpq_class, 3> u = {gen::rational(rng, 5, 1), gen::rational(rng, 5, 1), gen::rational(rng, 5, 1)};
        ComplexBall prod = ComplexBall::from_mpq(mpq_class(z.content), 256);
        for (const auto& pt : z.conjugate_points(256))
            prod = prod * (ComplexBall::from_mpq(u[0], 256) * pt[0] + ComplexBall::from_mpq(u[1], 256) * pt[1] +
                           ComplexBall::from_mpq(u[2], 256) * pt[2]);
        ComplexBall fv = ComplexBall::from_mpq(z.chow.eval(u), 256);
        CHECK(prod.overlaps(fv));
    }
}

TEST_CASE("normalized Chow height stays within 3 of the Weil height") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        ZeroDimVariety z = random_variety(rng, 4);
        WeilReport w = weil_height(z);
        CHECK(w.height_gap_ok);
    }
}

TEST_CASE("translate examples") {
    auto p = poly::TranslationParams::make(mpq_class(0), mpq_class(1), 1, 2);
    ZeroDimVariety z = variety_from_rational({1, 0, 1});
    TranslateReport a = translate_variety(z, 1, p);
    CHECK(a.image.chow == variety_from_rational({1, 1, 2}).chow);
    CHECK(a.image.height.overlaps(RealBall::log2_const(128)));
    CHECK(a.height_change_ok);
    TranslateReport b = translate_variety(z, -1, p);
    CHECK(b.image.chow == variety_from_rational({2, -2, 1}).chow);
    CHECK(b.image.height.overlaps(RealBall::log2_const(128)));
    TranslateReport c = translate_variety(sqrt2_variety(), 0, p);
    CHECK(c.image.chow == sqrt2_variety().chow);
    CHECK(c.lhs.contains(RealBall(0)));
    CHECK(c.height_change_ok);
}

TEST_CASE("translation height change on random varieties") {
    std::mt19937_64 rng(29);
    auto p = poly::TranslationParams::make(mpq_class(0), mpq_class(1), 1, 2);
    for (int trial = 0; trial < 50; ++trial) {
        ZeroDimVariety z = random_variety(rng, 3);
        long i = gen::integer(rng, -10, 10);
        TranslateReport r = translate_variety(z, i, p);
        CAPTURE(i);
        CHECK(r.height_change_ok);
    }
}

TEST_CASE("separation lower bound examples") {
    ZeroDimVariety a = variety_from_rational({1, 0, 0});
    ZeroDimVariety b = variety_from_rational({0, 1, 0});
    SeparationBound s = separation_lower_bound(a, b, {{0, 0}});
    CHECK(s.sum.contains(RealBall(0)));
    CHECK(s.bound.contains(RealBall(-7)));
    CHECK(s.verified);
    CHECK_THROWS_AS(separation_lower_bound(a, a, {{0, 0}}), PreconditionFailed);

    ZeroDimVariety r = sqrt2_variety();
    ZeroDimVariety g = variety_from_rational({1, 0, 1});
    SeparationBound t = separation_lower_bound(r, g, {{0, 0}, {1, 0}});
    CHECK(t.bound.overlaps(RealBall(-14) - RealBall::log2_const(128)));
    CHECK(t.verified);
}

TEST_CASE("separation lower bound on random pairs") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 100; ++trial) {
        ZeroDimVariety a = random_variety(rng, 3);
        ZeroDimVariety b = random_variety(rng, 3);
        if (same_variety(a, b)) continue;
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < a.degree; ++i)
            for (int j = 0; j < b.degree; ++j)
                if (gen::integer(rng, 0, 1)) pairs.push_back({i, j});
        CHECK(separation_lower_bound(a, b, pairs).verified);
    }
}

TEST_CASE("zero_dim_solve examples") {
    // X1^2 - 2 X0^2 and X0 X2 - X0^2
    QForm p = form_of(2, {{0, 0, -2}, {2, 0, 1}});
    QForm q = form_of(2, {{0, 0, -1}, {0, 1, 1}});
    SolveReport r = zero_dim_solve(p, q);
    bool found = false;
    for (const auto& v : r.varieties) found = found || v.chow == sqrt2_variety().chow;
    CHECK(found);
    // the line X0 = 0 contributes (0 : 0 : 1)
    CHECK(r.varieties.size() == 2);
    CHECK(r.total_degree == 3);
    CHECK(r.degree_ok);
    CHECK(r.height_ok);

    SolveReport s = zero_dim_solve(QForm::variable(1), QForm::variable(2));
    REQUIRE(s.varieties.size() == 1);
    CHECK(s.varieties[0].chow == variety_from_rational({1, 0, 0}).chow);

    QForm x1 = QForm::variable(1);
    CHECK_THROWS_AS(zero_dim_solve(x1 * QForm::variable(0), x1 * QForm::variable(2)), PreconditionFailed);
}

TEST_CASE("zero_dim_solve recovers a variety from its defining forms") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 15; ++trial) {
        int n = (int)gen::integer(rng, 1, 3);
        ZPoly f = random_minpoly(rng, n);
        mpq_class c = gen::rational(rng, 5, 3);
        // alpha = (1 : theta : c): f homogenized in X0, X1 and (X2 - c X0) X1^(n-1)
        QForm p(n);
        for (int e = 0; e <= n; ++e) p.set(e, 0, mpq_class(f.coeff(e)));
        QForm q = (QForm::variable(2) - c * QForm::variable(0));
        for (int e = 1; e < n; ++e) q = q * QForm::variable(1);
        ZeroDimVariety target = variety_from_point(f, {qp({1}), qp({0, 1}), QPoly(std::vector<mpq_class>{c})});
        SolveReport r = zero_dim_solve(p, q);
        bool found = false;
        for (const auto& v : r.varieties) found = found || v.chow == target.chow;
        CHECK(found);
        CHECK(r.degree_ok);
    }
}
