#include <doctest.h>

#include "svt/numerics/algebraic.hpp"
#include "svt/numerics/ball.hpp"
#include "svt/numerics/factor.hpp"
#include "svt/numerics/gaussian.hpp"
#include "svt/numerics/linalg.hpp"
#include "svt/numerics/number_field.hpp"

#include <random>

using namespace svt;
using namespace svt::num;

namespace {

ZPoly zp(std::initializer_list<long> c) {
    std::vector<mpz_class> v;
    for (long x : c) v.emplace_back(x);
    return ZPoly(std::move(v));
}

mpq_class random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-1000000, 1000000), den(1, 100000);
    mpq_class q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

bool ball_contains_rational(const RealBall& b, const mpq_class& q) {
    return b.lower().to_mpq() <= q && q <= b.upper().to_mpq();
}

}  // namespace

TEST_CASE("rational literals parse exactly") {
    CHECK(parse_rational("12") == 12);
    CHECK(parse_rational("-3/7") == mpq_class(-3, 7));
    CHECK(parse_rational("1.25") == mpq_class(5, 4));
    CHECK(parse_rational("2.5e-3") == mpq_class(1, 400));
    CHECK_THROWS_AS(parse_rational("1/0"), MalformedInput);
    CHECK_THROWS_AS(parse_rational("abc"), MalformedInput);
}

TEST_CASE("real ball arithmetic encloses exact rational results") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 10000; ++trial) {
        mpq_class a = random_rational(rng), b = random_rational(rng);
        long prec = 24 + (trial % 5) * 40;
        RealBall x = RealBall::from_mpq(a, prec), y = RealBall::from_mpq(b, prec);
        REQUIRE(ball_contains_rational(x + y, a + b));
        REQUIRE(ball_contains_rational(x - y, a - b));
        REQUIRE(ball_contains_rational(x * y, a * b));
        if (sgn(b) != 0) REQUIRE(ball_contains_rational(x / y, a / b));
    }
}

TEST_CASE("complex ball arithmetic encloses Gaussian rational results") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 2000; ++trial) {
        GaussianRational a(random_rational(rng), random_rational(rng));
        GaussianRational b(random_rational(rng), random_rational(rng));
        long prec = 30 + (trial % 4) * 50;
        ComplexBall x = a.to_ball(prec), y = b.to_ball(prec);
        auto inside = [&](const ComplexBall& z, const GaussianRational& g) {
            return z.contains(g.to_ball(400));
        };
        REQUIRE(inside(x + y, a + b));
        REQUIRE(inside(x * y, a * b));
        REQUIRE(inside(x / y, a / b));
    }
}

TEST_CASE("certified comparisons need separated enclosures") {
    RealBall one(1), two(2);
    CHECK(certainly_lt(one, two));
    CHECK_FALSE(certainly_lt(two, one));
    RealBall third = RealBall::from_mpq(mpq_class(1, 3), 64);
    CHECK_FALSE(certainly_lt(third, third));
    LogValue l = log_or_neg_inf(RealBall());
    CHECK(l.minus_infinity);
}

TEST_CASE("squarefree decomposition and factorization") {
    ZPoly f = zp({-1, 0, 1});                     // x^2 - 1
    ZPoly g = zp({2, 0, 1});                      // x^2 + 2
    ZPoly h = pow(zp({1, 1}), 3) * f * g;         // (x+1)^3 (x-1)(x+1)(x^2+2)
    auto fac = factor(h);
    int total = 0;
    for (auto& [p, m] : fac) total += p.degree() * m;
    CHECK(total == h.degree());
    CHECK(fac.size() == 3);

    CHECK(is_irreducible(zp({-2, 0, 1})));
    CHECK_FALSE(is_irreducible(zp({-4, 0, 1})));
    // Swinnerton-Dyer-like: x^4 - 10x^2 + 1 is irreducible but splits modulo every prime.
    CHECK(is_irreducible(zp({1, 0, -10, 0, 1})));
}

TEST_CASE("factorization recovers random products") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> coef(-9, 9), deg(1, 4);
    for (int trial = 0; trial < 60; ++trial) {
        ZPoly prod(mpz_class(1));
        int want = 0;
        for (int k = 0; k < 3; ++k) {
            int d = deg(rng);
            std::vector<mpz_class> c;
            for (int i = 0; i < d; ++i) c.emplace_back(coef(rng));
            c.emplace_back(1 + std::abs(coef(rng)));
            ZPoly p(std::move(c));
            prod = prod * p;
            want += d;
        }
        auto fac = factor(prod);
        ZPoly back(mpz_class(1));
        for (auto& [p, m] : fac) back = back * pow(p, m);
        // Reassembled product agrees up to a constant.
        REQUIRE(back.degree() == prod.degree());
        for (auto& [p, m] : fac) REQUIRE(is_irreducible(p));
        ZPoly pp = primitive_part(prod);
        REQUIRE(primitive_part(back) == pp);
    }
}

TEST_CASE("refine_embedding on forced roots") {
    AlgebraicNumber sqrt2 = AlgebraicNumber::make(zp({-2, 0, 1}), ComplexBall::from_mpq(mpq_class(7, 5), 64).widened(pow2(-3)));
    ComplexBall z = refine_embedding(sqrt2, 64);
    CHECK(z.rad() <= pow2(-60));
    CHECK(std::abs(z.re_mid().to_double() - 1.4142135623730951) < 1e-15);
    RealBall sq = (z * z).real();
    CHECK(sq.contains(RealBall(2)));

    AlgebraicNumber half = AlgebraicNumber::make(zp({-1, 2}), ComplexBall::from_mpq(mpq_class(1, 2), 64).widened(pow2(-4)));
    ComplexBall h = refine_embedding(half, 200);
    CHECK(h.is_exact());
    CHECK(h.re_mid().to_double() == 0.5);

    AlgebraicNumber i = AlgebraicNumber::make(zp({1, 0, 1}), ComplexBall::from_mpq(0, mpq_class(9, 10), 64).widened(pow2(-2)));
    ComplexBall iz = refine_embedding(i, 128);
    CHECK(iz.rad() <= pow2(-120));
    CHECK(iz.overlaps(ComplexBall::from_mpq(0, 1, 64)));

    AlgebraicNumber bad{zp({-2, 0, 1}), ComplexBall::from_mpq(0, 64).widened(pow2(2))};
    CHECK_THROWS_AS(refine_embedding(bad, 64), MalformedInput);
    AlgebraicNumber none{zp({-2, 0, 1}), ComplexBall::from_mpq(5, 64).widened(pow2(-2))};
    CHECK_THROWS_AS(refine_embedding(none, 64), MalformedInput);
}

TEST_CASE("refinement radius is monotone in precision") {
    AlgebraicNumber a = AlgebraicNumber::nearest_root(zp({-3, 1, 0, 1}), ComplexBall(1));
    for (long p = 32; p <= 512; p += 16) {
        ComplexBall lo = refine_embedding(a, p), hi = refine_embedding(a, p + 16);
        REQUIRE(hi.rad() <= lo.rad());
    }
}

TEST_CASE("conjugate embeddings are disjoint and satisfy Vieta") {
    auto r = conjugate_embeddings(zp({-2, 0, 1}), 64);
    REQUIRE(r.size() == 2);
    CHECK(r[0].re_mid().to_double() < 0);
    CHECK(r[0].disjoint(r[1]));

    auto three = conjugate_embeddings(zp({-3, 1}), 64);
    REQUIRE(three.size() == 1);
    CHECK(three[0].is_exact());

    auto w = conjugate_embeddings(zp({1, 1, 1}), 80);
    REQUIRE(w.size() == 2);
    CHECK((w[0] * w[1]).overlaps(ComplexBall(1)));
    CHECK((w[0] + w[1]).overlaps(ComplexBall(-1)));

    CHECK_THROWS_AS(conjugate_embeddings(zp({1, 2, 1}), 64), PreconditionFailed);

    // A degree 12 polynomial with close roots.
    ZPoly f = zp({1});
    for (int k = 1; k <= 12; ++k) f = f * zp({-k, 1});
    f = f + zp({1});
    if (is_squarefree(f)) {
        auto roots = conjugate_embeddings(f, 64);
        REQUIRE(roots.size() == 12);
        for (size_t a = 0; a < roots.size(); ++a)
            for (size_t b = a + 1; b < roots.size(); ++b) REQUIRE(roots[a].disjoint(roots[b]));
    }
}

TEST_CASE("number field arithmetic and minimal polynomials") {
    FieldPtr k = make_field(zp({-2, 0, 1}));
    NfElem t = NfElem::generator(k);
    CHECK(t * t == NfElem(2));
    NfElem u = NfElem(1) + t;
    CHECK(u * u.inv() == NfElem(1));
    CHECK(minimal_polynomial(u) == zp({-1, -2, 1}));
    CHECK_THROWS_AS(make_field(zp({-4, 0, 1})), MalformedInput);
}

TEST_CASE("compositum of sqrt2 and sqrt3") {
    AlgebraicNumber a = AlgebraicNumber::nearest_root(zp({-2, 0, 1}), ComplexBall(1));
    AlgebraicNumber b = AlgebraicNumber::nearest_root(zp({-3, 0, 1}), ComplexBall(2));
    Compositum c = compositum(a, b);
    REQUIRE(c.field);
    CHECK(c.field->degree() == 4);
    CHECK(c.a * c.a == NfElem(2));
    CHECK(c.b * c.b == NfElem(3));
    ComplexBall theta = refine_embedding(*c.field->generator, 128);
    CHECK(c.a.embed(theta).overlaps(refine_embedding(a, 128)));
    CHECK(c.b.embed(theta).overlaps(refine_embedding(b, 128)));
}

TEST_CASE("exact kernel and solve") {
    Matrix<mpq_class> a{{1, 2, 3}, {2, 4, 6}};
    auto ker = kernel_basis(a, 3);
    CHECK(ker.size() == 2);
    for (auto& v : ker) CHECK(v[0] + 2 * v[1] + 3 * v[2] == 0);
    Matrix<mpq_class> m{{2, 1}, {1, 3}};
    auto x = solve_square(m, std::vector<mpq_class>{3, 5});
    CHECK(x[0] == mpq_class(4, 5));
    CHECK(x[1] == mpq_class(7, 5));
    CHECK(determinant(m) == 5);
}
