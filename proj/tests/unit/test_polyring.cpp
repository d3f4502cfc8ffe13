#include <doctest.h>

#include "generators.hpp"
#include "svt/polyring/transforms.hpp"

using namespace svt;
using namespace svt::poly;

namespace {

QForm x(int k) { return QForm::variable(k); }
TranslationParams std_params() { return TranslationParams::make(mpq_class(0), mpq_class(1), 1, 2); }

// tau^i(z) = (z0, z1 + i r z0, s^i z2).
std::array<mpq_class, 3> tau_pow_exact(const std::array<mpq_class, 3>& z, long i, const TranslationParams& p) {
    return {z[0], z[1] + i * p.r * z[0], rational_pow(p.s, i) * z[2]};
}

bool integral(const QForm& p) {
    for (const auto& a : p.coeffs())
        if (a.get_den() != 1) return false;
    return true;
}

}  // namespace

TEST_CASE("monomial indexing is graded lex") {
    CHECK(monomial_index(0, 0) == 0);
    CHECK(monomial_index(1, 0) == 1);
    CHECK(monomial_index(0, 1) == 2);
    CHECK(monomial_index(2, 0) == 3);
    for (int d = 0; d < 6; ++d)
        for (int i = 0; i < monomial_count(d); ++i) {
            Exponent e = monomial_at(d, i);
            REQUIRE(e.e0 + e.e1 + e.e2 == d);
            REQUIRE(monomial_index(e.e1, e.e2) == i);
        }
}

TEST_CASE("norm and length") {
    QForm p = mpq_class(3) * x(0) - mpq_class(5) * x(1) + x(2);
    CHECK(p.norm() == 5);
    CHECK(p.length() == 9);
    BallForm b = to_ball_form(p, 64);
    CHECK(b.length().contains(RealBall(9)));
}

TEST_CASE("phi_pow examples") {
    TranslationParams p = std_params();
    CHECK(phi_pow(x(1), 1, p) == x(1) + x(0));
    CHECK(phi_pow(x(2), 2, p) == mpq_class(4) * x(2));
    CHECK(phi_pow(x(1) + x(0), -1, p) == x(1));
}

TEST_CASE("phi is a ring homomorphism and a group action") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 500; ++trial) {
        TranslationParams p = TranslationParams::make(gen::rational(rng, 5, 3), mpq_class(1),
                                                      gen::nonzero_rational(rng, 4, 3), mpq_class(gen::integer(rng, 2, 4)));
        QForm a = gen::form(rng, (int)gen::integer(rng, 0, 3), 5), b = gen::form(rng, (int)gen::integer(rng, 0, 3), 5);
        long j = gen::integer(rng, -4, 4), k = gen::integer(rng, -4, 4);
        REQUIRE(phi_pow(a * b, j, p) == phi_pow(a, j, p) * phi_pow(b, j, p));
        REQUIRE(phi_pow(a, j + k, p) == phi_pow(phi_pow(a, k, p), j, p));
    }
}

TEST_CASE("orbit identity Phi^j(P)(tau^i z) = Phi^(i+j)(P)(z)") {
    std::mt19937_64 rng(22);
    TranslationParams p = TranslationParams::make(mpq_class(1, 3), mpq_class(2), mpq_class(3, 2), mpq_class(-3));
    for (int trial = 0; trial < 200; ++trial) {
        QForm f = gen::form(rng, (int)gen::integer(rng, 0, 4), 7);
        std::array<mpq_class, 3> z{gen::rational(rng, 9, 4), gen::rational(rng, 9, 4), gen::rational(rng, 9, 4)};
        long i = gen::integer(rng, -10, 10), j = gen::integer(rng, -10, 10);
        mpq_class lhs = phi_pow(f, j, p).eval(tau_pow_exact(z, i, p));
        mpq_class rhs = phi_pow(f, i + j, p).eval(z);
        REQUIRE(lhs == rhs);
        // Ball arithmetic encloses both sides.
        BallForm fb = to_ball_form(phi_pow(f, j, p), 128);
        ComplexBall lb = fb.eval(to_ball_point(tau_pow_exact(z, i, p), 128), [](const ComplexBall& a) { return a; });
        REQUIRE(lb.overlaps(ComplexBall::from_mpq(rhs, 256)));
    }
}

TEST_CASE("floor_power is exact") {
    CHECK(floor_power(3, 1) == 3);
    CHECK(floor_power(8, mpq_class(1, 3)) == 2);
    CHECK(floor_power(7, mpq_class(1, 3)) == 1);
    CHECK(floor_power(10, mpq_class(3, 2)) == 31);
    CHECK(floor_power(5, mpq_class(19, 10)) == 21);  // 5^1.9 = 21.3
}

TEST_CASE("tilde_homogenize examples") {
    TranslationParams p = std_params();
    QForm out = tilde_homogenize(bi_monomial(1, 0, 1), 3, 1, p);
    mpz_class two36;
    mpz_ui_pow_ui(two36.get_mpz_t(), 2, 36);
    CHECK(out == QForm::monomial(mpq_class(two36), 0, 3, 0));

    mpz_class two16;
    mpz_ui_pow_ui(two16.get_mpz_t(), 2, 16);
    CHECK(tilde_homogenize(bi_monomial(1, 1, 1), 2, 1, p) == QForm::monomial(mpq_class(two16), 0, 2, 0));

    TranslationParams half = TranslationParams::make(mpq_class(0), mpq_class(1), mpq_class(1, 2), 2, mpz_class(2));
    QForm one = tilde_homogenize(bi_monomial(1, 0, 0), 1, 1, half);
    CHECK(one == mpq_class(16) * x(1));
    CHECK(phi_pow(one, 1, half) == mpq_class(16) * x(1) + mpq_class(8) * x(0));

    CHECK_THROWS_AS(tilde_homogenize(BiPoly(), 2, 1, p), PreconditionFailed);
}

TEST_CASE("tilde_homogenize output is integral along the orbit and gcd-free") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        int d = (int)gen::integer(rng, 1, 5);
        mpq_class sigma(gen::integer(rng, 2, 5), 3);
        sigma.canonicalize();
        mpz_class den = gen::integer(rng, 1, 3), snum = gen::integer(rng, 2, 3) * (gen::integer(rng, 0, 1) ? 1 : -1);
        mpq_class r(gen::integer(rng, 1, 5), den);
        r.canonicalize();
        TranslationParams p = TranslationParams::make(mpq_class(0), mpq_class(1), r, mpq_class(snum));
        BiPoly f = gen::bivariate(rng, (int)gen::integer(rng, 0, d), 6);
        QForm t = tilde_homogenize(f, d, sigma, p);
        REQUIRE(t.x0_valuation() == 0);
        REQUIRE(t.x2_valuation() == 0);
        long count = 4 * floor_power(d, sigma);
        for (long i = 0; i < count; ++i) REQUIRE(integral(phi_pow(t, i, p)));
        REQUIRE(gcd_free(t, d, p).free);
    }
}

TEST_CASE("s_inversion_transform examples") {
    CHECK(s_inversion_transform(bi_monomial(1, 0, 1), 2) == bi_monomial(1, 0, 0));
    CHECK(s_inversion_transform(bi_monomial(1, 1, 1), 4) == bi_monomial(1, 1, 1));
    CHECK_THROWS_AS(s_inversion_transform(bi_monomial(1, 0, 3), 4), PreconditionFailed);
}

TEST_CASE("gcd_free examples") {
    TranslationParams p = std_params();
    CHECK(gcd_free(x(1) * x(1), 2, p).free);
    CHECK_THROWS_AS(gcd_free(x(0) * x(1), 2, p), PreconditionFailed);
    CHECK(gcd_free(x(1) * x(1) - x(0) * x(2), 2, p).free);
}

TEST_CASE("form gcd and division") {
    QForm a = (x(1) - x(0)) * (x(2) + x(1));
    QForm b = (x(1) - x(0)) * (x(2) - x(0));
    QForm g = form_gcd(a, b);
    CHECK(g.degree() == 1);
    CHECK(form_div(a, g).degree() == 1);
    CHECK(form_gcd(x(0) * x(1), x(0) * x(2)) == x(0));
    CHECK_THROWS_AS(form_div(x(1), x(2)), PreconditionFailed);
}
