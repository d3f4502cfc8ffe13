#include <doctest.h>

#include "generators.hpp"
#include "svt/projective/point.hpp"

using namespace svt;
using namespace svt::proj;

namespace {

TranslationParams std_params() { return TranslationParams::make(mpq_class(0), mpq_class(1), 1, 2); }

ProjectivePoint pt(long a, long b, long c) { return ProjectivePoint::exact({mpq_class(a), mpq_class(b), mpq_class(c)}); }

}  // namespace

TEST_CASE("gamma examples") {
    auto p = std_params();
    CHECK(same_point(gamma(p, 2).exact_coords(), pt(1, 2, 4).exact_coords()));
    CHECK(same_point(gamma(p, 0).exact_coords(), pt(1, 0, 1).exact_coords()));
    CHECK(gamma(p, -1).exact_coords()[2] == mpq_class(1, 2));
}

TEST_CASE("gamma with algebraic xi gives balls") {
    using num::AlgebraicNumber;
    auto sqrt2 = AlgebraicNumber::nearest_root(num::ZPoly({-2, 0, 1}), num::ComplexBall(1));
    auto p = TranslationParams::make(sqrt2, mpq_class(1), 1, 2);
    ProjectivePoint g = gamma(p, 3, 128);
    CHECK_FALSE(g.is_exact());
    auto z = g.balls(128);
    // xi + 3 = 4.414...
    CHECK(z[1].overlaps(num::ComplexBall::from_mpq(mpq_class(4414213562373095, 1000000000000000), 64).widened(num::pow2(-40))));
}

TEST_CASE("dist examples") {
    CHECK(*dist_exact(pt(1, 0, 0), pt(0, 1, 0)) == 1);
    CHECK(*dist_exact(pt(1, 2, 3), pt(1, 2, 3)) == 0);
    CHECK(*dist_exact(pt(1, 1, 1), pt(1, 1, 2)) == mpq_class(1, 2));
    CHECK(dist(pt(1, 1, 1), pt(1, 1, 2)).contains(RealBall::from_mpq(mpq_class(1, 2), 64)));
    CHECK(*dist_exact(pt(1, 1, 1), pt(1, 1, 2).scaled(mpq_class(-7, 3))) == mpq_class(1, 2));
}

TEST_CASE("dist on balls encloses the exact value") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 300; ++trial) {
        ExactTriple a{gen::rational(rng, 9, 5), gen::rational(rng, 9, 5), gen::nonzero_rational(rng, 9, 5)};
        ExactTriple b{gen::rational(rng, 9, 5), gen::nonzero_rational(rng, 9, 5), gen::rational(rng, 9, 5)};
        auto pa = ProjectivePoint::exact(a), pb = ProjectivePoint::exact(b);
        auto ba = ProjectivePoint::from_balls(pa.balls(96)), bb = ProjectivePoint::from_balls(pb.balls(96));
        REQUIRE(dist(ba, bb, 96).contains(RealBall::from_mpq(*dist_exact(pa, pb), 200)));
        REQUIRE(dist(ba.normalized(), bb, 96).contains(RealBall::from_mpq(*dist_exact(pa, pb), 200)));
    }
}

TEST_CASE("zero representative is rejected") {
    CHECK_THROWS_AS(pt(0, 0, 0), PreconditionFailed);
}

TEST_CASE("tau_pow examples") {
    auto p = std_params();
    CHECK(same_point(tau_pow(pt(1, 0, 1), 1, p).exact_coords(), pt(1, 1, 2).exact_coords()));
    CHECK(same_point(tau_pow(pt(1, 1, 2), -1, p).exact_coords(), pt(1, 0, 1).exact_coords()));
    for (long j : {-5L, 1L, 7L}) {
        CHECK(same_point(tau_pow(pt(0, 0, 1), j, p).exact_coords(), pt(0, 0, 1).exact_coords()));
        CHECK(same_point(tau_pow(pt(0, 1, 0), j, p).exact_coords(), pt(0, 1, 0).exact_coords()));
    }
}

TEST_CASE("normalization") {
    auto n = pt(2, -6, 3).normalized();
    CHECK(n.exact_coords()[1] == 1);
    CHECK(*n.exact_norm() == 1);
    CHECK(n.unit_index() == 1);
}

TEST_CASE("translation constants") {
    auto t = translation_constants(mpq_class(1), mpq_class(2));
    CHECK(t.c == 4);
    auto norms = operator_norms(1, 2);
    CHECK(norms[2] == 4);
    CHECK(t.c1.overlaps(RealBall(3) * num::log(RealBall::from_mpq(4, 128))));
    CHECK(t.c1.rad() < num::pow2(-100));
    RealBall c4 = RealBall(6) + RealBall(2) * RealBall::log2_const(128);
    CHECK(t.c4.overlaps(c4));
    CHECK(t.c4.rad() < num::pow2(-100));
    // c' for s = 2: prod (1 + 2^(1-i)) / (1 - 2^-i)^2 is about 2 * 4 * 1.5 / (9/16) ... > 20
    CHECK(t.c_prime.certainly_positive());
    CHECK(num::certainly_lt(RealBall(20), t.c_prime));
    CHECK(t.c_prime.rad() < num::pow2(-60));
    CHECK_THROWS_AS(translation_constants(mpq_class(0), mpq_class(2)), PreconditionFailed);
    CHECK_THROWS_AS(translation_constants(mpq_class(1), mpq_class(-1)), PreconditionFailed);
}
