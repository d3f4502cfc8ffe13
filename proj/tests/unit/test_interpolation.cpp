#include <doctest.h>

#include "generators.hpp"
#include "svt/interpolation/interpolation.hpp"

using namespace svt;
using namespace svt::interp;
using poly::HomogeneousPoly;

namespace {

TranslationParams std_params() { return TranslationParams::make(mpq_class(0), mpq_class(1), 1, 2); }

QForm lin(long a0, long a1, long a2) {
    QForm q(1);
    q.set_at(0, a0);
    q.set_at(1, a1);
    q.set_at(2, a2);
    return q;
}

ProjectivePoint pt(long a, long b, long c) { return ProjectivePoint::exact({mpq_class(a), mpq_class(b), mpq_class(c)}); }

TranslationParams random_params(std::mt19937_64& rng) {
    mpq_class s;
    do s = gen::nonzero_rational(rng, 5, 2);
    while (abs(s) <= 1);
    return TranslationParams::make(gen::rational(rng, 3, 2), gen::nonzero_rational(rng, 3, 2),
                                   gen::nonzero_rational(rng, 3, 2), s);
}

}  // namespace

TEST_CASE("dual basis L = 1 with the standard parameters") {
    DualBasis b = dual_basis(1, std_params());
    REQUIRE(b.exact);
    REQUIRE(b.M == 3);
    CHECK(b.exact_polys[0] == lin(0, -2, 1));
    CHECK(b.exact_polys[1] == lin(2, 3, -2));
    CHECK(b.exact_polys[2] == lin(-1, -1, 1));
    CHECK(kronecker_holds(b, std_params()));
}

TEST_CASE("dual basis edge cases") {
    DualBasis b = dual_basis(0, std_params());
    REQUIRE(b.M == 1);
    CHECK(b.exact_polys[0] == QForm::constant(1));
    TranslationParams p1 = std_params();
    p1.s = 1;  // make() refuses this, dual_basis must too
    CHECK_THROWS_AS(dual_basis(1, p1), PreconditionFailed);
    CHECK_THROWS_AS(dual_basis(-1, std_params()), PreconditionFailed);
}

TEST_CASE("interpolation bound values") {
    CHECK(interpolation_bound(1, std_params()).contains(RealBall(108)));
    CHECK(interpolation_bound(2, std_params()).contains(RealBall(43200)));
    CHECK(change_constant(std_params()).contains(RealBall(1)));
    CHECK(c2_power(8, 0) == 1);
    CHECK(c2_power(8, 1) == 512);
    CHECK(derive_c2(std_params()) == 8);
}

TEST_CASE("derived constants for the standard parameters") {
    InterpolationConstants c = derive_constants(std_params());
    CHECK(c.c2 == 8);
    CHECK(c.c_gamma.contains(RealBall(1)));
    CHECK(c.c3.contains(RealBall(838627)));
    CHECK_THROWS_AS(derive_constants(TranslationParams::make(mpq_class(0), mpq_class(1), 1, mpq_class(1, 2))),
                    PreconditionFailed);
}

TEST_CASE("monomial and falling routes agree") {
    for (int L = 0; L <= 5; ++L) {
        DualBasis a = dual_basis(L, std_params());
        DualBasis b = dual_basis_falling(L, std_params());
        CHECK(a.exact_polys == b.exact_polys);
        CHECK(kronecker_holds(b, std_params()));
        for (int j = 0; j < a.M; ++j) CHECK(num::certainly_le(a.lengths[j], a.bound));
    }
}

TEST_CASE("dual basis properties on random parameters") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        TranslationParams p = random_params(rng);
        int L = (int)gen::integer(rng, 0, 3);
        DualBasis a = dual_basis(L, p);
        DualBasis b = dual_basis_falling(L, p);
        CHECK(a.exact_polys == b.exact_polys);
        CHECK(kronecker_holds(a, p));
        for (int j = 0; j < a.M; ++j) CHECK(num::certainly_le(a.lengths[j], a.bound));
    }
}

TEST_CASE("dual basis with algebraic xi") {
    auto sqrt2 = num::AlgebraicNumber::nearest_root(num::ZPoly({-2, 0, 1}), num::ComplexBall(1));
    auto p = TranslationParams::make(sqrt2, mpq_class(1), 1, 2);
    for (int L = 0; L <= 2; ++L) {
        DualBasis a = dual_basis(L, p);
        CHECK_FALSE(a.exact);
        CHECK(kronecker_holds(a, p));
        DualBasis b = dual_basis_falling(L, p);
        for (int j = 0; j < a.M; ++j)
            for (int idx = 0; idx < a.M; ++idx)
                CHECK(a.ball_polys[j].at(idx).overlaps(b.ball_polys[j].at(idx)));
    }
}

TEST_CASE("interpolate examples") {
    Interpolant a = interpolate(std::vector<mpq_class>{1, 1, 1}, 1, std_params());
    CHECK(a.exact_poly == lin(1, 0, 0));
    Interpolant b = interpolate(std::vector<mpq_class>{1, 0, 0}, 1, std_params());
    CHECK(b.exact_poly == lin(0, -2, 1));
    CHECK(b.exact_poly.length() == 3);
    CHECK(b.certified);
    Interpolant z = interpolate(std::vector<mpq_class>{0, 0, 0}, 1, std_params());
    CHECK(z.exact_poly.is_zero());
    CHECK_THROWS_AS(interpolate(std::vector<mpq_class>{1, 2}, 1, std_params()), PreconditionFailed);
}

TEST_CASE("interpolation property") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        TranslationParams p = random_params(rng);
        int L = (int)gen::integer(rng, 0, 3);
        std::vector<mpq_class> v;
        for (int j = 0; j < poly::monomial_count(L); ++j) v.push_back(gen::rational(rng, 20, 5));
        Interpolant q = interpolate(v, L, p);
        for (int j = 0; j < (int)v.size(); ++j) CHECK(q.exact_poly.eval(proj::gamma(p, j).exact_coords()) == v[j]);
        CHECK(q.certified);
    }
}

TEST_CASE("ideal slice examples") {
    IdealSlice s = ideal_slice_basis(1, 1, std_params());
    REQUIRE(s.dimension() == 2);
    // kernel of (1, 0, 1) in the basis X0, X1, X2
    for (const auto& q : s.exact) CHECK(q.eval(proj::ExactTriple{1, 0, 1}) == 0);
    CHECK(((s.exact[0] == lin(0, 1, 0) && s.exact[1] == lin(1, 0, -1)) ||
           (s.exact[1] == lin(0, 1, 0) && s.exact[0] == lin(1, 0, -1))));
    CHECK(ideal_slice_basis(1, 3, std_params()).dimension() == 0);
    CHECK(ideal_slice_basis(2, 3, std_params()).dimension() == 3);
    CHECK_THROWS_AS(ideal_slice_basis(1, 0, std_params()), PreconditionFailed);
}

TEST_CASE("ideal slice over a number field") {
    auto sqrt2 = num::AlgebraicNumber::nearest_root(num::ZPoly({-2, 0, 1}), num::ComplexBall(1));
    auto p = TranslationParams::make(sqrt2, mpq_class(1), 1, 2);
    IdealSlice s = ideal_slice_basis(2, 2, p);
    REQUIRE(s.dimension() == 4);
    num::NfElem xi = num::NfElem::generator(s.field);
    for (const auto& q : s.nf)
        for (int i = 0; i < 2; ++i) {
            std::array<num::NfElem, 3> g = {num::NfElem(1), xi + num::NfElem(i), num::NfElem(1L << i)};
            CHECK(q.eval(g) == num::NfElem(0));
        }
}

TEST_CASE("separation certificate examples") {
    InterpolationConstants c = derive_constants(std_params());
    SeparationCertificate a = separation_certificate(pt(0, 1, 0), 1, 1, std_params(), c);
    CHECK(a.L == 0);
    CHECK(a.k == 1);
    CHECK(a.inside);
    CHECK(a.linear_form == 0);
    CHECK(a.exact_poly == lin(0, 1, 0));
    CHECK(a.orbit_dist.contains(RealBall(1)));
    CHECK(a.verified());
    CHECK_FALSE(a.trivial);

    SeparationCertificate b = separation_certificate(pt(1, 0, 1), 3, 4, std_params(), c);
    CHECK(b.trivial);
    CHECK(b.verified());

    CHECK_THROWS_AS(separation_certificate(pt(1, 0, 0), 1, 2, std_params(), c), PreconditionFailed);
    CHECK_THROWS_AS(separation_certificate(pt(1, 0, 0), 2, 0, std_params(), c), PreconditionFailed);
}

TEST_CASE("separation certificate property") {
    std::mt19937_64 rng(23);
    TranslationParams p = std_params();
    InterpolationConstants c = derive_constants(p);
    for (int trial = 0; trial < 60; ++trial) {
        int D = (int)gen::integer(rng, 1, 5);
        int T = (int)gen::integer(rng, 1, poly::monomial_count(D - 1));
        proj::ExactTriple z;
        do z = {gen::rational(rng, 6, 3), gen::rational(rng, 6, 3), gen::rational(rng, 6, 3)};
        while (z[0] == 0 && z[1] == 0 && z[2] == 0);
        SeparationCertificate s = separation_certificate(ProjectivePoint::exact(z), D, T, p, c);
        CAPTURE(D);
        CAPTURE(T);
        CHECK(s.verified());
        for (const auto& e : s.chain) {
            CAPTURE(e.name);
            CHECK(e.ok);
        }
        CHECK(s.exact_poly.degree() == D);
    }
}

TEST_CASE("separation certificate with ball input") {
    InterpolationConstants c = derive_constants(std_params());
    auto b = [](long v) { return num::ComplexBall::from_mpq(mpq_class(v, 3), 128); };
    ProjectivePoint alpha = ProjectivePoint::from_balls({b(1), b(5), b(-2)});
    SeparationCertificate s = separation_certificate(alpha, 3, 5, std_params(), c);
    CHECK_FALSE(s.exact);
    CHECK(s.verified());
}
