#include <doctest.h>

#include "generators.hpp"
#include "svt/numerics/linalg.hpp"
#include "svt/recurrence/recurrence.hpp"

using namespace svt;
using namespace svt::rec;
using G = num::GaussianRational;

namespace {

std::vector<Node<G>> nodes(std::initializer_list<std::pair<long, int>> v) {
    std::vector<Node<G>> out;
    for (auto [a, m] : v) out.push_back({G(a), m});
    return out;
}

G gauss(std::mt19937_64& rng, long nb, long db) { return G(gen::rational(rng, nb, db), gen::rational(rng, nb, db)); }

RecurrenceData<G> random_spec(std::mt19937_64& rng) {
    RecurrenceData<G> s;
    int n = (int)gen::integer(rng, 1, 4);
    while ((int)s.nodes.size() < n) {
        G a = gauss(rng, 4, 3);
        bool fresh = true;
        for (const auto& nd : s.nodes) fresh = fresh && !(nd.alpha == a);
        if (fresh) s.nodes.push_back({a, (int)gen::integer(rng, 1, 3)});
    }
    for (const auto& nd : s.nodes) {
        std::vector<G> row;
        for (int mu = 0; mu < nd.multiplicity; ++mu) row.push_back(G(gen::integer(rng, -10, 10), gen::integer(rng, -10, 10)));
        s.coeffs.push_back(row);
    }
    return s;
}

}  // namespace

TEST_CASE("falling factorials") {
    CHECK(falling_factorial(5, 0) == 1);
    CHECK(falling_factorial(5, 2) == 20);
    CHECK(falling_factorial(2, 3) == 0);
    CHECK(falling_factorial(0, 0) == 1);
}

TEST_CASE("eval_recurrence examples") {
    RecurrenceData<G> s{nodes({{2, 1}}), {{G(1)}}};
    auto u = eval_recurrence(s, 3);
    CHECK(u == std::vector<G>{G(1), G(2), G(4)});
    RecurrenceData<G> t{nodes({{1, 1}, {2, 1}}), {{G(1)}, {G(1)}}};
    CHECK(eval_recurrence(t, 2) == std::vector<G>{G(2), G(3)});
    CHECK(eval_recurrence(t, 0).empty());
    // alpha = 0 uses 0^0 = 1
    RecurrenceData<G> z{nodes({{0, 2}}), {{G(3), G(5)}}};
    CHECK(eval_recurrence(z, 3) == std::vector<G>{G(3), G(5), G(0)});
}

TEST_CASE("recovery_constants examples") {
    auto a = recovery_constants(nodes({{2, 2}}));
    CHECK(a.M == 2);
    CHECK(a.a0.contains(RealBall(9)));
    CHECK(a.bound.contains(RealBall(9)));
    auto b = recovery_constants(nodes({{1, 1}, {2, 1}}));
    CHECK(b.a0.contains(RealBall(12)));
    CHECK(b.a1.contains(RealBall(1)));
    CHECK(b.a2.contains(RealBall(1)));
    auto c = recovery_constants(nodes({{2, 1}}));
    CHECK(c.a0.contains(RealBall(3)));
    CHECK(c.improved_ok);
    CHECK(c.classical_ok);
    CHECK_THROWS_AS(recovery_constants(nodes({{2, 1}, {2, 2}})), PreconditionFailed);
}

TEST_CASE("certificate_poly examples") {
    using P = num::Poly<G>;
    CHECK(certificate_poly(nodes({{3, 2}}), 1, 0) == P(std::vector<G>{G(-3), G(1)}));
    CHECK(certificate_poly(nodes({{1, 1}, {2, 1}}), 0, 0) == P(std::vector<G>{G(2), G(-1)}));
    CHECK(certificate_poly(nodes({{5, 1}}), 0, 0) == P(G(1)));
    CHECK_THROWS_AS(certificate_poly(nodes({{5, 1}}), 1, 0), PreconditionFailed);
    CHECK_THROWS_AS(certificate_poly(nodes({{5, 1}}), 0, 1), PreconditionFailed);
}

TEST_CASE("recover_coefficients examples") {
    auto r = recover_coefficients(std::vector<G>{G(2), G(3)}, nodes({{1, 1}, {2, 1}}));
    CHECK(r[0][0] == G(1));
    CHECK(r[1][0] == G(1));
    auto s = recover_coefficients(std::vector<G>{G(1), G(2)}, nodes({{2, 2}}));
    CHECK(s[0][0] == G(1));
    CHECK(s[0][1] == G(0));
    CHECK_THROWS_AS(recover_coefficients(std::vector<G>{G(1), G(2), G(3)}, nodes({{2, 2}})), PreconditionFailed);
}

TEST_CASE("recovery roundtrip, solver agreement and bound") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 150; ++trial) {
        auto seq = random_spec(rng);
        int M = seq.order();
        auto u = eval_recurrence(seq, M);
        auto a = recover_coefficients(u, seq.nodes);
        REQUIRE(a == seq.coeffs);
        REQUIRE(recover_by_solve(u, seq.nodes) == seq.coeffs);
        auto check = check_recovery_bound(a, u, seq.nodes);
        REQUIRE(check.decided);
        REQUIRE(check.ok);
        auto mb = recovery_constants(seq.nodes);
        REQUIRE(mb.improved_ok);
        REQUIRE(mb.classical_ok);
    }
}

TEST_CASE("certificate structure") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 60; ++trial) {
        auto seq = random_spec(rng);
        int M = seq.order();
        auto mb = recovery_constants(seq.nodes);
        for (int nu = 0; nu < (int)seq.nodes.size(); ++nu)
            for (int mu = 0; mu < seq.nodes[nu].multiplicity; ++mu) {
                auto b = certificate_poly(seq.nodes, mu, nu);
                REQUIRE(b.degree() <= M - 1);
                REQUIRE(num::certainly_le(length(b), mb.bound));
                // (b(tau) u^(mu', nu'))_0 = delta
                for (int nu2 = 0; nu2 < (int)seq.nodes.size(); ++nu2)
                    for (int mu2 = 0; mu2 < seq.nodes[nu2].multiplicity; ++mu2) {
                        RecurrenceData<G> basis;
                        basis.nodes = seq.nodes;
                        for (const auto& nd : seq.nodes) basis.coeffs.push_back(std::vector<G>(nd.multiplicity, G(0)));
                        basis.coeffs[nu2][mu2] = G(1);
                        auto u = eval_recurrence(basis, M);
                        G acc(0);
                        for (int k = 0; k <= b.degree(); ++k) acc = acc + b.coeffs()[k] * u[k];
                        REQUIRE(acc == G((nu2 == nu && mu2 == mu) ? 1 : 0));
                    }
            }
    }
}

TEST_CASE("ball recovery encloses the exact coefficients") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 40; ++trial) {
        auto seq = random_spec(rng);
        auto u = eval_recurrence(seq, seq.order());
        std::vector<Node<ComplexBall>> bn;
        for (const auto& nd : seq.nodes) bn.push_back({nd.alpha.to_ball(256), nd.multiplicity});
        std::vector<ComplexBall> bu;
        for (const auto& v : u) bu.push_back(v.to_ball(256));
        auto a = recover_coefficients(bu, bn, 256);
        for (size_t nu = 0; nu < a.size(); ++nu)
            for (size_t mu = 0; mu < a[nu].size(); ++mu) REQUIRE(a[nu][mu].overlaps(seq.coeffs[nu][mu].to_ball(256)));
    }
    std::vector<Node<ComplexBall>> close{{ComplexBall::from_mpq(1, 64).widened(num::pow2(-10)), 1},
                                         {ComplexBall::from_mpq(mpq_class(1025, 1024), 64), 1}};
    CHECK_THROWS_AS(recover_coefficients(std::vector<ComplexBall>{ComplexBall(1), ComplexBall(1)}, close),
                    PrecisionExhausted);
}
