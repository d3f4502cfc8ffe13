#include "common.hpp"

namespace svt::verify::detail {

using var::ZeroDimVariety;

namespace {

var::ZeroDimVariety sqrt2_point(long prec) {
    std::vector<mpq_class> zero{0, 1};
    return var::variety_from_point(num::ZPoly(std::vector<mpz_class>{-2, 0, 1}),
                                   {num::QPoly(mpq_class(1)), num::QPoly(zero), num::QPoly(mpq_class(1))}, prec);
}

}  // namespace

void weil_gap(Run& run) {
    const long prec = std::max(run.prec(), 128L);
    SuiteReport& rep = run.report();

    ++rep.trials;
    ZeroDimVariety z = sqrt2_point(prec);
    auto w = var::weil_height(z, prec);
    RealBall log2 = RealBall::log2_const(prec);
    RealBall tol = RealBall::from_mpq(mpq_class(1, mpz_class("100000000000000000000")), prec);
    run.expect(num::certainly_lt(num::abs(z.height - log2), tol), -1, "h = log 2 for (1 : sqrt2 : 1)",
               json{{"h", io::ball_json(z.height, 30)}});
    run.expect(num::certainly_lt(num::abs(w.h_abs - log2 / RealBall(2)), tol), -1, "h_abs = log 2 / 2 for (1 : sqrt2 : 1)",
               json{{"h_abs", io::ball_json(w.h_abs, 30)}});
    rep.constants = json{{"gap bound", 3}, {"sqrt2 h", io::ball_json(z.height, 25)}, {"sqrt2 h_abs", io::ball_json(w.h_abs, 25)}};

    run.each(run.trials(100), [&](long t, std::mt19937_64& rng) {
        ZeroDimVariety v = gen::variety(rng, 4, prec);
        auto r = var::weil_height(v, prec);
        run.expect(r.height_gap_ok, t, "|h(Z)/n - h_abs| <= 3",
                   json{{"degree", v.degree}, {"gap", io::ball_json(r.gap)}});
        run.track_max("max |h(Z)/n - h_abs|", r.gap);
    });
}

void translation_height(Run& run) {
    const long prec = run.prec();
    const auto params = standard_params();
    SuiteReport& rep = run.report();
    auto k = proj::translation_constants(params, prec);
    RealBall expected = RealBall(6) + RealBall(2) * RealBall::log2_const(prec);
    ++rep.trials;
    RealBall tol = RealBall::from_mpq(mpq_class(1, mpz_class("100000000000000000000")), prec);
    run.expect(k.c4.overlaps(expected) && num::certainly_lt(num::abs(k.c4 - expected), tol), -1,
               "c4 = 6 + 2 log 2 for r = 1, s = 2", json{{"c4", io::ball_json(k.c4)}});
    rep.constants = json{{"params", io::params_json(params)}, {"c4", io::ball_json(k.c4)}};

    run.each(run.trials(50), [&](long t, std::mt19937_64& rng) {
        ZeroDimVariety v = gen::variety(rng, 3, prec);
        long i = gen::integer(rng, -10, 10);
        auto r = var::translate_variety(v, i, params, prec);
        run.expect(r.same_degree, t, "deg tau^i Z = deg Z", json{{"i", i}});
        run.expect(r.height_change_ok, t, "|h(tau^i Z) - h(Z)| <= c4 |i| deg Z",
                   json{{"i", i}, {"degree", v.degree}, {"lhs", io::ball_json(r.lhs)}, {"rhs", io::ball_json(r.rhs)}});
        if (i != 0) run.track_max("max |h(tau^i Z) - h(Z)| / (c4 |i| deg Z)", r.lhs / r.rhs);
    });
}

void variety_separation(Run& run) {
    const long prec = run.prec();
    long pairs_total = 0;
    run.each(run.trials(100), [&](long t, std::mt19937_64& rng) {
        ZeroDimVariety a = gen::variety(rng, 3, prec), b = gen::variety(rng, 3, prec);
        while (var::same_variety(a, b)) b = gen::variety(rng, 3, prec);
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < a.degree; ++i)
            for (int j = 0; j < b.degree; ++j)
                if (gen::integer(rng, 0, 1)) pairs.push_back({i, j});
        if (pairs.empty()) pairs.push_back({0, 0});
        pairs_total += static_cast<long>(pairs.size());
        auto s = var::separation_lower_bound(a, b, pairs, prec);
        run.expect(s.verified, t, "sum log dist >= -7 d d* - d h* - d* h",
                   json{{"d", a.degree}, {"d*", b.degree}, {"sum", io::ball_json(s.sum)}, {"bound", io::ball_json(s.bound)}});
    });
    run.report().stats["pairs checked"] = pairs_total;
}

}  // namespace svt::verify::detail
