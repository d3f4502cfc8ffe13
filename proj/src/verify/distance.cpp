#include "common.hpp"

#include "svt/projective/point.hpp"

namespace svt::verify::detail {

namespace {

using proj::ExactTriple;
using proj::ProjectivePoint;

// Half the draws sit close to the first point, where the inequalities are tight.
ExactTriple near_or_random(std::mt19937_64& rng, const ExactTriple& a) {
    if (gen::integer(rng, 0, 1) == 0) return gen::triple(rng, 6, 3);
    ExactTriple b = a;
    mpq_class eps(1, gen::integer(rng, 10, 100000));
    for (auto& c : b) c += eps * gen::rational(rng, 3, 2);
    if (sgn(b[0]) == 0 && sgn(b[1]) == 0 && sgn(b[2]) == 0) return a;
    return b;
}

mpq_class dist_q(const ExactTriple& a, const ExactTriple& b) {
    return *proj::dist_exact(ProjectivePoint::exact(a), ProjectivePoint::exact(b));
}

}  // namespace

void distance_triangle(Run& run) {
    const long prec = run.prec();
    long translation_checks = 0;
    run.each(run.trials(10000), [&](long t, std::mt19937_64& rng) {
        mpq_class r = gen::nonzero_rational(rng, 5, 3), s;
        do s = gen::nonzero_rational(rng, 6, 2);
        while (abs(s) <= 1);
        ExactTriple a = gen::triple(rng, 6, 3);
        ExactTriple b = near_or_random(rng, a);
        ExactTriple c = near_or_random(rng, b);

        mpq_class ab = dist_q(a, b), bc = dist_q(b, c), ac = dist_q(a, c);
        run.expect(ac <= 2 * ab + bc, t, "dist(a, c) <= 2 dist(a, b) + dist(b, c)",
                   json{{"ac", io::rational_json(ac)}, {"ab", io::rational_json(ab)}, {"bc", io::rational_json(bc)}});
        if (ab > 0) run.track_max("max dist(a, c) / (2 dist(a, b) + dist(b, c))", RealBall::from_mpq(ac / (2 * ab + bc), prec));

        long j = gen::integer(rng, -20, 20);
        if (sgn(ab) == 0) {
            run.skip();  // log dist is -infinity
            return;
        }
        ++translation_checks;
        proj::ConstantsTable k = proj::translation_constants(r, s, prec);
        ProjectivePoint ta = proj::tau_pow(ProjectivePoint::exact(a), j, r, s, prec);
        ProjectivePoint tb = proj::tau_pow(ProjectivePoint::exact(b), j, r, s, prec);
        mpq_class moved = *proj::dist_exact(ta, tb);
        if (j == 0) {
            run.expect(moved == ab, t, "tau^0 keeps the distance");
            return;
        }
        RealBall lhs = num::abs(num::log(RealBall::from_mpq(moved, prec)) - num::log(RealBall::from_mpq(ab, prec)));
        RealBall rhs = k.c1 * RealBall(std::labs(j));
        run.expect(num::certainly_le(lhs, rhs), t, "|log dist(tau^j a, tau^j b) - log dist(a, b)| <= c1 |j|",
                   json{{"j", j}, {"r", io::rational_json(r)}, {"s", io::rational_json(s)}, {"lhs", io::ball_json(lhs)},
                        {"rhs", io::ball_json(rhs)}});
        run.track_max("max |log dist change| / (c1 |j|)", lhs / rhs);
    });
    auto k = proj::translation_constants(mpq_class(1), mpq_class(2), prec);
    run.report().constants = json{{"c1 (r=1, s=2)", io::ball_json(k.c1)}, {"c1", "3 log c per drawn (r, s)"}};
    run.report().stats["translation checks"] = translation_checks;
}

void distance_lipschitz(Run& run) {
    const long prec = run.prec();
    run.each(run.trials(10000), [&](long t, std::mt19937_64& rng) {
        int d = static_cast<int>(gen::integer(rng, 1, 6));
        poly::QForm p;
        do p = gen::form(rng, d, 10);
        while (p.is_zero());
        ExactTriple a = gen::triple(rng, 6, 3);
        ExactTriple b = near_or_random(rng, a);
        // norm-one representatives
        ExactTriple na = ProjectivePoint::exact(a).normalized(prec).exact_coords();
        ExactTriple nb = ProjectivePoint::exact(b).normalized(prec).exact_coords();
        mpq_class pa = abs(p.eval(na)), pb = abs(p.eval(nb));
        mpq_class rhs = pb + mpq_class(d) * p.length() * dist_q(na, nb);
        run.expect(pa <= rhs, t, "|P(a)| <= |P(b)| + D L(P) dist(a, b)",
                   json{{"D", d}, {"lhs", io::rational_json(pa)}, {"rhs", io::rational_json(rhs)}});
        if (sgn(rhs) > 0) run.track_max("max |P(a)| / (|P(b)| + D L(P) dist(a, b))", RealBall::from_mpq(pa / rhs, prec));
    });
}

}  // namespace svt::verify::detail
