#include "common.hpp"

#include "svt/interpolation/interpolation.hpp"
#include "svt/polyring/transforms.hpp"

namespace svt::verify::detail {

using G = num::GaussianRational;
using interp::DualBasis;
using poly::QForm;

void recovery(Run& run) {
    long max_order = 0;
    run.each(run.trials(500), [&](long t, std::mt19937_64& rng) {
        auto seq = gen::recurrence(rng);
        const int M = seq.order();
        max_order = std::max<long>(max_order, M);
        auto u = rec::eval_recurrence(seq, M);
        auto a = rec::recover_coefficients(u, seq.nodes);
        run.expect(a == seq.coeffs, t, "certificate polynomials recover A exactly");
        run.expect(rec::recover_by_solve(u, seq.nodes) == seq.coeffs, t, "confluent Vandermonde solve agrees");
        auto check = rec::check_recovery_bound(a, u, seq.nodes);
        run.expect(check.decided && check.ok, t, "max|A| <= a0/(a1 a2) max|u|",
                   json{{"ratio", io::ball_json(check.ratio)}, {"decided", check.decided}});
        if (check.decided) run.track_max("max ratio max|A| / ((a0/(a1 a2)) max|u|)", check.ratio);
        auto k = rec::recovery_constants(seq.nodes);
        run.expect(k.improved_ok, t, "a0 <= (4a)^M", json{{"a0", io::ball_json(k.a0)}, {"a", io::ball_json(k.a)}});
        run.expect(k.classical_ok, t, "a0 < 2 (6a)^M", json{{"a0", io::ball_json(k.a0)}, {"a", io::ball_json(k.a)}});
    });
    run.report().stats["max M"] = max_order;
}

namespace {

QForm linear(long a0, long a1, long a2) {
    QForm q(1);
    q.set_at(0, a0);
    q.set_at(1, a1);
    q.set_at(2, a2);
    return q;
}

}  // namespace

void dual_basis_suite(Run& run) {
    const long prec = run.prec();
    const auto params = standard_params();
    SuiteReport& rep = run.report();

    // L = 1 closed form
    ++rep.trials;
    DualBasis one = interp::dual_basis(1, params, prec);
    std::vector<QForm> expected{linear(0, -2, 1), linear(2, 3, -2), linear(-1, -1, 1)};
    run.expect(one.exact && one.exact_polys == expected, -1, "L = 1 gives -2X1+X2, 2X0+3X1-2X2, -X0-X1+X2");

    for (int L = 0; L <= 5; ++L) {
        ++rep.trials;
        DualBasis a = interp::dual_basis(L, params, prec);
        DualBasis b = interp::dual_basis_falling(L, params, prec);
        run.expect(interp::kronecker_holds(a, params, prec), -1, "Q_j(gamma_i) = delta_ij", json{{"L", L}});
        run.expect(interp::kronecker_holds(b, params, prec), -1, "falling route: Q_j(gamma_i) = delta_ij", json{{"L", L}});
        run.expect(a.exact_polys == b.exact_polys, -1, "monomial and falling routes agree", json{{"L", L}});
    }

    const long c2 = interp::derive_c2(params, 12, prec);
    json lengths = json::array();
    for (int L = 1; L <= 12; ++L) {
        ++rep.trials;
        DualBasis a = interp::dual_basis(L, params, prec);
        RealBall cap = RealBall::from_mpz(interp::c2_power(c2, L), prec);
        RealBall longest(0);
        for (const auto& len : a.lengths) longest = num::max(longest, len);
        run.expect(num::certainly_le(longest, a.bound), -1, "L(Q_j) <= B(L)", json{{"L", L}});
        run.expect(num::certainly_le(longest, cap), -1, "L(Q_j) <= (c2 L)^(3L)",
                   json{{"L", L}, {"max length", io::ball_json(longest)}});
        run.expect(num::certainly_le(a.bound, cap), -1, "B(L) <= (c2 L)^(3L)", json{{"L", L}});
        lengths.push_back(json{{"L", L}, {"max L(Q_j)", io::ball_json(longest, 8)}, {"B(L)", io::ball_json(a.bound, 8)}});
    }

    // random interpolation problems on gamma_0..gamma_{M-1}
    const long per_level = run.trials(200);
    for (int L = 1; L <= 5; ++L) {
        const int M = poly::monomial_count(L);
        const DualBasis basis = interp::dual_basis(L, params, prec);
        for (long k = 0; k < per_level; ++k) {
            const long t = (L - 1) * per_level + k;
            auto rng = run.rng(t);
            ++rep.trials;
            std::vector<mpq_class> values;
            for (int i = 0; i < M; ++i) values.push_back(gen::rational(rng, 20, 7));
            auto ip = interp::interpolate(values, L, params, prec);
            bool hits = ip.exact;
            for (int i = 0; i < M && hits; ++i) hits = ip.exact_poly.eval(proj::gamma(params, i, prec).exact_coords()) == values[i];
            run.expect(hits, t, "interpolant takes the prescribed values", json{{"L", L}});
            run.expect(ip.certified, t, "L(P) <= B(L) max|values|",
                       json{{"L", L}, {"length", io::ball_json(ip.length)}, {"bound", io::ball_json(ip.bound)}});
        }
    }
    rep.constants = json{{"params", io::params_json(params)}, {"c2", c2}, {"lengths", lengths}};
}

void separation(Run& run) {
    const long prec = run.prec();
    const auto params = standard_params();
    const auto consts = interp::derive_constants(params, prec);
    const long per_pair = run.trials(20);
    SuiteReport& rep = run.report();
    std::map<std::string, long> failures_by_entry;
    long inside = 0, trivial = 0, t = 0;
    for (int D = 1; D <= 5; ++D)
        for (int T = 1; T <= poly::monomial_count(D - 1); ++T)
            for (long k = 0; k < per_pair; ++k, ++t) {
                auto rng = run.rng(t);
                ++rep.trials;
                // a quarter of the points sit next to an orbit point, some exactly on it
                proj::ExactTriple z;
                long mode = gen::integer(rng, 0, 7);
                if (mode <= 1) {
                    z = proj::gamma(params, gen::integer(rng, 0, T - 1), prec).exact_coords();
                    if (mode == 1)
                        for (auto& c : z) {
                            mpq_class eps(gen::integer(rng, -5, 5), gen::integer(rng, 100, 1000000));
                            eps.canonicalize();
                            c += eps;
                        }
                    if (sgn(z[0]) == 0 && sgn(z[1]) == 0 && sgn(z[2]) == 0) z = {1, 0, 0};
                } else {
                    z = gen::triple(rng, 6, 3);
                }
                try {
                    auto cert = interp::separation_certificate(proj::ProjectivePoint::exact(z), D, T, params, consts, prec);
                    inside += cert.inside;
                    trivial += cert.trivial;
                    for (const auto& e : cert.chain)
                        if (!e.ok) ++failures_by_entry[e.name];
                    run.expect(cert.verified(), t, "certificate chain",
                               json{{"D", D}, {"T", T}, {"chain", io::chain_json(cert.chain)}});
                } catch (const Error& e) {
                    run.fail(t, "exception", json{{"D", D}, {"T", T}, {"what", e.what()}});
                }
            }
    rep.constants = json{{"params", io::params_json(params)},
                         {"c2", consts.c2},
                         {"c3", io::ball_json(consts.c3)},
                         {"c_gamma", io::ball_json(consts.c_gamma)}};
    rep.stats["inside"] = inside;
    rep.stats["on the orbit"] = trivial;
    json fails = json::object();
    for (const auto& [name, n] : failures_by_entry) fails[name] = n;
    rep.stats["failed entries"] = fails;
}

}  // namespace svt::verify::detail
