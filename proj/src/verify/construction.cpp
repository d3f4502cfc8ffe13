#include "common.hpp"

#include "svt/construction/construction.hpp"
#include "svt/interpolation/interpolation.hpp"
#include "svt/polyring/transforms.hpp"

#include <cmath>
#include <optional>

namespace svt::verify::detail {

using cons::Region;
using poly::QForm;

namespace {

// Integer combination of the ideal-slice basis avoiding X0 and X2 factors, if one turns up.
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

json minpoly_pair(const cons::WitnessReport& w) {
    json out = json::array();
    for (const auto& [a, b] : w.minpolys) out.push_back(json{{"x", io::zpoly_json(a)}, {"y", io::zpoly_json(b)}});
    return out;
}

bool contains_point(const cons::WitnessReport& w, const proj::ExactTriple& z) {
    const QForm target = var::variety_from_rational(z).chow;
    for (const auto& v : w.varieties)
        if (v.chow == target) return true;
    return false;
}

}  // namespace

void witness(Run& run) {
    const long prec = run.prec();
    const auto params = standard_params();
    SuiteReport& rep = run.report();

    // 2X0^2 + X0X1 - 2X0X2 + X1^2
    ++rep.trials;
    QForm conic(2);
    conic.set(0, 0, 2);
    conic.set(1, 0, 1);
    conic.set(0, 1, -2);
    conic.set(2, 0, 1);
    cons::WitnessReport w = cons::algebraicity_witness(conic, params, 2, prec);
    bool exact = w.varieties.size() == 1 && contains_point(w, {1, 0, 1}) && w.minpolys.size() == 1 &&
                 w.minpolys[0].first == num::ZPoly(std::vector<mpz_class>{0, 1}) &&
                 w.minpolys[0].second == num::ZPoly(std::vector<mpz_class>{-1, 1}) && w.match == 0;
    json conic_json{{"varieties", json::array()}, {"minpolys", minpoly_pair(w)}, {"at_infinity", w.at_infinity}, {"match", w.match}};
    for (const auto& v : w.varieties) conic_json["varieties"].push_back(io::variety_json(v, prec));
    run.expect(exact, -1, "conic gives {(1:0:1)} with minimal polynomials x and x - 1", conic_json);
    run.expect(w.vanishing_checked, -1, "conic vanishes on gamma_0..gamma_2");
    rep.constants["conic"] = conic_json;

    long solved = 0, no_form = 0, shared = 0;
    run.each(run.trials(30), [&](long t, std::mt19937_64& rng) {
        int D = static_cast<int>(gen::integer(rng, 2, 3));
        auto p = poly::TranslationParams::make(gen::rational(rng, 5, 3), gen::nonzero_rational(rng, 5, 3),
                                               gen::nonzero_rational(rng, 3, 2), 2 + gen::integer(rng, 0, 1));
        auto f = vanishing_form(rng, D, p);
        if (!f) {
            ++no_form;
            run.skip();
            return;
        }
        cons::WitnessReport r;
        try {
            r = cons::algebraicity_witness(*f, p, D, prec);
        } catch (const PreconditionFailed&) {
            // every combination of shifts shares a factor with P
            ++shared;
            run.skip();
            return;
        }
        ++solved;
        run.expect(r.vanishing_checked, t, "P vanishes on gamma_0..gamma_D");
        run.expect(contains_point(r, {1, p.xi_q(), p.eta_q()}), t, "witness contains gamma_0",
                   json{{"params", io::params_json(p)}, {"P", io::form_json(*f)}});
        run.expect(r.match >= 0, t, "gamma_0 matches a unique variety");
    });
    rep.stats["solved"] = solved;
    rep.stats["no vanishing form"] = no_form;
    rep.stats["shifts share a factor"] = shared;
}

void dyadic(Run& run) {
    SuiteReport& rep = run.report();
    auto window_json = [](const cons::DyadicResult& r) {
        json out = json::array();
        for (const auto& w : r.windows)
            out.push_back(json{{"j", w.j}, {"sum", io::rational_json(w.sum)}, {"bound", io::rational_json(w.bound)}, {"ok", w.ok}});
        return out;
    };

    ++rep.trials;
    auto a = cons::dyadic_select({{{5, -4}}, 1, 0});
    run.expect(a.m == 5 && a.ok(), -1, "single pair gives m = 5", json{{"m", a.m}, {"windows", window_json(a)}});
    ++rep.trials;
    auto b = cons::dyadic_select({{{0, -3}, {1, -3}, {2, -3}, {3, -3}}, mpq_class(3, 2), 2});
    run.expect(b.m == 0 && b.ok(), -1, "flat block gives m = 0", json{{"m", b.m}, {"windows", window_json(b)}});
    ++rep.trials;
    bool threw = false;
    try {
        cons::dyadic_select({{{0, -1}}, 1, 0});
    } catch (const PreconditionFailed&) {
        threw = true;
    }
    run.expect(threw, -1, "total above -2^(k+1) B is rejected");

    run.each(run.trials(1000), [&](long t, std::mt19937_64& rng) {
        cons::DyadicInstance inst;
        inst.k = static_cast<int>(gen::integer(rng, 0, 8));
        const long len = 1L << inst.k;
        const long offset = gen::integer(rng, -100, 100);
        mpq_class total = 0;
        for (long i = 0; i < len; ++i) {
            if (gen::integer(rng, 0, 2) == 0) continue;
            mpq_class d = -abs(gen::rational(rng, 20, 5));
            inst.pairs.push_back({offset + i, d});
            total += d;
        }
        // a few stray points outside the block
        for (long extra = gen::integer(rng, 0, 3); extra > 0; --extra) {
            mpq_class d = -abs(gen::rational(rng, 5, 5));
            inst.pairs.push_back({offset + len + gen::integer(rng, 0, 3 * len), d});
        }
        if (sgn(total) == 0) {
            inst.pairs.push_back({offset, -1});
            total = -1;
        }
        inst.B = -total / (2 * len);
        auto r = cons::dyadic_select(inst);
        run.expect(r.ok() && static_cast<int>(r.windows.size()) == inst.k + 1, t, "every 2^j window carries -2^(j+1) B",
                   json{{"k", inst.k}, {"m", r.m}, {"windows", window_json(r)}});
    });
}

namespace {

mpq_class draw_exponent(std::mt19937_64& rng) {
    mpq_class q(gen::integer(rng, -2, 60), gen::integer(rng, 1, 12));
    q.canonicalize();
    return q;
}

}  // namespace

void region(Run& run) {
    SuiteReport& rep = run.report();
    struct Example {
        mpq_class s, b, n;
        Region want;
    };
    const std::vector<Example> examples{{mpq_class(3, 2), 3, mpq_class(18, 5), Region::theorem},
                                        {1, 2, mpq_class(5, 2), Region::dirichlet},
                                        {mpq_class(6, 5), mpq_class(5, 2), mpq_class(331, 100), Region::gap}};
    for (const auto& e : examples) {
        ++rep.trials;
        Region got = cons::parameter_region(e.s, e.b, e.n).classification;
        run.expect(got == e.want, -1, "worked example",
                   json{{"sigma", io::rational_json(e.s)}, {"beta", io::rational_json(e.b)}, {"nu", io::rational_json(e.n)},
                        {"got", cons::region_name(got)}, {"want", cons::region_name(e.want)}});
    }

    std::map<std::string, long> counts;
    run.each(run.trials(10000), [&](long t, std::mt19937_64& rng) {
        mpq_class s = draw_exponent(rng), b = draw_exponent(rng), n = draw_exponent(rng);
        // one draw in four is pushed onto a boundary surface
        long surface = gen::integer(rng, 0, 7);
        mpq_class base = 2 + b - s;
        if (surface == 0) n = base;
        if (surface == 1) b = s + 1;
        if (surface == 2) b = 2 * s - 1;
        if (surface == 3) {
            if (s >= 1 && s < mpq_class(3, 2) && b > s + 1)
                n = base + (s - 1) * (3 - 2 * s) / (2 + b - 2 * s);
            else
                surface = -1;  // the corrected threshold only exists on this strip
        }
        base = 2 + b - s;

        Region got = cons::parameter_region(s, b, n).classification;
        ++counts[cons::region_name(got)];
        const bool valid = s > 0 && b > 0 && n > 0 && s < 2;
        bool theorem = valid && s >= 1 && b > s + 1;
        if (theorem) {
            mpq_class threshold = base;
            if (s < mpq_class(3, 2)) threshold += (s - 1) * (3 - 2 * s) / (2 + b - 2 * s);
            theorem = n > threshold;
        }
        const bool dir = valid && b > 2 * s - 1 && n < base;
        json where{{"sigma", io::rational_json(s)}, {"beta", io::rational_json(b)}, {"nu", io::rational_json(n)},
                   {"got", cons::region_name(got)}};
        run.expect(!(theorem && dir), t, "theorem and dirichlet inequalities are disjoint", where);
        Region want = !valid ? Region::invalid : theorem ? Region::theorem : dir ? Region::dirichlet : Region::gap;
        run.expect(got == want, t, "classification matches the defining inequalities", where);
        if (surface == 0 || surface == 3) run.expect(got != Region::theorem, t, "nu on a threshold is not theorem", where);
        if (surface == 0) run.expect(got != Region::dirichlet, t, "nu = 2 + beta - sigma is not dirichlet", where);
        if (surface == 1) run.expect(got != Region::theorem, t, "beta = sigma + 1 is not theorem", where);
        if (surface == 2) run.expect(got != Region::dirichlet, t, "beta = 2 sigma - 1 is not dirichlet", where);
    });
    json c = json::object();
    for (const auto& [k, v] : counts) c[k] = v;
    rep.stats["classes"] = c;
}

void homogenization(Run& run) {
    long max_count = 0;
    run.each(run.trials(200), [&](long t, std::mt19937_64& rng) {
        int d = static_cast<int>(gen::integer(rng, 1, 5));
        mpq_class sigma(gen::integer(rng, 2, 5), 3);
        sigma.canonicalize();
        mpq_class r(gen::integer(rng, 1, 5), gen::integer(rng, 1, 3));
        mpq_class s(gen::integer(rng, 2, 3) * (gen::integer(rng, 0, 1) ? 1 : -1));
        r.canonicalize();
        auto params = poly::TranslationParams::make(mpq_class(0), mpq_class(1), r, s);
        poly::BiPoly f;
        do f = gen::bivariate(rng, static_cast<int>(gen::integer(rng, 0, d)), 6);
        while (f.is_zero());
        QForm h = poly::tilde_homogenize(f, d, sigma, params);
        json where{{"D", d}, {"sigma", io::rational_json(sigma)}, {"params", io::params_json(params)}};
        run.expect(h.x0_valuation() == 0, t, "not divisible by X0", where);
        run.expect(h.x2_valuation() == 0, t, "not divisible by X2", where);
        const long count = 4 * poly::floor_power(d, sigma);
        max_count = std::max(max_count, count);
        bool integral = true;
        for (long i = 0; i < count && integral; ++i) {
            const QForm shifted = poly::phi_pow(h, i, params);
            for (const auto& c : shifted.coeffs()) integral = integral && c.get_den() == 1;
        }
        run.expect(integral, t, "Phi^i integral for 0 <= i < 4 floor(D^sigma)", where);
        run.expect(poly::gcd_free(h, d, params).free, t, "gcd_free", where);
    });
    run.report().stats["max orbit length"] = max_count;
}

namespace {

num::AlgebraicNumber square_root(long a) {
    return num::AlgebraicNumber::nearest_root(num::ZPoly(std::vector<mpz_class>{-a, 0, 1}),
                                              num::ComplexBall::from_mpq(mpq_class(3, 2), 64));
}

json map_row(const std::string& pilot, const cons::AuxSearchResult& r) {
    json row{{"pilot", pilot}, {"D", r.D}, {"status", cons::status_name(r.status)}, {"kernel_dim", r.kernel_dim}, {"note", r.note}};
    if (r.status == cons::SearchStatus::found) {
        row["norm_margin"] = io::ball_json(r.certificate.norm_margin, 10);
        row["value_margin"] = r.certificate.exact_zero ? json("exact zero") : io::ball_json(r.certificate.value_margin, 10);
    }
    return row;
}

}  // namespace

void dirichlet(Run& run) {
    const long prec = run.prec();
    SuiteReport& rep = run.report();
    json map = json::array();

    // rational pilot: 21 monomials against 20 points leaves a kernel
    ++rep.trials;
    const mpq_class beta_q(3), nu_q(5, 2);
    auto q = cons::dirichlet_search(5, 1, beta_q, nu_q, standard_params(), prec);
    run.expect(q.status == cons::SearchStatus::found && q.certificate.exact_zero && q.kernel_dim >= 1, -1,
               "exactly vanishing polynomial for D = 5", io::aux_json(q));
    map.push_back(map_row("rational", q));

    auto irr = poly::TranslationParams::make(square_root(2), square_root(3), 1, 2);
    const mpq_class beta(2), nu(12, 5);
    for (int D : {8, 12}) {
        ++rep.trials;
        auto r = cons::dirichlet_search(D, 1, beta, nu, irr, prec);
        if (r.status == cons::SearchStatus::found) {
            // independent re-check at twice a precision that covers e^(D^nu)
            long p = 2 * (prec + static_cast<long>(std::pow(D, nu.get_d()) / std::log(2.0)) + 64 * D + 512);
            auto again = cons::certify_aux(r.poly, D, 1, beta, nu, irr, p);
            run.expect(again.ok(), D, "found polynomial re-verifies at doubled precision", io::aux_json(r));
        }
        map.push_back(map_row("sqrt2-sqrt3", r));
    }
    rep.constants = json{{"rational", json{{"params", io::params_json(standard_params())}, {"sigma", "1"}, {"beta", "3"}, {"nu", "5/2"}}},
                         {"irrational", json{{"params", io::params_json(irr)}, {"sigma", "1"}, {"beta", "2"}, {"nu", "12/5"}}}};
    rep.stats["success map"] = map;
}

}  // namespace svt::verify::detail
