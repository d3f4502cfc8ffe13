#include "svt/construction/construction.hpp"

#include "svt/polyring/transforms.hpp"
#include "svt/projective/point.hpp"

namespace svt::cons {

namespace {

bool vanishes_at(const QForm& f, const std::array<num::NfElem, 3>& x) {
    return num::is_zero(f.eval<num::NfElem>(x, [](const mpq_class& c) { return num::NfElem(c); }));
}

}  // namespace

WitnessReport algebraicity_witness(const QForm& p, const TranslationParams& params, int dcheck, long prec) {
    if (p.is_zero()) throw PreconditionFailed("zero form");
    if (p.x0_valuation() > 0) throw PreconditionFailed("P is divisible by X0");
    if (p.x2_valuation() > 0) throw PreconditionFailed("P is divisible by X2");
    if (dcheck < 1) throw PreconditionFailed("need at least one shift");

    WitnessReport out;
    std::vector<QForm> shifts;
    for (int j = 0; j <= dcheck; ++j) shifts.push_back(poly::phi_pow(p, j, params));

    out.vanishing_checked = true;
    for (int i = 0; i <= dcheck; ++i) {
        proj::ProjectivePoint g = proj::gamma(params, i, prec);
        if (g.is_exact()) {
            out.vanishing_checked = out.vanishing_checked && sgn(p.eval(g.exact_coords())) == 0;
        } else {
            num::ComplexBall v = poly::to_ball_form(p, prec).eval(g.balls(prec));
            out.vanishing_checked = out.vanishing_checked && v.contains_zero();
        }
    }

    // A combination of the shifts coprime to P; the common zeros of all shifts lie in Z(P, F).
    std::optional<QForm> partner;
    for (long t = 1; t <= 64 && !partner; ++t) {
        QForm f(p.degree());
        mpq_class w = 1;
        for (int j = 1; j <= dcheck; ++j) {
            f = f + w * shifts[j];
            w *= t;
        }
        if (!f.is_zero() && poly::form_gcd(p, f).degree() == 0) partner = f;
    }
    if (!partner) throw PreconditionFailed("P shares a factor with every combination of its shifts");

    var::SolveReport solved = var::zero_dim_solve(p, *partner, 10, prec);
    for (const auto& v : solved.varieties) {
        bool all = true;
        for (const auto& f : shifts) all = all && vanishes_at(f, v.coords);
        if (!all) continue;
        if (num::is_zero(v.coords[0])) {
            ++out.at_infinity;
            continue;
        }
        out.varieties.push_back(v);
        out.minpolys.push_back({num::minimal_polynomial(v.coords[1] / v.coords[0]),
                                num::minimal_polynomial(v.coords[2] / v.coords[0])});
    }

    proj::ProjectivePoint target = proj::gamma(params, 0, prec);
    int hits = 0;
    for (size_t idx = 0; idx < out.varieties.size(); ++idx) {
        bool hit = false;
        for (const auto& pt : out.varieties[idx].conjugate_points(prec))
            hit = hit || proj::dist(proj::ProjectivePoint::from_balls(pt), target, prec).contains_zero();
        if (hit) {
            ++hits;
            out.match = static_cast<int>(idx);
        }
    }
    if (hits != 1) out.match = -1;
    return out;
}

}  // namespace svt::cons
