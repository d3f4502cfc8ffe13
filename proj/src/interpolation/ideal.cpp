#include "svt/interpolation/interpolation.hpp"

#include "svt/polyring/transforms.hpp"

#include "orbit.hpp"

namespace svt::interp {

using namespace detail;

int IdealSlice::dimension() const {
    if (!exact.empty()) return static_cast<int>(exact.size());
    if (!nf.empty()) return static_cast<int>(nf.size());
    return static_cast<int>(ball.size());
}

namespace {

// First nonzero coefficient in graded-lex order made positive.
QForm sign_normalized(QForm q) {
    for (const auto& c : q.coeffs())
        if (sgn(c) != 0) return sgn(c) < 0 ? -q : q;
    return q;
}

struct FieldCoords {
    num::FieldPtr field;
    num::NfElem xi, eta;
};

// Expresses xi and eta in one number field.
FieldCoords common_field(const TranslationParams& params) {
    using num::AlgebraicNumber;
    auto as_alg = [](const poly::Scalar& x) -> std::optional<AlgebraicNumber> {
        if (auto a = std::get_if<AlgebraicNumber>(&x)) return *a;
        return std::nullopt;
    };
    auto xa = as_alg(params.xi), ea = as_alg(params.eta);
    FieldCoords fc;
    if (xa && ea) {
        num::Compositum c = num::compositum(*xa, *ea);
        fc.field = c.field;
        fc.xi = c.a;
        fc.eta = c.b;
    } else if (xa) {
        fc.field = num::make_field(xa->minpoly, *xa);
        fc.xi = num::NfElem::generator(fc.field);
        fc.eta = num::NfElem(params.eta_q());
    } else {
        fc.field = num::make_field(ea->minpoly, *ea);
        fc.xi = num::NfElem(params.xi_q());
        fc.eta = num::NfElem::generator(fc.field);
    }
    return fc;
}

}  // namespace

IdealSlice ideal_slice_basis(int D, int T, const TranslationParams& params, long prec) {
    if (D < 0) throw PreconditionFailed("negative degree");
    if (T < 1) throw PreconditionFailed("T must be positive");
    IdealSlice out;
    out.D = D;
    out.T = T;
    const int n = monomial_count(D);
    if (params.rational()) {
        auto basis = num::kernel_basis(evaluation_matrix<mpq_class>(D, T, exact_orbit(params, T)), n);
        for (const auto& v : basis) {
            QForm q(D);
            for (int idx = 0; idx < n; ++idx) q.set_at(idx, v[idx]);
            out.exact.push_back(sign_normalized(q));
        }
        return out;
    }
    if (params.exact()) {
        FieldCoords fc = common_field(params);
        out.field = fc.field;
        std::vector<std::array<num::NfElem, 3>> pts;
        for (int i = 0; i < T; ++i)
            pts.push_back({num::NfElem(1), fc.xi + num::NfElem(mpq_class(i) * params.r),
                           fc.eta * num::NfElem(poly::rational_pow(params.s, i))});
        auto basis = num::kernel_basis(evaluation_matrix<num::NfElem>(D, T, pts), n);
        for (const auto& v : basis) {
            NfForm q(D);
            for (int idx = 0; idx < n; ++idx) q.set_at(idx, v[idx]);
            out.nf.push_back(q);
        }
        return out;
    }
    // Ball parameters: the rank decision is numerical, so the result is not certified.
    out.certified = false;
    long wp = prec + 8L * n;
    auto basis = num::kernel_basis(evaluation_matrix<ComplexBall>(D, T, ball_orbit(params, T, wp)), n);
    for (const auto& v : basis) {
        BallForm q(D);
        for (int idx = 0; idx < n; ++idx) q.set_at(idx, v[idx]);
        out.ball.push_back(q);
    }
    return out;
}

}  // namespace svt::interp
