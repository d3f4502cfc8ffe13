#pragma once

// Shared helpers for the interpolation sources.

#include "svt/interpolation/interpolation.hpp"
#include "svt/numerics/linalg.hpp"

namespace svt::interp::detail {

using poly::Exponent;
using poly::monomial_at;
using poly::monomial_count;

// Evaluation matrix E[i][idx] = (monomial idx)(gamma_i).
template <class C>
inline num::Matrix<C> evaluation_matrix(int L, int rows, const std::vector<std::array<C, 3>>& pts) {
    const int n = monomial_count(L);
    num::Matrix<C> e(rows, std::vector<C>(n, C(0)));
    for (int i = 0; i < rows; ++i) {
        std::array<std::vector<C>, 3> pw;
        for (int k = 0; k < 3; ++k) {
            pw[k].push_back(C(1));
            for (int t = 1; t <= L; ++t) pw[k].push_back(pw[k].back() * pts[i][k]);
        }
        for (int idx = 0; idx < n; ++idx) {
            Exponent ex = monomial_at(L, idx);
            e[i][idx] = pw[0][ex.e0] * pw[1][ex.e1] * pw[2][ex.e2];
        }
    }
    return e;
}

inline std::vector<std::array<mpq_class, 3>> exact_orbit(const TranslationParams& params, int count) {
    std::vector<std::array<mpq_class, 3>> pts;
    for (int i = 0; i < count; ++i) pts.push_back(proj::gamma(params, i).exact_coords());
    return pts;
}

inline std::vector<std::array<ComplexBall, 3>> ball_orbit(const TranslationParams& params, int count, long prec) {
    std::vector<std::array<ComplexBall, 3>> pts;
    for (int i = 0; i < count; ++i) pts.push_back(proj::gamma(params, i, prec).balls(prec));
    return pts;
}

}  // namespace svt::interp::detail
