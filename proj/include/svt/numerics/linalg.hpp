#pragma once

#include "svt/numerics/ball.hpp"
#include "svt/numerics/error.hpp"
#include "svt/numerics/poly.hpp"

#include <vector>

namespace svt::num {

template <class F>
using Matrix = std::vector<std::vector<F>>;

// Pivot policy: exact fields take the first nonzero entry.
template <class F>
struct PivotTraits {
    static bool usable(const F& x) { return !is_zero(x); }
    static bool better(const F&, const F&) { return false; }
};

// Balls take the entry of largest modulus among those certainly nonzero.
template <>
struct PivotTraits<ComplexBall> {
    static bool usable(const ComplexBall& x) { return !x.contains_zero(); }
    static bool better(const ComplexBall& a, const ComplexBall& b) { return a.mid_abs_upper() > b.mid_abs_upper(); }
};

// In-place reduced row echelon form over the first ncols columns (later columns are carried
// along); returns pivot columns in order.
template <class F>
std::vector<int> rref(Matrix<F>& a, int ncols) {
    using T = PivotTraits<F>;
    std::vector<int> pivots;
    const int nrows = static_cast<int>(a.size());
    int row = 0;
    for (int col = 0; col < ncols && row < nrows; ++col) {
        int best = -1;
        for (int i = row; i < nrows; ++i) {
            if (!T::usable(a[i][col])) continue;
            if (best < 0 || T::better(a[i][col], a[best][col])) best = i;
            if constexpr (!std::is_same_v<F, ComplexBall>) break;
        }
        if (best < 0) continue;
        std::swap(a[row], a[best]);
        const int width = static_cast<int>(a[row].size());
        F inv = F(1) / a[row][col];
        for (int j = col; j < width; ++j) a[row][j] = a[row][j] * inv;
        for (int i = 0; i < nrows; ++i) {
            if (i == row || is_zero(a[i][col])) continue;
            F f = a[i][col];
            for (int j = col; j < width; ++j) a[i][j] = a[i][j] - f * a[row][j];
            a[i][col] = F(0);
        }
        a[row][col] = F(1);
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

// Canonical kernel basis from the RREF: one vector per free column, with a 1 in that column.
template <class F>
std::vector<std::vector<F>> kernel_basis(Matrix<F> a, int ncols) {
    std::vector<int> pivots = rref(a, ncols);
    std::vector<bool> is_pivot(ncols, false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<std::vector<F>> basis;
    for (int free = 0; free < ncols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<F> v(ncols, F(0));
        v[free] = F(1);
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

// Solves a square nonsingular system a x = b.
template <class F>
std::vector<F> solve_square(const Matrix<F>& a, const std::vector<F>& b) {
    const int n = static_cast<int>(a.size());
    Matrix<F> aug = a;
    for (int i = 0; i < n; ++i) aug[i].push_back(b[i]);
    std::vector<int> pivots = rref(aug, n);
    if ((int)pivots.size() < n) {
        if constexpr (std::is_same_v<F, ComplexBall>)
            throw PrecisionExhausted("linear system not certified nonsingular");
        else
            throw PreconditionFailed("singular linear system");
    }
    std::vector<F> x(n);
    for (int i = 0; i < n; ++i) x[i] = aug[i][n];
    return x;
}

template <class F>
Matrix<F> inverse(const Matrix<F>& a) {
    const int n = static_cast<int>(a.size());
    Matrix<F> aug = a;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) aug[i].push_back(i == j ? F(1) : F(0));
    std::vector<int> pivots = rref(aug, n);
    if ((int)pivots.size() < n) {
        if constexpr (std::is_same_v<F, ComplexBall>)
            throw PrecisionExhausted("matrix not certified invertible");
        else
            throw PreconditionFailed("singular matrix");
    }
    Matrix<F> inv(n, std::vector<F>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
    return inv;
}

// Determinant by Gaussian elimination over a field.
template <class F>
F determinant(Matrix<F> a) {
    using T = PivotTraits<F>;
    const int n = static_cast<int>(a.size());
    F det(1);
    for (int col = 0; col < n; ++col) {
        int best = -1;
        for (int i = col; i < n; ++i) {
            if (!T::usable(a[i][col])) continue;
            if (best < 0 || T::better(a[i][col], a[best][col])) best = i;
            if constexpr (!std::is_same_v<F, ComplexBall>) break;
        }
        if (best < 0) {
            if constexpr (std::is_same_v<F, ComplexBall>)
                throw PrecisionExhausted("determinant enclosure contains zero");
            else
                return F(0);
        }
        if (best != col) {
            std::swap(a[col], a[best]);
            det = -det;
        }
        det = det * a[col][col];
        F inv = F(1) / a[col][col];
        for (int i = col + 1; i < n; ++i) {
            if (is_zero(a[i][col])) continue;
            F f = a[i][col] * inv;
            for (int j = col; j < n; ++j) a[i][j] = a[i][j] - f * a[col][j];
        }
    }
    return det;
}

}  // namespace svt::num
