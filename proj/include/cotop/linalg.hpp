#pragma once

#include "cotop/matrix.hpp"

#include <vector>

namespace cotop {

/// Reduced row-echelon form with zero rows removed.
template <ExactField F>
struct Echelon {
    Matrix<F> reduced;
    std::size_t rank = 0;
    std::vector<std::size_t> pivots; ///< pivot column of each row, strictly increasing
};

template <ExactField F>
Echelon<F> rref(Matrix<F> m)
{
    const F& f = m.field();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t sel = r;
        while (sel < m.rows() && f.is_zero(m(sel, c))) ++sel;
        if (sel == m.rows()) continue;
        if (sel != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(r, j));
        auto inv = f.inv(m(r, c));
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = f.mul(m(r, j), inv);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || f.is_zero(m(i, c))) continue;
            auto factor = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) = f.sub(m(i, j), f.mul(factor, m(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    Matrix<F> reduced(f, r, m.cols());
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) reduced(i, j) = m(i, j);
    return {std::move(reduced), r, std::move(pivots)};
}

template <ExactField F>
std::size_t rank(const Matrix<F>& m)
{
    return rref(m).rank;
}

/// Basis (as row vectors) of {v : m v = 0}, one vector per free column.
template <ExactField F>
std::vector<Vector<F>> null_space_basis(const Matrix<F>& m)
{
    const F& f = m.field();
    auto e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<Vector<F>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vector<F> v(m.cols(), f.zero());
        v[free] = f.one();
        for (std::size_t i = 0; i < e.rank; ++i) v[e.pivots[i]] = f.neg(e.reduced(i, free));
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Inverse of a square matrix, or nothing when singular.
template <ExactField F>
std::optional<Matrix<F>> inverse(const Matrix<F>& a)
{
    if (a.rows() != a.cols()) throw Error(ErrorKind::AmbientMismatch, "inverse of non-square matrix");
    const std::size_t n = a.rows();
    const F& f = a.field();
    Matrix<F> aug(f, n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n + i) = f.one();
    }
    auto e = rref(aug);
    if (e.rank < n || (n > 0 && e.pivots[n - 1] != n - 1)) return std::nullopt;
    Matrix<F> inv(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
    return inv;
}

} // namespace cotop
