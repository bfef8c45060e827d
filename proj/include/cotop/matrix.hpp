#pragma once

#include "cotop/error.hpp"
#include "cotop/field.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace cotop {

template <ExactField F>
using Vector = std::vector<typename F::value_type>;

/// Dense row-major matrix over an exact field.
template <ExactField F>
class Matrix {
public:
    using value_type = typename F::value_type;

    Matrix(F field, std::size_t rows, std::size_t cols)
        : field_(std::move(field))
        , rows_(rows)
        , cols_(cols)
        , entries_(rows * cols, field_.zero())
    {
    }

    Matrix(F field, std::size_t rows, std::size_t cols, std::vector<value_type> entries)
        : field_(std::move(field))
        , rows_(rows)
        , cols_(cols)
        , entries_(std::move(entries))
    {
        if (entries_.size() != rows_ * cols_)
            throw Error(ErrorKind::AmbientMismatch, "matrix entry count does not match shape");
    }

    static Matrix identity(const F& field, std::size_t n)
    {
        Matrix m(field, n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
        return m;
    }

    /// Matrix whose rows are the given vectors (all of length `cols`).
    static Matrix from_rows(const F& field, std::size_t cols, const std::vector<Vector<F>>& rows)
    {
        Matrix m(field, rows.size(), cols);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (rows[r].size() != cols) throw Error(ErrorKind::AmbientMismatch, "row length mismatch");
            for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
        }
        return m;
    }

    const F& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    value_type& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const value_type& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    std::span<const value_type> row(std::size_t r) const { return {entries_.data() + r * cols_, cols_}; }
    Vector<F> row_vector(std::size_t r) const { return Vector<F>(row(r).begin(), row(r).end()); }
    Vector<F> column(std::size_t c) const
    {
        Vector<F> v;
        v.reserve(rows_);
        for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
        return v;
    }

    const std::vector<value_type>& entries() const { return entries_; }

    bool is_zero() const
    {
        for (const auto& x : entries_)
            if (!field_.is_zero(x)) return false;
        return true;
    }

    bool operator==(const Matrix& o) const
    {
        if (rows_ != o.rows_ || cols_ != o.cols_) return false;
        for (std::size_t i = 0; i < entries_.size(); ++i)
            if (!field_.equal(entries_[i], o.entries_[i])) return false;
        return true;
    }

    /// Lexicographic order on (rows, cols, entries) using the field's total order.
    bool operator<(const Matrix& o) const
    {
        if (rows_ != o.rows_) return rows_ < o.rows_;
        if (cols_ != o.cols_) return cols_ < o.cols_;
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            if (field_.less(entries_[i], o.entries_[i])) return true;
            if (field_.less(o.entries_[i], entries_[i])) return false;
        }
        return false;
    }

private:
    F field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<value_type> entries_;
};

template <ExactField F>
Matrix<F> operator*(const Matrix<F>& a, const Matrix<F>& b)
{
    if (a.cols() != b.rows()) throw Error(ErrorKind::AmbientMismatch, "matrix product shape mismatch");
    const F& f = a.field();
    Matrix<F> c(f, a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (f.is_zero(a(i, k))) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                c(i, j) = f.add(c(i, j), f.mul(a(i, k), b(k, j)));
        }
    return c;
}

template <ExactField F>
Matrix<F> operator+(const Matrix<F>& a, const Matrix<F>& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(ErrorKind::AmbientMismatch, "matrix sum shape mismatch");
    Matrix<F> c(a.field(), a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a.field().add(a(i, j), b(i, j));
    return c;
}

template <ExactField F>
Matrix<F> operator-(const Matrix<F>& a, const Matrix<F>& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(ErrorKind::AmbientMismatch, "matrix difference shape mismatch");
    Matrix<F> c(a.field(), a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a.field().sub(a(i, j), b(i, j));
    return c;
}

template <ExactField F>
Matrix<F> scaled(const Matrix<F>& a, const typename F::value_type& s)
{
    Matrix<F> c(a.field(), a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a.field().mul(s, a(i, j));
    return c;
}

template <ExactField F>
Matrix<F> transpose(const Matrix<F>& a)
{
    Matrix<F> t(a.field(), a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
    return t;
}

/// a * v for a column vector v.
template <ExactField F>
Vector<F> mat_vec(const Matrix<F>& a, std::span<const typename F::value_type> v)
{
    if (v.size() != a.cols()) throw Error(ErrorKind::AmbientMismatch, "matrix-vector shape mismatch");
    const F& f = a.field();
    Vector<F> out(a.rows(), f.zero());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (!f.is_zero(v[j])) out[i] = f.add(out[i], f.mul(a(i, j), v[j]));
    return out;
}

template <ExactField F>
Vector<F> mat_vec(const Matrix<F>& a, const Vector<F>& v)
{
    return mat_vec(a, std::span<const typename F::value_type>(v));
}

/// Linear combination sum_i coeffs[i] * mats[i]; all matrices share a shape.
template <ExactField F>
Matrix<F> combine(const F& f, std::size_t rows, std::size_t cols, std::span<const typename F::value_type> coeffs,
                  const std::vector<Matrix<F>>& mats)
{
    Matrix<F> out(f, rows, cols);
    for (std::size_t a = 0; a < mats.size(); ++a) {
        if (f.is_zero(coeffs[a])) continue;
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) out(i, j) = f.add(out(i, j), f.mul(coeffs[a], mats[a](i, j)));
    }
    return out;
}

template <ExactField F>
Vector<F> unit_vector(const F& f, std::size_t n, std::size_t i)
{
    Vector<F> v(n, f.zero());
    v[i] = f.one();
    return v;
}

template <ExactField F>
bool is_zero_vector(const F& f, const Vector<F>& v)
{
    for (const auto& x : v)
        if (!f.is_zero(x)) return false;
    return true;
}

template <ExactField F>
std::string to_string(const F& f, const Vector<F>& v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += f.to_string(v[i]);
    }
    return s + ")";
}

} // namespace cotop
