#pragma once

/**
 * @file subspace.hpp
 * @brief Canonical subspaces of k^n.
 *
 * A subspace is stored as the reduced row-echelon basis of any spanning set,
 * so two subspaces are equal exactly when their bases are identical. Every
 * submodule-like object of the library (subbicomodules, ideals, kernels,
 * images) is a Subspace of some coordinate space.
 */

#include "cotop/linalg.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

namespace cotop {

template <ExactField F>
class Subspace {
public:
    using value_type = typename F::value_type;

    /// Row space of `spanning` (any shape with `cols == ambient_dim`).
    explicit Subspace(const Matrix<F>& spanning)
        : basis_(spanning.field(), 0, spanning.cols())
    {
        auto e = rref(spanning);
        basis_ = std::move(e.reduced);
        pivots_ = std::move(e.pivots);
    }

    static Subspace zero(const F& f, std::size_t n) { return Subspace(Matrix<F>(f, 0, n)); }
    static Subspace full(const F& f, std::size_t n) { return Subspace(Matrix<F>::identity(f, n)); }
    static Subspace span(const F& f, std::size_t n, const std::vector<Vector<F>>& vectors)
    {
        return Subspace(Matrix<F>::from_rows(f, n, vectors));
    }

    const F& field() const { return basis_.field(); }
    std::size_t ambient_dim() const { return basis_.cols(); }
    std::size_t dim() const { return basis_.rows(); }
    bool is_zero() const { return dim() == 0; }
    bool is_full() const { return dim() == ambient_dim(); }

    const Matrix<F>& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    Vector<F> basis_vector(std::size_t i) const { return basis_.row_vector(i); }
    std::vector<Vector<F>> basis_vectors() const
    {
        std::vector<Vector<F>> out;
        for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_vector(i));
        return out;
    }

    /// v minus its projection along the echelon basis; zero iff v lies in the subspace.
    Vector<F> reduce(Vector<F> v) const
    {
        check_len(v.size());
        const F& f = field();
        for (std::size_t i = 0; i < dim(); ++i) {
            auto c = v[pivots_[i]];
            if (f.is_zero(c)) continue;
            for (std::size_t j = 0; j < ambient_dim(); ++j) v[j] = f.sub(v[j], f.mul(c, basis_(i, j)));
        }
        return v;
    }

    bool contains(const Vector<F>& v) const { return is_zero_vector(field(), reduce(v)); }

    bool contains(const Subspace& o) const
    {
        check_same(o);
        if (o.dim() > dim()) return false;
        for (std::size_t i = 0; i < o.dim(); ++i)
            if (!contains(o.basis_vector(i))) return false;
        return true;
    }

    /// Coordinates of v in the echelon basis, if v is a member.
    std::optional<Vector<F>> coordinates(const Vector<F>& v) const
    {
        if (!contains(v)) return std::nullopt;
        Vector<F> c;
        c.reserve(dim());
        for (auto p : pivots_) c.push_back(v[p]);
        return c;
    }

    /// Vector with the given coordinates in the echelon basis.
    Vector<F> from_coordinates(const Vector<F>& coords) const
    {
        const F& f = field();
        Vector<F> v(ambient_dim(), f.zero());
        for (std::size_t i = 0; i < dim(); ++i)
            for (std::size_t j = 0; j < ambient_dim(); ++j) v[j] = f.add(v[j], f.mul(coords[i], basis_(i, j)));
        return v;
    }

    /// Columns that are not pivots; the corresponding unit vectors span a complement.
    std::vector<std::size_t> free_columns() const
    {
        std::vector<std::size_t> out;
        std::size_t k = 0;
        for (std::size_t c = 0; c < ambient_dim(); ++c) {
            if (k < pivots_.size() && pivots_[k] == c) ++k;
            else out.push_back(c);
        }
        return out;
    }

    bool operator==(const Subspace& o) const { return basis_ == o.basis_; }
    /// Canonical order: by dimension, then by echelon basis entries.
    bool operator<(const Subspace& o) const
    {
        if (dim() != o.dim()) return dim() < o.dim();
        return basis_ < o.basis_;
    }

    std::string to_string() const
    {
        std::string s = "<";
        for (std::size_t i = 0; i < dim(); ++i) {
            if (i) s += ", ";
            s += cotop::to_string(field(), basis_vector(i));
        }
        return s + ">";
    }

private:
    void check_len(std::size_t n) const
    {
        if (n != ambient_dim()) throw Error(ErrorKind::AmbientMismatch, "vector length does not match ambient dimension");
    }
    void check_same(const Subspace& o) const
    {
        if (o.ambient_dim() != ambient_dim()) throw Error(ErrorKind::AmbientMismatch, "subspaces live in different ambient spaces");
    }

    Matrix<F> basis_;
    std::vector<std::size_t> pivots_;
};

/// Null space {v : m v = 0} as a subspace of k^{cols}.
template <ExactField F>
Subspace<F> kernel(const Matrix<F>& m)
{
    return Subspace<F>::span(m.field(), m.cols(), null_space_basis(m));
}

template <ExactField F>
Subspace<F> sum(const Subspace<F>& a, const Subspace<F>& b)
{
    if (a.ambient_dim() != b.ambient_dim()) throw Error(ErrorKind::AmbientMismatch, "sum of subspaces in different ambients");
    auto rows = a.basis_vectors();
    auto more = b.basis_vectors();
    rows.insert(rows.end(), more.begin(), more.end());
    return Subspace<F>::span(a.field(), a.ambient_dim(), rows);
}

/// a ∩ b via the relation system x·A = y·B on the stacked bases.
template <ExactField F>
Subspace<F> intersection(const Subspace<F>& a, const Subspace<F>& b)
{
    if (a.ambient_dim() != b.ambient_dim())
        throw Error(ErrorKind::AmbientMismatch, "intersection of subspaces in different ambients");
    const F& f = a.field();
    const std::size_t n = a.ambient_dim();
    if (a.is_zero() || b.is_zero()) return Subspace<F>::zero(f, n);
    // columns: [A^T | -B^T], kernel vectors (x, y) satisfy x·A = y·B
    Matrix<F> rel(f, n, a.dim() + b.dim());
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < a.dim(); ++i) rel(j, i) = a.basis()(i, j);
        for (std::size_t i = 0; i < b.dim(); ++i) rel(j, a.dim() + i) = f.neg(b.basis()(i, j));
    }
    std::vector<Vector<F>> vectors;
    for (const auto& xy : null_space_basis(rel)) {
        Vector<F> v(n, f.zero());
        for (std::size_t i = 0; i < a.dim(); ++i)
            for (std::size_t j = 0; j < n; ++j) v[j] = f.add(v[j], f.mul(xy[i], a.basis()(i, j)));
        vectors.push_back(std::move(v));
    }
    return Subspace<F>::span(f, n, vectors);
}

/// Rows spanning the annihilator of y under the dot product; their joint kernel is y.
template <ExactField F>
Matrix<F> annihilator_rows(const Subspace<F>& y)
{
    auto perp = null_space_basis(y.basis());
    return Matrix<F>::from_rows(y.field(), y.ambient_dim(), perp);
}

/// f^{-1}(y) = {v : f v ∈ y}, realized as ker(q ∘ f) with ker q = y.
template <ExactField F>
Subspace<F> preimage(const Matrix<F>& f, const Subspace<F>& y)
{
    if (f.rows() != y.ambient_dim()) throw Error(ErrorKind::AmbientMismatch, "preimage target dimension mismatch");
    auto q = annihilator_rows(y);
    if (q.rows() == 0) return Subspace<F>::full(f.field(), f.cols());
    return kernel(q * f);
}

/// f(x) = span{f v : v ∈ basis(x)}.
template <ExactField F>
Subspace<F> image(const Matrix<F>& f, const Subspace<F>& x)
{
    if (f.cols() != x.ambient_dim()) throw Error(ErrorKind::AmbientMismatch, "image source dimension mismatch");
    std::vector<Vector<F>> vs;
    for (std::size_t i = 0; i < x.dim(); ++i) vs.push_back(mat_vec(f, x.basis_vector(i)));
    return Subspace<F>::span(f.field(), f.rows(), vs);
}

/// Whether m maps x into itself.
template <ExactField F>
bool is_stable(const Matrix<F>& m, const Subspace<F>& x)
{
    for (std::size_t i = 0; i < x.dim(); ++i)
        if (!x.contains(mat_vec(m, x.basis_vector(i)))) return false;
    return true;
}

} // namespace cotop
