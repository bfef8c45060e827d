#pragma once

/**
 * @file coalgebra.hpp
 * @brief Finite-dimensional coalgebras given by structure constants, and
 *        their convolution duals.
 *
 * Basis c_0..c_{n-1}; comultiplication Δ(c_i) = Σ_{j,k} μ[i][j][k] c_j ⊗ c_k
 * and counit ε(c_i) = ε_i. Dual elements are coordinate vectors on the dual
 * basis c^0..c^{n-1}.
 */

#include "cotop/matrix.hpp"

#include <string>
#include <tuple>
#include <vector>

namespace cotop {

/// One violated identity, with the basis indices at which it fails.
struct Violation {
    std::string identity;
    std::vector<std::size_t> indices;
    std::string detail;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
    void add(std::string identity, std::vector<std::size_t> idx, std::string detail = {})
    {
        violations.push_back({std::move(identity), std::move(idx), std::move(detail)});
    }
    void merge(const ValidationReport& o, const std::string& prefix = {})
    {
        for (const auto& v : o.violations) violations.push_back({prefix + v.identity, v.indices, v.detail});
    }
};

/// Sparse structure-constant entry (i, j, k, coeff).
template <ExactField F>
struct Triple {
    std::size_t i, j, k;
    typename F::value_type coeff;
};

template <ExactField F>
class Coalgebra {
public:
    using value_type = typename F::value_type;

    Coalgebra(F field, std::size_t dim)
        : field_(std::move(field))
        , dim_(dim)
        , mu_(dim * dim * dim, field_.zero())
        , counit_(dim, field_.zero())
    {
        if (dim == 0) throw Error(ErrorKind::InvalidCoalgebra, "coalgebra dimension must be positive");
    }

    Coalgebra(F field, std::size_t dim, const std::vector<Triple<F>>& delta, Vector<F> counit)
        : Coalgebra(std::move(field), dim)
    {
        if (counit.size() != dim) throw Error(ErrorKind::InvalidCoalgebra, "counit length differs from dimension");
        counit_ = std::move(counit);
        for (const auto& t : delta) {
            if (t.i >= dim || t.j >= dim || t.k >= dim) throw Error(ErrorKind::InvalidCoalgebra, "delta index out of range");
            auto& slot = mu_[index(t.i, t.j, t.k)];
            slot = field_.add(slot, t.coeff);
        }
    }

    const F& field() const { return field_; }
    std::size_t dim() const { return dim_; }

    const value_type& mu(std::size_t i, std::size_t j, std::size_t k) const { return mu_[index(i, j, k)]; }
    value_type& mu(std::size_t i, std::size_t j, std::size_t k) { return mu_[index(i, j, k)]; }
    const value_type& counit(std::size_t i) const { return counit_[i]; }
    value_type& counit(std::size_t i) { return counit_[i]; }
    const Vector<F>& counit_vector() const { return counit_; }

    /// Nonzero structure constants in (i, j, k) order.
    std::vector<Triple<F>> delta_triples() const
    {
        std::vector<Triple<F>> out;
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j)
                for (std::size_t k = 0; k < dim_; ++k)
                    if (!field_.is_zero(mu(i, j, k))) out.push_back({i, j, k, mu(i, j, k)});
        return out;
    }

    bool is_cocommutative() const
    {
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j)
                for (std::size_t k = 0; k < dim_; ++k)
                    if (!field_.equal(mu(i, j, k), mu(i, k, j))) return false;
        return true;
    }

    bool operator==(const Coalgebra& o) const
    {
        if (!(field_ == o.field_) || dim_ != o.dim_) return false;
        for (std::size_t t = 0; t < mu_.size(); ++t)
            if (!field_.equal(mu_[t], o.mu_[t])) return false;
        for (std::size_t t = 0; t < dim_; ++t)
            if (!field_.equal(counit_[t], o.counit_[t])) return false;
        return true;
    }

private:
    std::size_t index(std::size_t i, std::size_t j, std::size_t k) const { return (i * dim_ + j) * dim_ + k; }

    F field_;
    std::size_t dim_;
    std::vector<value_type> mu_;
    Vector<F> counit_;
};

/// Checks coassociativity and both counit laws entrywise.
template <ExactField F>
ValidationReport validate_coalgebra(const Coalgebra<F>& c)
{
    ValidationReport report;
    const F& f = c.field();
    const std::size_t n = c.dim();
    for (std::size_t i = 0; i < n; ++i) {
        bool coassoc_ok = true;
        std::vector<std::size_t> where;
        for (std::size_t a = 0; a < n && coassoc_ok; ++a)
            for (std::size_t b = 0; b < n && coassoc_ok; ++b)
                for (std::size_t d = 0; d < n && coassoc_ok; ++d) {
                    auto lhs = f.zero(), rhs = f.zero();
                    for (std::size_t m = 0; m < n; ++m) {
                        lhs = f.add(lhs, f.mul(c.mu(i, m, d), c.mu(m, a, b)));
                        rhs = f.add(rhs, f.mul(c.mu(i, a, m), c.mu(m, b, d)));
                    }
                    if (!f.equal(lhs, rhs)) {
                        coassoc_ok = false;
                        where = {i, a, b, d};
                    }
                }
        if (!coassoc_ok) report.add("coassociativity", where, "(Δ⊗id)Δ ≠ (id⊗Δ)Δ at basis element");

        bool left_ok = true, right_ok = true;
        for (std::size_t k = 0; k < n; ++k) {
            auto left = f.zero(), right = f.zero();
            for (std::size_t j = 0; j < n; ++j) {
                left = f.add(left, f.mul(c.counit(j), c.mu(i, j, k)));
                right = f.add(right, f.mul(c.mu(i, k, j), c.counit(j)));
            }
            auto expected = k == i ? f.one() : f.zero();
            if (!f.equal(left, expected)) left_ok = false;
            if (!f.equal(right, expected)) right_ok = false;
        }
        if (!left_ok) report.add("counit-left", {i}, "(ε⊗id)Δ(c_i) ≠ c_i");
        if (!right_ok) report.add("counit-right", {i}, "(id⊗ε)Δ(c_i) ≠ c_i");
    }
    return report;
}

/// The convolution algebra C* on the dual basis; unit ε.
template <ExactField F>
class DualAlgebra {
public:
    explicit DualAlgebra(Coalgebra<F> base)
        : base_(std::move(base))
    {
        auto report = validate_coalgebra(base_);
        if (!report.ok())
            throw Error(ErrorKind::InvalidCoalgebra, "dual algebra of an invalid coalgebra (" + report.violations.front().identity + ")");
    }

    const Coalgebra<F>& base() const { return base_; }
    std::size_t dim() const { return base_.dim(); }
    const Vector<F>& unit() const { return base_.counit_vector(); }

    /// (f∗g)(c_i) = Σ_{j,k} μ[i][j][k] f(c_j) g(c_k).
    Vector<F> multiply(const Vector<F>& a, const Vector<F>& b) const
    {
        const F& f = base_.field();
        const std::size_t n = dim();
        if (a.size() != n || b.size() != n) throw Error(ErrorKind::AmbientMismatch, "dual element has wrong length");
        Vector<F> out(n, f.zero());
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (f.is_zero(a[j])) continue;
                for (std::size_t k = 0; k < n; ++k)
                    if (!f.is_zero(base_.mu(i, j, k))) out[i] = f.add(out[i], f.mul(base_.mu(i, j, k), f.mul(a[j], b[k])));
            }
        return out;
    }

    /// Structure constants: c^a ∗ c^b = Σ_i μ[i][a][b] c^i.
    Vector<F> basis_product(std::size_t a, std::size_t b) const
    {
        Vector<F> out(dim(), base_.field().zero());
        for (std::size_t i = 0; i < dim(); ++i) out[i] = base_.mu(i, a, b);
        return out;
    }

    bool is_commutative() const
    {
        const F& f = base_.field();
        for (std::size_t a = 0; a < dim(); ++a)
            for (std::size_t b = a + 1; b < dim(); ++b)
                for (std::size_t i = 0; i < dim(); ++i)
                    if (!f.equal(base_.mu(i, a, b), base_.mu(i, b, a))) return false;
        return true;
    }

private:
    Coalgebra<F> base_;
};

template <ExactField F>
DualAlgebra<F> dual_algebra(const Coalgebra<F>& c)
{
    return DualAlgebra<F>(c);
}

} // namespace cotop
