#pragma once

/**
 * @file endo.hpp
 * @brief The ring E of (D,C)-bicolinear endomorphisms of a bicomodule,
 *        multiplied by opposite composition: x·y := y ∘ x.
 *
 * Elements are coordinate vectors over a canonical basis of the solution
 * space of the intertwining equations φG = Gφ (G ranging over all action
 * matrices). M is a right E-module via m·φ = φ(m).
 */

#include "cotop/bicomodule.hpp"

#include <optional>
#include <vector>

namespace cotop {

template <ExactField F>
class EndoAlgebra {
public:
    explicit EndoAlgebra(const Bicomodule<F>& m)
        : field_(m.field())
        , n_(m.dim())
        , space_(Subspace<F>::zero(m.field(), m.dim() * m.dim()))
    {
        const F& f = field_;
        const std::size_t n = n_;
        const auto& gens = m.generators();
        Matrix<F> sys(f, gens.size() * n * n, n * n);
        std::size_t row = 0;
        for (const auto& g : gens)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j, ++row) {
                    // (Gφ - φG)_{ij}
                    for (std::size_t t = 0; t < n; ++t) {
                        sys(row, t * n + j) = f.add(sys(row, t * n + j), g(i, t));
                        sys(row, i * n + t) = f.sub(sys(row, i * n + t), g(t, j));
                    }
                }
        space_ = kernel(sys);
        for (std::size_t a = 0; a < space_.dim(); ++a) basis_.push_back(unflatten(space_.basis_vector(a)));

        const std::size_t d = dim();
        mult_.assign(d * d, Vector<F>{});
        for (std::size_t a = 0; a < d; ++a)
            for (std::size_t b = 0; b < d; ++b) mult_[a * d + b] = *coordinates(basis_[b] * basis_[a]);
        unit_ = *coordinates(Matrix<F>::identity(f, n));
    }

    const F& field() const { return field_; }
    std::size_t dim() const { return basis_.size(); }
    /// Dimension of the bicomodule the endomorphisms act on.
    std::size_t module_dim() const { return n_; }
    const std::vector<Matrix<F>>& basis() const { return basis_; }
    const Vector<F>& unit() const { return unit_; }
    /// Coordinates of basis[a]·basis[b] = basis[b] ∘ basis[a].
    const Vector<F>& structure(std::size_t a, std::size_t b) const { return mult_[a * dim() + b]; }

    Matrix<F> element(const Vector<F>& coords) const
    {
        if (coords.size() != dim()) throw Error(ErrorKind::AmbientMismatch, "element of E has wrong length");
        return combine(field_, n_, n_, std::span<const typename F::value_type>(coords), basis_);
    }

    /// Coordinates of a matrix in E, or nothing if it is not bicolinear.
    std::optional<Vector<F>> coordinates(const Matrix<F>& phi) const { return space_.coordinates(flatten(phi)); }
    bool contains(const Matrix<F>& phi) const { return space_.contains(flatten(phi)); }

    /// x·y in E, i.e. the composite y ∘ x.
    Vector<F> multiply(const Vector<F>& x, const Vector<F>& y) const { return *coordinates(element(y) * element(x)); }

    bool is_commutative() const
    {
        for (std::size_t a = 0; a < dim(); ++a)
            for (std::size_t b = a + 1; b < dim(); ++b)
                if (!(basis_[a] * basis_[b] == basis_[b] * basis_[a])) return false;
        return true;
    }

    Vector<F> flatten(const Matrix<F>& phi) const
    {
        if (phi.rows() != n_ || phi.cols() != n_) throw Error(ErrorKind::AmbientMismatch, "endomorphism has wrong shape");
        return phi.entries();
    }
    Matrix<F> unflatten(const Vector<F>& v) const { return Matrix<F>(field_, n_, n_, v); }

private:
    F field_;
    std::size_t n_;
    Subspace<F> space_;
    std::vector<Matrix<F>> basis_;
    std::vector<Vector<F>> mult_;
    Vector<F> unit_;
};

template <ExactField F>
EndoAlgebra<F> endo_algebra(const Bicomodule<F>& m)
{
    return EndoAlgebra<F>(m);
}

/// Whether s is stable under every bicolinear endomorphism.
template <ExactField F>
bool is_fully_invariant(const EndoAlgebra<F>& e, const Subspace<F>& s)
{
    for (const auto& phi : e.basis())
        if (!is_stable(phi, s)) return false;
    return true;
}

} // namespace cotop
