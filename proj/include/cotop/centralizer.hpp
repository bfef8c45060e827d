#pragma once

/**
 * @file centralizer.hpp
 * @brief Centralizer of a (C,C)-bicomodule inside C* and the map φ_M into
 *        the endomorphism ring.
 *
 * C(M) = {f : f⇀m = m↼f for all m}. φ_M(f) is the matrix of m ↦ f⇀m. For the
 * regular bicomodule ψ(g) = ε∘g inverts φ.
 */

#include "cotop/endo.hpp"

namespace cotop {

template <ExactField F>
struct Centralizer {
    Subspace<F> space; ///< inside C* (dual-basis coordinates)
    bool contains_counit = false;
    bool closed_under_convolution = false;

    std::size_t dim() const { return space.dim(); }
};

template <ExactField F>
void require_same_coalgebra(const Bicomodule<F>& m)
{
    if (!(m.left_coalgebra() == m.right_coalgebra()))
        throw Error(ErrorKind::CoalgebraMismatch, "centralizer needs a (C,C)-bicomodule");
}

template <ExactField F>
Centralizer<F> centralizer(const Bicomodule<F>& m)
{
    require_same_coalgebra(m);
    const F& f = m.field();
    const std::size_t n = m.dim(), c = m.right_coalgebra().dim();
    // Σ_k f_k (A_k − B_k) = 0 entrywise
    Matrix<F> sys(f, n * n, c);
    for (std::size_t k = 0; k < c; ++k) {
        auto diff = m.right_action(k) - m.left_action(k);
        for (std::size_t e = 0; e < n * n; ++e) sys(e, k) = diff.entries()[e];
    }
    Centralizer<F> out{kernel(sys)};
    DualAlgebra<F> dual(m.right_coalgebra());
    out.contains_counit = out.space.contains(dual.unit());
    out.closed_under_convolution = true;
    for (std::size_t a = 0; a < out.dim() && out.closed_under_convolution; ++a)
        for (std::size_t b = 0; b < out.dim() && out.closed_under_convolution; ++b)
            out.closed_under_convolution = out.space.contains(dual.multiply(out.space.basis_vector(a), out.space.basis_vector(b)));
    return out;
}

/// φ_M(f): m ↦ f⇀m.
template <ExactField F>
Matrix<F> phi(const Bicomodule<F>& m, const Vector<F>& functional)
{
    return m.right_action_of(functional);
}

/// ψ(g) = ε∘g as a functional on C, for an endomorphism g of the regular bicomodule.
template <ExactField F>
Vector<F> psi(const Coalgebra<F>& c, const Matrix<F>& g)
{
    const F& f = c.field();
    Vector<F> out(c.dim(), f.zero());
    for (std::size_t k = 0; k < c.dim(); ++k)
        for (std::size_t i = 0; i < c.dim(); ++i) out[k] = f.add(out[k], f.mul(c.counit(i), g(i, k)));
    return out;
}

struct PhiReport {
    bool unital = false;
    bool bicolinear = false;          ///< every φ(f) lies in E
    bool multiplicative = false;      ///< φ(f∗g) = φ(f)φ(g) as matrices
    bool multiplicative_op = false;   ///< φ(f∗g) = φ(g)φ(f), i.e. the ring map into E with opposite composition
    bool central = false;             ///< each φ(f) commutes with every endomorphism
    std::optional<bool> bijective_regular; ///< φ∘ψ = id and ψ∘φ = id; set only for regular bicomodules
    std::optional<bool> endo_commutative;  ///< set only for regular bicomodules

    bool ok() const
    {
        return unital && bicolinear && multiplicative && multiplicative_op && central && bijective_regular.value_or(true)
            && endo_commutative.value_or(true);
    }
};

template <ExactField F>
bool is_regular(const Bicomodule<F>& m)
{
    const auto& c = m.right_coalgebra();
    if (!(m.left_coalgebra() == c) || m.dim() != c.dim()) return false;
    const F& f = m.field();
    for (std::size_t i = 0; i < c.dim(); ++i)
        for (std::size_t j = 0; j < c.dim(); ++j)
            for (std::size_t k = 0; k < c.dim(); ++k)
                if (!f.equal(m.r(i, j, k), c.mu(i, j, k)) || !f.equal(m.l(i, j, k), c.mu(i, j, k))) return false;
    return true;
}

template <ExactField F>
PhiReport check_phi(const Bicomodule<F>& m, const EndoAlgebra<F>& e, const Centralizer<F>& z)
{
    require_same_coalgebra(m);
    PhiReport r;
    const F& f = m.field();
    DualAlgebra<F> dual(m.right_coalgebra());
    r.unital = phi(m, dual.unit()) == Matrix<F>::identity(f, m.dim());
    r.bicolinear = r.multiplicative = r.multiplicative_op = r.central = true;
    auto basis = z.space.basis_vectors();
    for (std::size_t a = 0; a < basis.size(); ++a) {
        auto pa = phi(m, basis[a]);
        if (!e.contains(pa)) r.bicolinear = false;
        for (const auto& g : e.basis())
            if (!(pa * g == g * pa)) r.central = false;
        for (std::size_t b = 0; b < basis.size(); ++b) {
            auto pb = phi(m, basis[b]);
            auto pab = phi(m, dual.multiply(basis[a], basis[b]));
            if (!(pab == pa * pb)) r.multiplicative = false;
            if (!(pab == pb * pa)) r.multiplicative_op = false;
        }
    }
    if (is_regular(m)) {
        const auto& c = m.right_coalgebra();
        bool bij = z.dim() == e.dim();
        for (const auto& g : e.basis()) {
            auto fn = psi(c, g);
            if (!z.space.contains(fn) || !(phi(m, fn) == g)) bij = false;
        }
        for (const auto& fn : basis)
            if (psi(c, phi(m, fn)) != fn) bij = false;
        r.bijective_regular = bij;
        r.endo_commutative = e.is_commutative();
    }
    return r;
}

} // namespace cotop
