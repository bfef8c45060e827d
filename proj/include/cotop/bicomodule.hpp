#pragma once

/**
 * @file bicomodule.hpp
 * @brief (D,C)-bicomodules and the two rational actions.
 *
 * ρ^C(e_i) = Σ r[i][j][k] e_j ⊗ c_k and ρ^D(e_i) = Σ l[i][j][k] d_j ⊗ e_k.
 * Over a field every coaction is recorded faithfully by the action matrices
 *
 *   c^k ⇀ e_i = Σ_j r[i][j][k] e_j        (left *C-action)
 *   e_i ↼ d^j = Σ_k l[i][j][k] e_k        (right D*-action)
 *
 * and a subspace is a subbicomodule iff it is stable under all of them.
 */

#include "cotop/coalgebra.hpp"
#include "cotop/subspace.hpp"

#include <vector>

namespace cotop {

enum class Side { Left, Right };

template <ExactField F>
class Bicomodule {
public:
    using value_type = typename F::value_type;

    /// Zero coactions; fill with `rho_right` / `rho_left` before use.
    Bicomodule(Coalgebra<F> left, Coalgebra<F> right, std::size_t dim)
        : left_(std::move(left))
        , right_(std::move(right))
        , dim_(dim)
        , r_(dim * dim * right_.dim(), right_.field().zero())
        , l_(dim * left_.dim() * dim, right_.field().zero())
    {
        if (dim == 0) throw Error(ErrorKind::InvalidBicomodule, "bicomodule dimension must be positive");
        if (!(left_.field() == right_.field())) throw Error(ErrorKind::CoalgebraMismatch, "coalgebras over different fields");
        rebuild_actions();
    }

    Bicomodule(Coalgebra<F> left, Coalgebra<F> right, std::size_t dim, const std::vector<Triple<F>>& rho_left,
               const std::vector<Triple<F>>& rho_right)
        : Bicomodule(std::move(left), std::move(right), dim)
    {
        const F& f = field();
        for (const auto& t : rho_right) {
            if (t.i >= dim_ || t.j >= dim_ || t.k >= right_.dim()) throw Error(ErrorKind::InvalidBicomodule, "rho_right index out of range");
            r_[ridx(t.i, t.j, t.k)] = f.add(r_[ridx(t.i, t.j, t.k)], t.coeff);
        }
        for (const auto& t : rho_left) {
            if (t.i >= dim_ || t.j >= left_.dim() || t.k >= dim_) throw Error(ErrorKind::InvalidBicomodule, "rho_left index out of range");
            l_[lidx(t.i, t.j, t.k)] = f.add(l_[lidx(t.i, t.j, t.k)], t.coeff);
        }
        rebuild_actions();
    }

    /// Bicomodule from action matrices: right_actions[k] is c^k⇀, left_actions[j] is ↼d^j.
    static Bicomodule from_actions(Coalgebra<F> left, Coalgebra<F> right, std::size_t dim,
                                   const std::vector<Matrix<F>>& right_actions, const std::vector<Matrix<F>>& left_actions)
    {
        Bicomodule m(std::move(left), std::move(right), dim);
        for (std::size_t k = 0; k < m.right_.dim(); ++k)
            for (std::size_t i = 0; i < dim; ++i)
                for (std::size_t j = 0; j < dim; ++j) m.r_[m.ridx(i, j, k)] = right_actions[k](j, i);
        for (std::size_t j = 0; j < m.left_.dim(); ++j)
            for (std::size_t i = 0; i < dim; ++i)
                for (std::size_t k = 0; k < dim; ++k) m.l_[m.lidx(i, j, k)] = left_actions[j](k, i);
        m.rebuild_actions();
        return m;
    }

    const F& field() const { return right_.field(); }
    std::size_t dim() const { return dim_; }
    const Coalgebra<F>& left_coalgebra() const { return left_; }
    const Coalgebra<F>& right_coalgebra() const { return right_; }

    const value_type& r(std::size_t i, std::size_t j, std::size_t k) const { return r_[ridx(i, j, k)]; }
    const value_type& l(std::size_t i, std::size_t j, std::size_t k) const { return l_[lidx(i, j, k)]; }

    std::vector<Triple<F>> rho_right_triples() const { return triples(r_, dim_, dim_, right_.dim()); }
    std::vector<Triple<F>> rho_left_triples() const { return triples(l_, dim_, left_.dim(), dim_); }

    /// Matrix of v ↦ c^k ⇀ v.
    const Matrix<F>& right_action(std::size_t k) const { return right_actions_[k]; }
    /// Matrix of v ↦ v ↼ d^j.
    const Matrix<F>& left_action(std::size_t j) const { return left_actions_[j]; }
    const std::vector<Matrix<F>>& right_actions() const { return right_actions_; }
    const std::vector<Matrix<F>>& left_actions() const { return left_actions_; }
    /// All action matrices; their common invariant subspaces are the subbicomodules.
    const std::vector<Matrix<F>>& generators() const { return generators_; }

    /// Matrix of v ↦ f ⇀ v for f ∈ *C.
    Matrix<F> right_action_of(const Vector<F>& functional) const
    {
        if (functional.size() != right_.dim()) throw Error(ErrorKind::AmbientMismatch, "functional not in *C");
        return combine(field(), dim_, dim_, std::span<const value_type>(functional), right_actions_);
    }
    /// Matrix of v ↦ v ↼ g for g ∈ D*.
    Matrix<F> left_action_of(const Vector<F>& functional) const
    {
        if (functional.size() != left_.dim()) throw Error(ErrorKind::AmbientMismatch, "functional not in D*");
        return combine(field(), dim_, dim_, std::span<const value_type>(functional), left_actions_);
    }

    bool is_subbicomodule(const Subspace<F>& s) const
    {
        if (s.ambient_dim() != dim_) throw Error(ErrorKind::AmbientMismatch, "subspace not in this bicomodule");
        for (const auto& g : generators_)
            if (!is_stable(g, s)) return false;
        return true;
    }

private:
    std::size_t ridx(std::size_t i, std::size_t j, std::size_t k) const { return (i * dim_ + j) * right_.dim() + k; }
    std::size_t lidx(std::size_t i, std::size_t j, std::size_t k) const { return (i * left_.dim() + j) * dim_ + k; }

    std::vector<Triple<F>> triples(const std::vector<value_type>& t, std::size_t a, std::size_t b, std::size_t c) const
    {
        std::vector<Triple<F>> out;
        for (std::size_t i = 0; i < a; ++i)
            for (std::size_t j = 0; j < b; ++j)
                for (std::size_t k = 0; k < c; ++k) {
                    const auto& x = t[(i * b + j) * c + k];
                    if (!field().is_zero(x)) out.push_back({i, j, k, x});
                }
        return out;
    }

    void rebuild_actions()
    {
        const F& f = field();
        right_actions_.assign(right_.dim(), Matrix<F>(f, dim_, dim_));
        left_actions_.assign(left_.dim(), Matrix<F>(f, dim_, dim_));
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j)
                for (std::size_t k = 0; k < right_.dim(); ++k) right_actions_[k](j, i) = r(i, j, k);
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < left_.dim(); ++j)
                for (std::size_t k = 0; k < dim_; ++k) left_actions_[j](k, i) = l(i, j, k);
        generators_ = right_actions_;
        generators_.insert(generators_.end(), left_actions_.begin(), left_actions_.end());
    }

    Coalgebra<F> left_;
    Coalgebra<F> right_;
    std::size_t dim_;
    std::vector<value_type> r_;
    std::vector<value_type> l_;
    std::vector<Matrix<F>> right_actions_;
    std::vector<Matrix<F>> left_actions_;
    std::vector<Matrix<F>> generators_;
};

/// Right/left comodule laws and the bicomodule compatibility, entrywise.
template <ExactField F>
ValidationReport validate_bicomodule(const Bicomodule<F>& m)
{
    ValidationReport report;
    const F& f = m.field();
    const auto& C = m.right_coalgebra();
    const auto& D = m.left_coalgebra();
    const std::size_t n = m.dim(), nc = C.dim(), nd = D.dim();
    report.merge(validate_coalgebra(C), "right coalgebra: ");
    report.merge(validate_coalgebra(D), "left coalgebra: ");

    for (std::size_t i = 0; i < n; ++i) {
        // (ρ⊗id)ρ = (id⊗Δ)ρ: Σ_j r[i][j][c] r[j][a][b] = Σ_k r[i][a][k] μ[k][b][c]
        bool ok = true;
        for (std::size_t a = 0; a < n && ok; ++a)
            for (std::size_t b = 0; b < nc && ok; ++b)
                for (std::size_t c = 0; c < nc && ok; ++c) {
                    auto lhs = f.zero(), rhs = f.zero();
                    for (std::size_t j = 0; j < n; ++j) lhs = f.add(lhs, f.mul(m.r(i, j, c), m.r(j, a, b)));
                    for (std::size_t k = 0; k < nc; ++k) rhs = f.add(rhs, f.mul(m.r(i, a, k), C.mu(k, b, c)));
                    ok = f.equal(lhs, rhs);
                }
        if (!ok) report.add("right-coassociativity", {i});
        ok = true;
        for (std::size_t a = 0; a < n && ok; ++a) {
            auto s = f.zero();
            for (std::size_t k = 0; k < nc; ++k) s = f.add(s, f.mul(m.r(i, a, k), C.counit(k)));
            ok = f.equal(s, a == i ? f.one() : f.zero());
        }
        if (!ok) report.add("right-counit", {i});

        // (Δ_D⊗id)ρ = (id⊗ρ)ρ: Σ_j l[i][j][k] ν[j][a][b] = Σ_m l[i][a][m] l[m][b][k]
        ok = true;
        for (std::size_t a = 0; a < nd && ok; ++a)
            for (std::size_t b = 0; b < nd && ok; ++b)
                for (std::size_t k = 0; k < n && ok; ++k) {
                    auto lhs = f.zero(), rhs = f.zero();
                    for (std::size_t j = 0; j < nd; ++j) lhs = f.add(lhs, f.mul(m.l(i, j, k), D.mu(j, a, b)));
                    for (std::size_t mm = 0; mm < n; ++mm) rhs = f.add(rhs, f.mul(m.l(i, a, mm), m.l(mm, b, k)));
                    ok = f.equal(lhs, rhs);
                }
        if (!ok) report.add("left-coassociativity", {i});
        ok = true;
        for (std::size_t k = 0; k < n && ok; ++k) {
            auto s = f.zero();
            for (std::size_t j = 0; j < nd; ++j) s = f.add(s, f.mul(D.counit(j), m.l(i, j, k)));
            ok = f.equal(s, k == i ? f.one() : f.zero());
        }
        if (!ok) report.add("left-counit", {i});

        // (ρ^D⊗id)ρ^C = (id⊗ρ^C)ρ^D: Σ_j r[i][j][c] l[j][a][b] = Σ_m l[i][a][m] r[m][b][c]
        ok = true;
        for (std::size_t a = 0; a < nd && ok; ++a)
            for (std::size_t b = 0; b < n && ok; ++b)
                for (std::size_t c = 0; c < nc && ok; ++c) {
                    auto lhs = f.zero(), rhs = f.zero();
                    for (std::size_t j = 0; j < n; ++j) lhs = f.add(lhs, f.mul(m.r(i, j, c), m.l(j, a, b)));
                    for (std::size_t mm = 0; mm < n; ++mm) rhs = f.add(rhs, f.mul(m.l(i, a, mm), m.r(mm, b, c)));
                    ok = f.equal(lhs, rhs);
                }
        if (!ok) report.add("bicomodule-compatibility", {i});
    }
    return report;
}

/// f ⇀ v (side = Right uses the C-coaction) or v ↼ f (side = Left uses the D-coaction).
template <ExactField F>
Vector<F> act(const Bicomodule<F>& m, const Vector<F>& functional, const Vector<F>& v, Side side)
{
    if (v.size() != m.dim()) throw Error(ErrorKind::AmbientMismatch, "vector not in the bicomodule");
    return mat_vec(side == Side::Right ? m.right_action_of(functional) : m.left_action_of(functional), v);
}

/// C as a (C,C)-bicomodule with both coactions equal to Δ.
template <ExactField F>
Bicomodule<F> regular_bicomodule(const Coalgebra<F>& c)
{
    auto report = validate_coalgebra(c);
    if (!report.ok()) throw Error(ErrorKind::InvalidCoalgebra, "regular bicomodule of an invalid coalgebra (" + report.violations.front().identity + ")");
    auto delta = c.delta_triples();
    return Bicomodule<F>(c, c, c.dim(), delta, delta);
}

/// Matrix of g restricted to the stable subspace s, in s's echelon coordinates.
template <ExactField F>
Matrix<F> restrict_matrix(const Matrix<F>& g, const Subspace<F>& s)
{
    Matrix<F> out(g.field(), s.dim(), s.dim());
    for (std::size_t i = 0; i < s.dim(); ++i) {
        auto coords = s.coordinates(mat_vec(g, s.basis_vector(i)));
        if (!coords) throw Error(ErrorKind::NotSubbicomodule, "subspace is not stable");
        for (std::size_t j = 0; j < s.dim(); ++j) out(j, i) = (*coords)[j];
    }
    return out;
}

/// The subbicomodule s as a bicomodule in its own right (basis: echelon basis of s).
template <ExactField F>
Bicomodule<F> restrict_to(const Bicomodule<F>& m, const Subspace<F>& s)
{
    if (s.is_zero()) throw Error(ErrorKind::ZeroSubmodule, "cannot restrict to the zero subspace");
    if (!m.is_subbicomodule(s)) throw Error(ErrorKind::NotSubbicomodule, "restriction target is not a subbicomodule");
    std::vector<Matrix<F>> ra, la;
    for (const auto& a : m.right_actions()) ra.push_back(restrict_matrix(a, s));
    for (const auto& a : m.left_actions()) la.push_back(restrict_matrix(a, s));
    return Bicomodule<F>::from_actions(m.left_coalgebra(), m.right_coalgebra(), s.dim(), ra, la);
}

/// Projection M → M/K in the complement coordinates (free columns of K's echelon basis).
template <ExactField F>
Matrix<F> quotient_projection(const Subspace<F>& k)
{
    auto freec = k.free_columns();
    Matrix<F> p(k.field(), freec.size(), k.ambient_dim());
    for (std::size_t c = 0; c < k.ambient_dim(); ++c) {
        auto v = k.reduce(unit_vector(k.field(), k.ambient_dim(), c));
        for (std::size_t r = 0; r < freec.size(); ++r) p(r, c) = v[freec[r]];
    }
    return p;
}

/// M/K with the induced coactions. Throws NotSubbicomodule.
template <ExactField F>
Bicomodule<F> quotient(const Bicomodule<F>& m, const Subspace<F>& k)
{
    if (!m.is_subbicomodule(k)) throw Error(ErrorKind::NotSubbicomodule, "quotient by a subspace that is not a subbicomodule");
    if (k.is_full()) throw Error(ErrorKind::ZeroSubmodule, "quotient by the whole bicomodule is zero");
    auto freec = k.free_columns();
    auto proj = quotient_projection(k);
    Matrix<F> lift(m.field(), m.dim(), freec.size());
    for (std::size_t r = 0; r < freec.size(); ++r) lift(freec[r], r) = m.field().one();
    std::vector<Matrix<F>> ra, la;
    for (const auto& a : m.right_actions()) ra.push_back(proj * a * lift);
    for (const auto& a : m.left_actions()) la.push_back(proj * a * lift);
    return Bicomodule<F>::from_actions(m.left_coalgebra(), m.right_coalgebra(), freec.size(), ra, la);
}

/// Isomorphic copy N of M along the invertible map v ↦ P v.
template <ExactField F>
Bicomodule<F> transport(const Bicomodule<F>& m, const Matrix<F>& p)
{
    auto pinv = inverse(p);
    if (!pinv) throw Error(ErrorKind::InvalidMorphism, "transport along a singular matrix");
    std::vector<Matrix<F>> ra, la;
    for (const auto& a : m.right_actions()) ra.push_back(p * a * *pinv);
    for (const auto& a : m.left_actions()) la.push_back(p * a * *pinv);
    return Bicomodule<F>::from_actions(m.left_coalgebra(), m.right_coalgebra(), m.dim(), ra, la);
}

} // namespace cotop
