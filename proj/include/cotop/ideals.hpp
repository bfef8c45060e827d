#pragma once

/**
 * @file ideals.hpp
 * @brief Right and two-sided ideals of E, the An/Ke correspondence, and
 *        prime/semiprime analysis over finite fields.
 *
 * Ideals are subspaces of E's coordinate space. With x·y := y∘x, a right
 * ideal is closed under post-composition, so An(K) is always one.
 */

#include "cotop/lattice.hpp"

namespace cotop {

enum class IdealSide { Right, TwoSided };

template <ExactField F>
struct RightIdeal {
    Subspace<F> space;
    bool is_right_ideal = false;
    bool is_two_sided = false;
};

/// Product x·y of E-elements in coordinates, via structure constants.
template <ExactField F>
Vector<F> e_multiply(const EndoAlgebra<F>& e, const Vector<F>& x, const Vector<F>& y)
{
    const F& f = e.field();
    Vector<F> out(e.dim(), f.zero());
    for (std::size_t a = 0; a < e.dim(); ++a) {
        if (f.is_zero(x[a])) continue;
        for (std::size_t b = 0; b < e.dim(); ++b) {
            if (f.is_zero(y[b])) continue;
            auto s = f.mul(x[a], y[b]);
            const auto& c = e.structure(a, b);
            for (std::size_t t = 0; t < e.dim(); ++t) out[t] = f.add(out[t], f.mul(s, c[t]));
        }
    }
    return out;
}

template <ExactField F>
bool is_right_ideal(const EndoAlgebra<F>& e, const Subspace<F>& s)
{
    for (std::size_t i = 0; i < s.dim(); ++i)
        for (std::size_t b = 0; b < e.dim(); ++b)
            if (!s.contains(e_multiply(e, s.basis_vector(i), unit_vector(e.field(), e.dim(), b)))) return false;
    return true;
}

template <ExactField F>
bool is_left_ideal(const EndoAlgebra<F>& e, const Subspace<F>& s)
{
    for (std::size_t i = 0; i < s.dim(); ++i)
        for (std::size_t b = 0; b < e.dim(); ++b)
            if (!s.contains(e_multiply(e, unit_vector(e.field(), e.dim(), b), s.basis_vector(i)))) return false;
    return true;
}

template <ExactField F>
RightIdeal<F> classify_ideal(const EndoAlgebra<F>& e, Subspace<F> s)
{
    RightIdeal<F> r{std::move(s)};
    r.is_right_ideal = is_right_ideal(e, r.space);
    r.is_two_sided = r.is_right_ideal && is_left_ideal(e, r.space);
    return r;
}

/// span{x·y : x ∈ I, y ∈ J}.
template <ExactField F>
Subspace<F> ideal_product(const EndoAlgebra<F>& e, const Subspace<F>& i, const Subspace<F>& j)
{
    std::vector<Vector<F>> vs;
    for (std::size_t a = 0; a < i.dim(); ++a)
        for (std::size_t b = 0; b < j.dim(); ++b) vs.push_back(e_multiply(e, i.basis_vector(a), j.basis_vector(b)));
    return Subspace<F>::span(e.field(), e.dim(), vs);
}

/// Smallest right (or two-sided) ideal containing s.
template <ExactField F>
Subspace<F> ideal_generated(const EndoAlgebra<F>& e, const Subspace<F>& s, IdealSide side)
{
    auto whole = Subspace<F>::full(e.field(), e.dim());
    auto right = ideal_product(e, s, whole);
    return side == IdealSide::Right ? right : ideal_product(e, whole, right);
}

/// An(K) = {φ ∈ E : φ(K) = 0}.
template <ExactField F>
RightIdeal<F> an(const EndoAlgebra<F>& e, const Subspace<F>& k)
{
    if (k.ambient_dim() != e.module_dim()) throw Error(ErrorKind::AmbientMismatch, "subspace not in the bicomodule");
    const F& f = e.field();
    const std::size_t n = e.module_dim();
    Matrix<F> sys(f, k.dim() * n, e.dim());
    for (std::size_t v = 0; v < k.dim(); ++v) {
        auto vec = k.basis_vector(v);
        for (std::size_t a = 0; a < e.dim(); ++a) {
            auto img = mat_vec(e.basis()[a], vec);
            for (std::size_t r = 0; r < n; ++r) sys(v * n + r, a) = img[r];
        }
    }
    return classify_ideal(e, kernel(sys));
}

/// Ke(I) = joint kernel of the members of I.
template <ExactField F>
Subspace<F> ke(const EndoAlgebra<F>& e, const Subspace<F>& ideal)
{
    if (ideal.ambient_dim() != e.dim()) throw Error(ErrorKind::AmbientMismatch, "subspace not in E");
    const std::size_t n = e.module_dim();
    Matrix<F> stacked(e.field(), ideal.dim() * n, n);
    for (std::size_t i = 0; i < ideal.dim(); ++i) {
        auto phi = e.element(ideal.basis_vector(i));
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) stacked(i * n + r, c) = phi(r, c);
    }
    return kernel(stacked);
}

/// All right or two-sided ideals of E over a finite field, as sums of principal ideals.
template <ExactField F>
std::vector<Subspace<F>> enumerate_ideals(const EndoAlgebra<F>& e, IdealSide side, std::uint64_t budget = 50000)
{
    if constexpr (!FiniteField<F>) {
        (void)e, (void)side, (void)budget;
        throw Error(ErrorKind::UnsupportedOverQ, "ideal enumeration needs a finite field");
    } else {
        const F& f = e.field();
        auto elements = detail::saturating_pow(f.size(), e.dim());
        if (elements > budget)
            throw Error(ErrorKind::BudgetExceeded, "E has " + std::to_string(elements) + " elements, over the ideal budget of " + std::to_string(budget));
        std::set<Subspace<F>> principal;
        for_each_vector(f, e.dim(), [&](const Vector<F>& x) {
            principal.insert(ideal_generated(e, Subspace<F>::span(f, e.dim(), {x}), side));
            return true;
        });
        std::set<Subspace<F>> all{Subspace<F>::zero(f, e.dim())};
        for (const auto& p : principal) {
            std::vector<Subspace<F>> current(all.begin(), all.end());
            for (const auto& s : current) {
                all.insert(sum(s, p));
                if (all.size() > budget) throw Error(ErrorKind::BudgetExceeded, "more than " + std::to_string(budget) + " ideals");
            }
        }
        return {all.begin(), all.end()};
    }
}

/// I is prime iff proper and J_1·J_2 ⊆ I forces J_1 ⊆ I or J_2 ⊆ I over the given two-sided ideals.
template <ExactField F>
bool is_prime_ideal(const EndoAlgebra<F>& e, const Subspace<F>& i, const std::vector<Subspace<F>>& two_sided)
{
    if (i.is_full()) return false;
    for (const auto& a : two_sided) {
        if (i.contains(a)) continue;
        for (const auto& b : two_sided)
            if (!i.contains(b) && i.contains(ideal_product(e, a, b))) return false;
    }
    return true;
}

template <ExactField F>
bool is_semiprime_ideal(const EndoAlgebra<F>& e, const Subspace<F>& i, const std::vector<Subspace<F>>& two_sided)
{
    for (const auto& a : two_sided)
        if (!i.contains(a) && i.contains(ideal_product(e, a, a))) return false;
    return true;
}

/// Intersection of a family inside E; E itself for the empty family.
template <ExactField F>
Subspace<F> intersect_all(const F& f, std::size_t n, const std::vector<Subspace<F>>& family)
{
    auto out = Subspace<F>::full(f, n);
    for (const auto& s : family) out = intersection(out, s);
    return out;
}

template <ExactField F>
struct IdealAnalysis {
    std::vector<Subspace<F>> right;     ///< all right ideals
    std::vector<Subspace<F>> two_sided; ///< all two-sided ideals
    std::vector<Subspace<F>> primes;
    std::vector<Subspace<F>> maximal_two_sided;
    std::vector<Subspace<F>> maximal_right;
    Subspace<F> prad;                   ///< prime radical
    Subspace<F> jacobson;               ///< intersection of maximal right ideals
    bool right_duo = false;             ///< every right ideal is two-sided
    bool primes_maximal = false;        ///< every prime ideal is a maximal two-sided ideal

    bool is_prime(const Subspace<F>& i) const { return std::find(primes.begin(), primes.end(), i) != primes.end(); }
};

template <ExactField F>
std::vector<Subspace<F>> maximal_proper(const std::vector<Subspace<F>>& family)
{
    std::vector<Subspace<F>> out;
    for (const auto& a : family) {
        if (a.is_full()) continue;
        bool maximal = true;
        for (const auto& b : family)
            if (!b.is_full() && b.dim() > a.dim() && b.contains(a)) maximal = false;
        if (maximal) out.push_back(a);
    }
    return out;
}

template <ExactField F>
IdealAnalysis<F> analyze_ideals(const EndoAlgebra<F>& e, std::uint64_t budget = 50000)
{
    const F& f = e.field();
    IdealAnalysis<F> r{enumerate_ideals(e, IdealSide::Right, budget), enumerate_ideals(e, IdealSide::TwoSided, budget), {}, {}, {},
                       Subspace<F>::zero(f, e.dim()), Subspace<F>::zero(f, e.dim())};
    for (const auto& i : r.two_sided)
        if (is_prime_ideal(e, i, r.two_sided)) r.primes.push_back(i);
    r.maximal_two_sided = maximal_proper(r.two_sided);
    r.maximal_right = maximal_proper(r.right);
    r.prad = intersect_all(f, e.dim(), r.primes);
    r.jacobson = intersect_all(f, e.dim(), r.maximal_right);
    r.right_duo = r.right.size() == r.two_sided.size();
    r.primes_maximal = true;
    for (const auto& p : r.primes)
        if (std::find(r.maximal_two_sided.begin(), r.maximal_two_sided.end(), p) == r.maximal_two_sided.end()) r.primes_maximal = false;
    return r;
}

/// Radical of the trace form x, y ↦ tr(xy) on M. In characteristic 0 this is the
/// Jacobson radical of E, which equals the prime radical since E is Artinian.
template <ExactField F>
Subspace<F> trace_radical(const EndoAlgebra<F>& e)
{
    const F& f = e.field();
    const std::size_t d = e.dim(), n = e.module_dim();
    Matrix<F> g(f, d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i; j < d; ++j) {
            auto p = e.basis()[i] * e.basis()[j];
            auto t = f.zero();
            for (std::size_t k = 0; k < n; ++k) t = f.add(t, p(k, k));
            g(i, j) = g(j, i) = t;
        }
    return kernel(g);
}

} // namespace cotop
