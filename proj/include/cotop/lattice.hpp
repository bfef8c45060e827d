#pragma once

/**
 * @file lattice.hpp
 * @brief The lattice L(M) of subbicomodules with its fully invariant part.
 *
 * A subspace is a subbicomodule exactly when it is stable under every action
 * matrix c^k⇀ and ↼d^j. Two enumeration modes:
 *  - Exhaustive: every subspace of F_p^n is tested (finite fields only).
 *  - Generated: cyclic subbicomodules of basis and probe vectors, closed under
 *    sum and intersection. Results are then relative to the enumerated family.
 */

#include "cotop/endo.hpp"
#include "cotop/enumerate.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace cotop {

enum class LatticeMode { Auto, Exhaustive, Generated };
enum class Completeness { Exhaustive, Generated };

inline const char* to_string(Completeness c) { return c == Completeness::Exhaustive ? "exhaustive" : "generated"; }

inline LatticeMode parse_lattice_mode(std::string_view s)
{
    if (s == "auto") return LatticeMode::Auto;
    if (s == "exhaustive") return LatticeMode::Exhaustive;
    if (s == "generated") return LatticeMode::Generated;
    throw Error(ErrorKind::Usage, "unknown lattice mode \"" + std::string(s) + "\" (auto|exhaustive|generated)");
}

struct LatticeOptions {
    LatticeMode mode = LatticeMode::Auto;
    std::uint64_t budget = 200000;      ///< max subspaces tested in exhaustive mode
    std::uint64_t probes = 64;          ///< random probe vectors in generated mode
    std::uint64_t seed = 0;
    bool all_vectors = false;           ///< generated mode over F_p: probe every vector
    std::size_t max_elements = 200000;  ///< cap on the generated closure
};

template <ExactField F>
struct Lattice {
    std::vector<Subspace<F>> elements;  ///< canonical order: by dimension, then echelon basis
    std::vector<bool> fully_invariant;
    std::vector<std::vector<bool>> leq; ///< leq[a][b] iff elements[a] ⊆ elements[b]
    Completeness completeness = Completeness::Generated;

    std::size_t size() const { return elements.size(); }
    bool certified() const { return completeness == Completeness::Exhaustive; }
    std::size_t bottom() const { return 0; }
    std::size_t top() const { return elements.size() - 1; }

    std::optional<std::size_t> index_of(const Subspace<F>& s) const
    {
        auto it = std::lower_bound(elements.begin(), elements.end(), s);
        if (it == elements.end() || !(*it == s)) return std::nullopt;
        return static_cast<std::size_t>(it - elements.begin());
    }
    bool contains(const Subspace<F>& s) const { return index_of(s).has_value(); }

    std::vector<std::size_t> fully_invariant_indices() const
    {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < size(); ++i)
            if (fully_invariant[i]) out.push_back(i);
        return out;
    }
};

/// Smallest subspace containing `s` that is stable under all generators.
template <ExactField F>
Subspace<F> generated_subbicomodule(const Bicomodule<F>& m, Subspace<F> s)
{
    std::vector<Vector<F>> frontier = s.basis_vectors();
    while (!frontier.empty()) {
        std::vector<Vector<F>> next;
        for (const auto& v : frontier)
            for (const auto& g : m.generators()) {
                auto w = mat_vec(g, v);
                if (s.contains(w)) continue;
                auto rows = s.basis_vectors();
                rows.push_back(w);
                s = Subspace<F>::span(m.field(), m.dim(), rows);
                next.push_back(std::move(w));
            }
        frontier = std::move(next);
    }
    return s;
}

/// *C⇀v↼D*: the smallest subbicomodule containing v.
template <ExactField F>
Subspace<F> cyclic_subbicomodule(const Bicomodule<F>& m, const Vector<F>& v)
{
    if (v.size() != m.dim()) throw Error(ErrorKind::AmbientMismatch, "vector not in the bicomodule");
    return generated_subbicomodule(m, Subspace<F>::span(m.field(), m.dim(), {v}));
}

namespace detail {

template <ExactField F>
typename F::value_type random_scalar(const F& f, std::mt19937_64& rng)
{
    if constexpr (FiniteField<F>) {
        return f.element(rng() % f.size());
    } else {
        return f.from_int(static_cast<std::int64_t>(rng() % 7) - 3);
    }
}

template <ExactField F>
bool all_generators_scalar(const Bicomodule<F>& m)
{
    const F& f = m.field();
    for (const auto& g : m.generators())
        for (std::size_t i = 0; i < m.dim(); ++i)
            for (std::size_t j = 0; j < m.dim(); ++j)
                if (i == j ? !f.equal(g(i, j), g(0, 0)) : !f.is_zero(g(i, j))) return false;
    return true;
}

/// Closes a family of subspaces under pairwise sum and intersection.
template <ExactField F>
std::set<Subspace<F>> lattice_closure(std::set<Subspace<F>> seeds, std::size_t cap)
{
    std::vector<Subspace<F>> all(seeds.begin(), seeds.end());
    std::size_t done = 0;
    while (done < all.size()) {
        const std::size_t end = all.size();
        for (std::size_t a = done; a < end; ++a)
            for (std::size_t b = 0; b < end; ++b) {
                if (b >= done && b > a) continue;
                for (auto s : {sum(all[a], all[b]), intersection(all[a], all[b])})
                    if (seeds.insert(s).second) {
                        all.push_back(s);
                        if (all.size() > cap) throw Error(ErrorKind::BudgetExceeded, "generated lattice exceeds " + std::to_string(cap) + " elements");
                    }
            }
        done = end;
    }
    return seeds;
}

} // namespace detail

/// Sorts, marks fully invariant elements and precomputes inclusion.
template <ExactField F>
Lattice<F> make_lattice(const EndoAlgebra<F>& e, const std::set<Subspace<F>>& family, Completeness c)
{
    Lattice<F> lat;
    lat.completeness = c;
    lat.elements.assign(family.begin(), family.end());
    for (const auto& s : lat.elements) lat.fully_invariant.push_back(is_fully_invariant(e, s));
    const std::size_t n = lat.size();
    lat.leq.assign(n, std::vector<bool>(n, false));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            lat.leq[a][b] = a == b || (lat.elements[a].dim() < lat.elements[b].dim() && lat.elements[b].contains(lat.elements[a]));
    return lat;
}

template <ExactField F>
Lattice<F> enumerate_lattice(const Bicomodule<F>& m, const EndoAlgebra<F>& e, const LatticeOptions& opt = {})
{
    const F& f = m.field();
    const std::size_t n = m.dim();
    LatticeMode mode = opt.mode;
    if constexpr (FiniteField<F>) {
        if (mode == LatticeMode::Auto)
            mode = subspace_count(f.size(), n) <= opt.budget ? LatticeMode::Exhaustive : LatticeMode::Generated;
        if (mode == LatticeMode::Exhaustive) {
            auto count = subspace_count(f.size(), n);
            if (count > opt.budget)
                throw Error(ErrorKind::BudgetExceeded, std::to_string(count) + " subspaces of " + f.name() + "^" + std::to_string(n)
                                                           + " exceed the budget of " + std::to_string(opt.budget));
            std::set<Subspace<F>> family;
            for_each_subspace(f, n, [&](const Subspace<F>& s) {
                if (m.is_subbicomodule(s)) family.insert(s);
                return true;
            });
            return make_lattice(e, family, Completeness::Exhaustive);
        }
    } else {
        if (mode == LatticeMode::Exhaustive)
            throw Error(ErrorKind::ExhaustiveUnavailableOverQ, "exhaustive enumeration needs a finite field; use --mode generated");
        if (n >= 2 && detail::all_generators_scalar(m))
            throw Error(ErrorKind::ExhaustiveUnavailableOverQ,
                        "every line is a subbicomodule, so the lattice over Q is infinite; rerun over a prime field");
    }

    std::set<Subspace<F>> seeds{Subspace<F>::zero(f, n), Subspace<F>::full(f, n)};
    for (std::size_t i = 0; i < n; ++i) seeds.insert(cyclic_subbicomodule(m, unit_vector(f, n, i)));
    bool exhaustive_probes = false;
    if constexpr (FiniteField<F>) {
        if (opt.all_vectors) {
            for_each_vector(f, n, [&](const Vector<F>& v) {
                seeds.insert(cyclic_subbicomodule(m, v));
                return true;
            });
            exhaustive_probes = true;
        }
    }
    if (!exhaustive_probes) {
        std::mt19937_64 rng(opt.seed);
        for (std::uint64_t p = 0; p < opt.probes; ++p) {
            Vector<F> v(n, f.zero());
            for (auto& x : v) x = detail::random_scalar(f, rng);
            seeds.insert(cyclic_subbicomodule(m, v));
        }
    }
    return make_lattice(e, detail::lattice_closure(std::move(seeds), opt.max_elements), Completeness::Generated);
}

} // namespace cotop
