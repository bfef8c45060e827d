#pragma once

/**
 * @file coprime.hpp
 * @brief Internal coproducts (X : Y), fully coprime and fully cosemiprime
 *        subbicomodules, and the spectra CPSpec, CSP, EP, ESP.
 */

#include "cotop/predicates.hpp"

#include <map>

namespace cotop {

/// (X :_M Y) = ⋂ f^{-1}(Y) over a basis of An(X).
template <ExactField F>
Subspace<F> internal_coproduct(const EndoAlgebra<F>& e, const Subspace<F>& x, const Subspace<F>& y)
{
    if (x.ambient_dim() != e.module_dim() || y.ambient_dim() != e.module_dim())
        throw Error(ErrorKind::AmbientMismatch, "internal coproduct of subspaces outside the bicomodule");
    auto ann = an(e, x).space;
    auto out = Subspace<F>::full(e.field(), e.module_dim());
    for (std::size_t i = 0; i < ann.dim() && !out.is_zero(); ++i) out = intersection(out, preimage(e.element(ann.basis_vector(i)), y));
    return out;
}

template <ExactField F>
struct KeProductBound {
    Subspace<F> lhs; ///< (X : Y)
    Subspace<F> rhs; ///< Ke(An(X)·An(Y))
    bool included = false;
    bool equal = false;
};

template <ExactField F>
KeProductBound<F> ke_product_bound(const EndoAlgebra<F>& e, const Subspace<F>& x, const Subspace<F>& y)
{
    auto lhs = internal_coproduct(e, x, y);
    auto rhs = ke(e, ideal_product(e, an(e, x).space, an(e, y).space));
    bool inc = rhs.contains(lhs);
    return {lhs, rhs, inc, inc && lhs.dim() == rhs.dim()};
}

/// Internal coproducts of all pairs of fully invariant lattice elements.
template <ExactField F>
struct CoproductTable {
    std::vector<std::size_t> fi;                  ///< lattice indices of fully invariant elements
    std::vector<std::vector<Subspace<F>>> value;  ///< value[a][b] = (fi[a] : fi[b])
};

template <ExactField F>
CoproductTable<F> coproduct_table(const EndoAlgebra<F>& e, const Lattice<F>& lat)
{
    CoproductTable<F> t;
    t.fi = lat.fully_invariant_indices();
    for (auto a : t.fi) {
        std::vector<Subspace<F>> row;
        for (auto b : t.fi) row.push_back(internal_coproduct(e, lat.elements[a], lat.elements[b]));
        t.value.push_back(std::move(row));
    }
    return t;
}

/// A pair (X, Y) of lattice indices with K ⊆ (X : Y), K ⊄ X, K ⊄ Y.
using CoprimeWitness = std::pair<std::size_t, std::size_t>;

template <ExactField F>
void require_fi_nonzero(const Lattice<F>& lat, std::size_t k)
{
    if (lat.elements[k].is_zero()) throw Error(ErrorKind::ZeroSubmodule, "coprimeness is defined for nonzero subbicomodules");
    if (!lat.fully_invariant[k]) throw Error(ErrorKind::NotFullyInvariant, "coprimeness is defined for fully invariant subbicomodules");
}

template <ExactField F>
std::optional<CoprimeWitness> coprime_witness(const Lattice<F>& lat, const CoproductTable<F>& t, std::size_t k, bool diagonal_only)
{
    require_fi_nonzero(lat, k);
    const auto& K = lat.elements[k];
    for (std::size_t a = 0; a < t.fi.size(); ++a)
        for (std::size_t b = 0; b < t.fi.size(); ++b) {
            if (diagonal_only && a != b) continue;
            if (!t.value[a][b].contains(K)) continue;
            if (lat.leq[k][t.fi[a]] || lat.leq[k][t.fi[b]]) continue;
            return CoprimeWitness{t.fi[a], t.fi[b]};
        }
    return std::nullopt;
}

template <ExactField F>
bool is_fully_coprime(const Lattice<F>& lat, const CoproductTable<F>& t, std::size_t k)
{
    return !coprime_witness(lat, t, k, false);
}

template <ExactField F>
bool is_fully_cosemiprime(const Lattice<F>& lat, const CoproductTable<F>& t, std::size_t k)
{
    return !coprime_witness(lat, t, k, true);
}

/// Fully coprime test for an arbitrary subspace: false unless it is a nonzero fully invariant lattice element.
template <ExactField F>
bool is_fully_coprime_subspace(const Lattice<F>& lat, const CoproductTable<F>& t, const Subspace<F>& s)
{
    auto idx = lat.index_of(s);
    if (!idx || s.is_zero() || !lat.fully_invariant[*idx]) return false;
    return is_fully_coprime(lat, t, *idx);
}

template <ExactField F>
struct SpectrumReport {
    std::vector<std::size_t> cpspec;          ///< lattice indices, canonical order
    Subspace<F> cpcorad;
    std::vector<std::size_t> csp;
    std::map<std::size_t, CoprimeWitness> not_coprime; ///< witness per rejected candidate
    std::optional<std::vector<std::size_t>> ep, esp;
    std::optional<Subspace<F>> prad, jacobson;
    Completeness certification = Completeness::Generated;

    bool in_cpspec(std::size_t i) const { return std::find(cpspec.begin(), cpspec.end(), i) != cpspec.end(); }
    bool in_csp(std::size_t i) const { return std::find(csp.begin(), csp.end(), i) != csp.end(); }
};

template <ExactField F>
SpectrumReport<F> spectrum(const EndoAlgebra<F>& e, const Lattice<F>& lat, const CoproductTable<F>& t, const IdealAnalysis<F>* ideals)
{
    const F& f = e.field();
    SpectrumReport<F> s{{}, Subspace<F>::zero(f, e.module_dim())};
    s.certification = lat.completeness;
    for (auto k : t.fi) {
        if (lat.elements[k].is_zero()) continue;
        if (auto w = coprime_witness(lat, t, k, false)) {
            s.not_coprime.emplace(k, *w);
        } else {
            s.cpspec.push_back(k);
            s.cpcorad = sum(s.cpcorad, lat.elements[k]);
        }
        if (is_fully_cosemiprime(lat, t, k)) s.csp.push_back(k);
    }
    if (ideals) {
        s.ep.emplace();
        s.esp.emplace();
        for (auto k : t.fi) {
            if (lat.elements[k].is_zero()) continue;
            auto a = an(e, lat.elements[k]).space;
            if (is_prime_ideal(e, a, ideals->two_sided)) s.ep->push_back(k);
            if (is_semiprime_ideal(e, a, ideals->two_sided)) s.esp->push_back(k);
        }
        s.prad = ideals->prad;
        s.jacobson = ideals->jacobson;
    }
    return s;
}

template <ExactField F>
bool subset_of(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b)
{
    return std::all_of(a.begin(), a.end(), [&](std::size_t x) { return std::find(b.begin(), b.end(), x) != b.end(); });
}

/// Cross-checks between the coprime side and the E-prime side.
struct CoradCrossCheck {
    bool ep_subset_cpspec = false;
    bool esp_subset_csp = false;
    bool ep_equals_cpspec = false;
    bool esp_equals_csp = false;
    bool prad_equals_an_cpcorad = false;
    bool cpcorad_equals_ke_prad = false;
    bool cosemiprime_iff_corad = false; ///< (M fully cosemiprime) ⟺ (M = CPcorad)
};

template <ExactField F>
std::optional<CoradCrossCheck> corad_cross_check(const EndoAlgebra<F>& e, const Lattice<F>& lat, const SpectrumReport<F>& s)
{
    if (!s.ep || !s.prad) return std::nullopt;
    CoradCrossCheck c;
    c.ep_subset_cpspec = subset_of<F>(*s.ep, s.cpspec);
    c.esp_subset_csp = subset_of<F>(*s.esp, s.csp);
    c.ep_equals_cpspec = *s.ep == s.cpspec;
    c.esp_equals_csp = *s.esp == s.csp;
    c.prad_equals_an_cpcorad = *s.prad == an(e, s.cpcorad).space;
    c.cpcorad_equals_ke_prad = s.cpcorad == ke(e, *s.prad);
    c.cosemiprime_iff_corad = s.in_csp(lat.top()) == s.cpcorad.is_full();
    return c;
}

/// Image in M of a subspace of L given in L's echelon coordinates.
template <ExactField F>
Subspace<F> embed(const Subspace<F>& l, const Subspace<F>& s)
{
    std::vector<Vector<F>> vs;
    for (std::size_t i = 0; i < s.dim(); ++i) vs.push_back(l.from_coordinates(s.basis_vector(i)));
    return Subspace<F>::span(l.field(), l.ambient_dim(), vs);
}

template <ExactField F>
struct RoInnReport {
    std::vector<Subspace<F>> cpspec_sub;       ///< CPSpec(L) embedded in M
    std::vector<Subspace<F>> cpspec_restricted; ///< {K ∈ CPSpec(M) : K ⊆ L}
    std::vector<Subspace<F>> csp_sub, csp_restricted;
    Subspace<F> cpcorad_sub, cpcorad_restricted; ///< CPcorad(L) and L ∩ CPcorad(M)
    bool cpspec_equal = false, csp_equal = false, cpcorad_equal = false;
    bool certified = false;

    bool ok() const { return cpspec_equal && csp_equal && cpcorad_equal; }
};

} // namespace cotop
