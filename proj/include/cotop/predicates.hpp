#pragma once

/**
 * @file predicates.hpp
 * @brief Module-theoretic predicates of a bicomodule evaluated on its lattice.
 *
 * When the lattice is only Generated, every boolean is relative to the
 * enumerated family; `certified` records which case applies.
 */

#include "cotop/ideals.hpp"

namespace cotop {

template <ExactField F>
struct Simples {
    std::vector<std::size_t> simple;    ///< S(M): minimal nonzero lattice elements
    std::vector<std::size_t> simple_fi; ///< S_fi(M): minimal nonzero fully invariant elements
    Subspace<F> corad;                  ///< sum of S(M)
    bool certified = false;
};

template <ExactField F>
Simples<F> simples_and_coradical(const Lattice<F>& lat)
{
    const auto& z = lat.elements[lat.bottom()];
    Simples<F> out{{}, {}, z, lat.certified()};
    for (std::size_t i = 0; i < lat.size(); ++i) {
        if (lat.elements[i].is_zero()) continue;
        bool min_all = true, min_fi = lat.fully_invariant[i];
        for (std::size_t j = 0; j < lat.size(); ++j) {
            if (j == i || lat.elements[j].is_zero() || !lat.leq[j][i]) continue;
            min_all = false;
            if (lat.fully_invariant[j]) min_fi = false;
        }
        if (min_all) {
            out.simple.push_back(i);
            out.corad = sum(out.corad, lat.elements[i]);
        }
        if (min_fi) out.simple_fi.push_back(i);
    }
    return out;
}

/// Bicolinear maps K → M as n × dim K matrices in the echelon basis of K.
template <ExactField F>
Subspace<F> hom_into(const Bicomodule<F>& m, const Subspace<F>& k)
{
    const F& f = m.field();
    const std::size_t n = m.dim(), d = k.dim();
    const auto& gens = m.generators();
    // unknown h (n × d), equations G h − h G_K = 0
    Matrix<F> sys(f, gens.size() * n * d, n * d);
    std::size_t row = 0;
    for (const auto& g : gens) {
        auto gk = restrict_matrix(g, k);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < d; ++j, ++row) {
                for (std::size_t t = 0; t < n; ++t) sys(row, t * d + j) = f.add(sys(row, t * d + j), g(i, t));
                for (std::size_t t = 0; t < d; ++t) sys(row, i * d + t) = f.sub(sys(row, i * d + t), gk(t, j));
            }
    }
    return kernel(sys);
}

/// Whether every bicolinear K → M extends to an endomorphism of M.
template <ExactField F>
bool extends_from(const Bicomodule<F>& m, const EndoAlgebra<F>& e, const Subspace<F>& k)
{
    if (k.is_zero()) return true;
    auto hom = hom_into(m, k);
    std::vector<Vector<F>> restricted;
    auto kb = transpose(k.basis()); // n × d, columns are the basis of K
    for (const auto& phi : e.basis()) restricted.push_back((phi * kb).entries());
    return rank(Matrix<F>::from_rows(m.field(), m.dim() * k.dim(), restricted)) == hom.dim();
}

template <ExactField F>
struct PredicateReport {
    bool certified = false;
    bool duo = false;
    bool quasi_duo = false;
    bool self_injective = false;
    bool self_cogenerator = false;
    std::optional<bool> intrinsically_injective;
    bool intrinsically_injective_partial = false; ///< checked on a sample family only
    bool subdirectly_irreducible = false;
    bool semisimple = false;
    bool property_S = false;
    bool property_S_fi = false;
    bool corad_essential = false;
    std::optional<bool> e_right_duo;              ///< empty over Q
    std::optional<bool> e_primes_maximal;         ///< every prime ideal of E maximal (finite fields)
    std::optional<std::vector<std::size_t>> not_self_cog_witness;
};

template <ExactField F>
PredicateReport<F> evaluate_predicates(const Bicomodule<F>& m, const Lattice<F>& lat, const EndoAlgebra<F>& e,
                                       const IdealAnalysis<F>* ideals = nullptr, std::uint64_t seed = 0)
{
    PredicateReport<F> r;
    r.certified = lat.certified();
    auto simples = simples_and_coradical(lat);
    const F& f = m.field();

    r.duo = std::all_of(lat.fully_invariant.begin(), lat.fully_invariant.end(), [](bool b) { return b; });
    r.quasi_duo = true;
    for (auto i : simples.simple)
        if (!lat.fully_invariant[i]) r.quasi_duo = false;

    r.self_injective = true;
    r.self_cogenerator = true;
    for (std::size_t i = 0; i < lat.size(); ++i) {
        const auto& k = lat.elements[i];
        if (r.self_injective && !extends_from(m, e, k)) r.self_injective = false;
        if (!(ke(e, an(e, k).space) == k)) {
            if (r.self_cogenerator) r.not_self_cog_witness = std::vector<std::size_t>{i};
            r.self_cogenerator = false;
        }
    }

    auto inj_on = [&](const Subspace<F>& ideal) { return an(e, ke(e, ideal)).space == ideal; };
    if (ideals) {
        r.intrinsically_injective = std::all_of(ideals->right.begin(), ideals->right.end(), inj_on);
        r.e_right_duo = ideals->right_duo;
        r.e_primes_maximal = ideals->primes_maximal;
    } else {
        bool ok = true;
        for (const auto& k : lat.elements) ok = ok && inj_on(an(e, k).space);
        std::mt19937_64 rng(seed);
        for (int t = 0; t < 16 && ok; ++t) {
            Vector<F> x(e.dim(), f.zero());
            for (auto& c : x) c = detail::random_scalar(f, rng);
            ok = inj_on(ideal_generated(e, Subspace<F>::span(f, e.dim(), {x}), IdealSide::Right));
        }
        r.intrinsically_injective = ok;
        r.intrinsically_injective_partial = true;
    }

    auto meet = Subspace<F>::full(f, m.dim());
    for (const auto& k : lat.elements)
        if (!k.is_zero()) meet = intersection(meet, k);
    r.subdirectly_irreducible = !meet.is_zero();
    r.semisimple = simples.corad.is_full();

    r.property_S = r.property_S_fi = r.corad_essential = true;
    for (std::size_t i = 0; i < lat.size(); ++i) {
        if (lat.elements[i].is_zero()) continue;
        bool has_simple = std::any_of(simples.simple.begin(), simples.simple.end(), [&](std::size_t s) { return lat.leq[s][i]; });
        if (!has_simple) r.property_S = false;
        if (lat.fully_invariant[i]) {
            bool has_fi = std::any_of(simples.simple_fi.begin(), simples.simple_fi.end(), [&](std::size_t s) { return lat.leq[s][i]; });
            if (!has_fi) r.property_S_fi = false;
        }
        if (intersection(simples.corad, lat.elements[i]).is_zero()) r.corad_essential = false;
    }
    return r;
}

} // namespace cotop
