#pragma once

/**
 * @file analysis.hpp
 * @brief One-shot pipeline: endomorphisms, lattice, ideals, predicates and
 *        spectrum of a bicomodule.
 */

#include "cotop/coprime.hpp"

namespace cotop {

struct AnalysisOptions {
    LatticeOptions lattice;
    std::uint64_t ideal_budget = 50000;
    bool ideals = true;
};

template <ExactField F>
struct Analysis {
    Bicomodule<F> m;
    EndoAlgebra<F> e;
    Lattice<F> lat;
    Simples<F> simples;
    std::optional<IdealAnalysis<F>> ideals;
    std::string ideals_unavailable; ///< reason when `ideals` is empty
    PredicateReport<F> pred;
    CoproductTable<F> table;
    SpectrumReport<F> spec;

    const Subspace<F>& element(std::size_t i) const { return lat.elements[i]; }
};

template <ExactField F>
Analysis<F> analyze(const Bicomodule<F>& m, const AnalysisOptions& opt = {})
{
    EndoAlgebra<F> e(m);
    auto lat = enumerate_lattice(m, e, opt.lattice);
    auto simples = simples_and_coradical(lat);
    std::optional<IdealAnalysis<F>> ideals;
    std::string reason;
    if (!opt.ideals) {
        reason = "ideal analysis disabled";
    } else if constexpr (FiniteField<F>) {
        try {
            ideals = analyze_ideals(e, opt.ideal_budget);
        } catch (const Error& err) {
            if (err.kind() != ErrorKind::BudgetExceeded) throw;
            reason = err.what();
        }
    } else {
        reason = "ideal enumeration is unsupported over Q";
    }
    auto pred = evaluate_predicates(m, lat, e, ideals ? &*ideals : nullptr, opt.lattice.seed);
    auto table = coproduct_table(e, lat);
    auto spec = spectrum(e, lat, table, ideals ? &*ideals : nullptr);
    if constexpr (!FiniteField<F>)
        if (opt.ideals) spec.prad = spec.jacobson = trace_radical(e);
    return Analysis<F>{m, std::move(e), std::move(lat), std::move(simples), std::move(ideals), std::move(reason),
                       std::move(pred), std::move(table), std::move(spec)};
}

/// CPSpec, CSP and CPcorad of L computed standalone, embedded back into M.
template <ExactField F>
struct SubSpectrum {
    std::vector<Subspace<F>> cpspec, csp;
    Subspace<F> cpcorad;
    bool certified = false;
};

template <ExactField F>
SubSpectrum<F> sub_spectrum(const Bicomodule<F>& m, const Subspace<F>& l, const AnalysisOptions& opt)
{
    const F& f = m.field();
    if (l.is_zero()) return {{}, {}, Subspace<F>::zero(f, m.dim()), true};
    auto o = opt;
    o.ideals = false;
    auto sub = analyze(restrict_to(m, l), o);
    SubSpectrum<F> out{{}, {}, embed(l, sub.spec.cpcorad), sub.lat.certified()};
    for (auto i : sub.spec.cpspec) out.cpspec.push_back(embed(l, sub.element(i)));
    for (auto i : sub.spec.csp) out.csp.push_back(embed(l, sub.element(i)));
    std::sort(out.cpspec.begin(), out.cpspec.end());
    std::sort(out.csp.begin(), out.csp.end());
    return out;
}

/// Compares CPSpec(L) with the fully invariant members of CPSpec(M) inside L (and likewise for CSP).
template <ExactField F>
RoInnReport<F> ro_inn_check(const Analysis<F>& a, std::size_t l, const AnalysisOptions& opt)
{
    if (!a.lat.fully_invariant[l]) throw Error(ErrorKind::NotFullyInvariant, "ro-inn comparison needs a fully invariant subbicomodule");
    const auto& L = a.element(l);
    auto sub = sub_spectrum(a.m, L, opt);
    RoInnReport<F> r{sub.cpspec, {}, sub.csp, {}, sub.cpcorad, intersection(L, a.spec.cpcorad)};
    for (auto k : a.spec.cpspec)
        if (a.lat.leq[k][l]) r.cpspec_restricted.push_back(a.element(k));
    for (auto k : a.spec.csp)
        if (a.lat.leq[k][l]) r.csp_restricted.push_back(a.element(k));
    r.cpspec_equal = r.cpspec_sub == r.cpspec_restricted;
    r.csp_equal = r.csp_sub == r.csp_restricted;
    r.cpcorad_equal = r.cpcorad_sub == r.cpcorad_restricted;
    r.certified = sub.certified && a.lat.certified();
    return r;
}

} // namespace cotop
