#pragma once

/**
 * @file spectral.hpp
 * @brief Maps between spectra induced by coalgebra morphisms θ: C → C'.
 *
 * Both coalgebras are studied through their right comodules C^r, modeled as
 * (k, C)-bicomodules. The point map sends K to the image subspace θ(K).
 */

#include "cotop/check.hpp"
#include "cotop/morphism.hpp"

namespace cotop {

template <ExactField F>
struct SpectralMapReport {
    std::vector<std::size_t> source_points;      ///< CPSpec(C^r) lattice indices
    std::vector<std::optional<std::size_t>> map; ///< target CPSpec position of θ(K), empty when θ(K) is not a point
    bool defined = false;                        ///< every θ(K) is in CPSpec(C'^r)
    bool injective = false, surjective = false;
    bool continuous_full = false, continuous_fi = false;
    bool closed_fi = false, open_fi = false;
    bool homeomorphism_fi = false;
    bool cpcorad_included = false; ///< θ(CPcorad) ⊆ CPcorad'
    bool cpcorad_equal = false;
    bool pullback = false;         ///< θ^{-1}(θ(K)) = K for every point K
    std::string undefined_witness;
};

/// Whether a morphism matrix is injective, surjective, bijective.
template <ExactField F>
struct MapShape {
    bool injective, surjective;
};

template <ExactField F>
MapShape<F> map_shape(const Matrix<F>& m)
{
    auto r = rank(m);
    return {r == m.cols(), r == m.rows()};
}

/// Right-duo test for the dual algebra by enumerating principal right ideals; empty over Q or when too large.
template <ExactField F>
std::optional<bool> dual_right_duo(const Coalgebra<F>& c, std::uint64_t budget = 1u << 16)
{
    if constexpr (!FiniteField<F>) {
        return std::nullopt;
    } else {
        const F& f = c.field();
        const std::size_t n = c.dim();
        std::uint64_t total = 1;
        for (std::size_t i = 0; i < n; ++i) {
            if (total > budget / f.size()) return std::nullopt;
            total *= f.size();
        }
        DualAlgebra<F> d(c);
        std::vector<Vector<F>> basis;
        for (std::size_t b = 0; b < n; ++b) basis.push_back(unit_vector(f, n, b));
        Vector<F> x(n, f.zero());
        for (std::uint64_t code = 1; code < total; ++code) {
            std::uint64_t rest = code;
            for (std::size_t i = 0; i < n; ++i) {
                x[i] = f.element(rest % f.size());
                rest /= f.size();
            }
            std::vector<Vector<F>> gens;
            for (const auto& r : basis) gens.push_back(d.multiply(x, r));
            auto ideal = Subspace<F>::span(f, n, gens);
            for (const auto& r : basis)
                if (!ideal.contains(d.multiply(r, x))) return false;
        }
        return true;
    }
}

template <ExactField F>
struct MorphismAnalysis {
    CoalgebraMorphism<F> theta;
    Analysis<F> source, target;
    TopSpace src_full, src_fi, tgt_full, tgt_fi;
    SpectralMapReport<F> report;
    MapShape<F> shape;
    std::optional<bool> dual_right_duo;
};

namespace detail {

template <ExactField F>
bool map_continuous(const TopSpace& s, const TopSpace& t, const std::vector<std::optional<std::size_t>>& map)
{
    for (const auto& c : t.closed) {
        PointSet pre = 0;
        for (std::size_t p = 0; p < map.size(); ++p)
            if (map[p] && (c.points >> *map[p] & 1)) pre |= PointSet{1} << p;
        if (!s.is_closed(pre)) return false;
    }
    return true;
}

template <ExactField F>
PointSet image_of(const std::vector<std::optional<std::size_t>>& map, PointSet a)
{
    PointSet out = 0;
    for (std::size_t p = 0; p < map.size(); ++p)
        if ((a >> p & 1) && map[p]) out |= PointSet{1} << *map[p];
    return out;
}

} // namespace detail

template <ExactField F>
MorphismAnalysis<F> analyze_morphism(const CoalgebraMorphism<F>& theta, const AnalysisOptions& opt = {})
{
    auto v = validate_morphism(theta);
    if (!v.ok()) throw Error(ErrorKind::InvalidMorphism, "invalid morphism (" + v.violations.front().identity + ")");
    auto src = analyze(right_comodule(theta.source), opt);
    auto tgt = analyze(right_comodule(theta.target), opt);
    auto sf = build_topology(src.lat, src.spec, Flavor::Full), si = build_topology(src.lat, src.spec, Flavor::FullyInvariant);
    auto tf = build_topology(tgt.lat, tgt.spec, Flavor::Full), ti = build_topology(tgt.lat, tgt.spec, Flavor::FullyInvariant);
    SpectralMapReport<F> r;
    r.source_points = src.spec.cpspec;
    r.defined = true;
    r.pullback = true;
    for (auto k : src.spec.cpspec) {
        auto img = image(theta.matrix, src.element(k));
        if (!(preimage(theta.matrix, img) == src.element(k))) r.pullback = false;
        auto idx = tgt.lat.index_of(img);
        std::optional<std::size_t> pt;
        if (idx && tgt.spec.in_cpspec(*idx)) pt = tf.point_of(*idx);
        if (!pt && r.defined) {
            r.defined = false;
            r.undefined_witness = "θ(" + src.element(k).to_string() + ") = " + img.to_string() + " is not in CPSpec of the target";
        }
        r.map.push_back(pt);
    }
    std::set<std::size_t> hit;
    for (auto p : r.map)
        if (p) hit.insert(*p);
    r.injective = r.defined && hit.size() == r.map.size();
    r.surjective = r.defined && hit.size() == tf.size();
    r.continuous_full = r.defined && detail::map_continuous<F>(sf, tf, r.map);
    r.continuous_fi = r.defined && detail::map_continuous<F>(si, ti, r.map);
    if (r.defined) {
        r.closed_fi = std::all_of(si.closed.begin(), si.closed.end(), [&](const ClosedSet& c) { return ti.is_closed(detail::image_of<F>(r.map, c.points)); });
        r.open_fi = true;
        for (const auto& c : si.closed) {
            PointSet open = si.all() & ~c.points;
            if (!ti.is_open(detail::image_of<F>(r.map, open))) r.open_fi = false;
        }
    }
    r.homeomorphism_fi = r.injective && r.surjective && r.continuous_fi && r.closed_fi;
    auto cp_img = image(theta.matrix, src.spec.cpcorad);
    r.cpcorad_included = tgt.spec.cpcorad.contains(cp_img);
    r.cpcorad_equal = cp_img == tgt.spec.cpcorad;
    auto shape = map_shape(theta.matrix);
    auto duo = dual_right_duo(theta.source);
    return {theta, std::move(src), std::move(tgt), std::move(sf), std::move(si), std::move(tf), std::move(ti), std::move(r), shape, duo};
}

/// Verdicts for the five parts of the morphism statement.
template <ExactField F>
std::vector<Verdict> check_morphism(const MorphismAnalysis<F>& a, const SuiteFilter& filter)
{
    const auto& s = a.source.pred;
    const auto& t = a.target.pred;
    const auto& r = a.report;
    const bool cert = a.source.lat.certified() && a.target.lat.certified();
    std::vector<Verdict> out;
    auto emit = [&](const char* id, Verdict v) {
        if (!filter.matches(id)) return;
        v.id = id;
        out.push_back(std::move(v));
    };

    bool ii_known = s.intrinsically_injective && !s.intrinsically_injective_partial;
    std::string h0_missing = detail::missing({{"source self-cogenerator", s.self_cogenerator}, {"target self-cogenerator", t.self_cogenerator}});
    bool h0_partial = h0_missing.empty() && !ii_known;
    if (h0_missing.empty() && ii_known && !*s.intrinsically_injective) h0_missing = "source intrinsically injective";
    bool h0 = h0_missing.empty() && !h0_partial;
    auto gate0 = [&]() -> std::optional<Verdict> {
        if (!h0_missing.empty()) return detail::vacuous("", h0_missing);
        if (h0_partial) return detail::unsupported("", "intrinsic injectivity of the source only sampled");
        return std::nullopt;
    };

    bool inj_si = a.shape.injective && t.self_injective;
    std::optional<bool> h1;
    if (h0) {
        if (inj_si || a.dual_right_duo.value_or(false)) h1 = true;
        else if (a.dual_right_duo) h1 = false;
    }

    // part 1
    if (auto g = gate0()) emit("Prop-th-tel-1", *g);
    else if (!h1) emit("Prop-th-tel-1", detail::unsupported("", "right-duo test of the dual algebra unavailable"));
    else if (!*h1) emit("Prop-th-tel-1", detail::vacuous("", "θ injective with self-injective target, or dual algebra right-duo"));
    else if (!r.defined) emit("Prop-th-tel-1", detail::fail("", r.undefined_witness, cert));
    else if (!r.cpcorad_included) emit("Prop-th-tel-1", detail::fail("", "θ(CPcorad) ⊄ CPcorad of the target", cert));
    else emit("Prop-th-tel-1", detail::pass("", std::to_string(r.map.size()) + " points mapped"));

    // part 2
    if (auto g = gate0()) emit("Prop-th-tel-2", *g);
    else if (!h1) emit("Prop-th-tel-2", detail::unsupported("", "right-duo test of the dual algebra unavailable"));
    else if (!*h1 || !s.duo || !t.duo)
        emit("Prop-th-tel-2", detail::vacuous("", detail::missing({{"part 1 hypotheses", *h1}, {"source duo", s.duo}, {"target duo", t.duo}})));
    else if (!r.continuous_full) emit("Prop-th-tel-2", detail::fail("", r.defined ? "preimage of a closed set is not closed" : r.undefined_witness, cert));
    else emit("Prop-th-tel-2", detail::pass("", "continuous"));

    // part 3
    if (auto g = gate0()) emit("Prop-th-tel-3", *g);
    else if (!r.pullback || !r.defined) emit("Prop-th-tel-3", detail::vacuous("", "every point is the preimage of its image point"));
    else if (!r.injective) emit("Prop-th-tel-3", detail::fail("", "two points share an image", cert));
    else emit("Prop-th-tel-3", detail::pass("", "injective"));

    // part 4
    if (auto g = gate0()) emit("Prop-th-tel-4", *g);
    else if (!inj_si) emit("Prop-th-tel-4", detail::vacuous("", detail::missing({{"θ injective", a.shape.injective}, {"target self-injective", t.self_injective}})));
    else if (!r.defined || !r.continuous_fi) emit("Prop-th-tel-4", detail::fail("", r.defined ? "not continuous for the fully invariant topologies" : r.undefined_witness, cert));
    else if (r.surjective && !(r.open_fi && r.closed_fi)) emit("Prop-th-tel-4", detail::fail("", "surjective but not open and closed", cert));
    else emit("Prop-th-tel-4", detail::pass("", r.surjective ? "continuous, open and closed" : "continuous"));

    // part 5
    bool iso = a.shape.injective && a.shape.surjective;
    if (auto g = gate0()) emit("Prop-th-tel-5", *g);
    else if (!iso) emit("Prop-th-tel-5", detail::vacuous("", "θ an isomorphism"));
    else if (!r.homeomorphism_fi) emit("Prop-th-tel-5", detail::fail("", r.defined ? "point map is not a homeomorphism" : r.undefined_witness, cert));
    else if (!r.cpcorad_equal) emit("Prop-th-tel-5", detail::fail("", "θ(CPcorad) ≠ CPcorad of the target", cert));
    else emit("Prop-th-tel-5", detail::pass("", "homeomorphism"));
    return out;
}

/// Morphisms used by the random suite for a regular instance.
template <ExactField F>
std::vector<std::pair<std::string, CoalgebraMorphism<F>>> suite_morphisms(const RandomInstance<F>& inst, std::uint64_t seed)
{
    std::vector<std::pair<std::string, CoalgebraMorphism<F>>> out;
    if (!inst.coalgebra) return out;
    const auto& c = *inst.coalgebra;
    const F& f = c.field();
    std::mt19937_64 rng(seed ^ 0x7e1);
    out.emplace_back("identity", identity_morphism(c));
    auto lat = enumerate_lattice(inst.m, EndoAlgebra<F>(inst.m), {});
    std::vector<std::size_t> nonzero;
    for (std::size_t i = 0; i < lat.size(); ++i)
        if (!lat.elements[i].is_zero()) nonzero.push_back(i);
    if (!nonzero.empty()) out.emplace_back("inclusion", subcoalgebra_inclusion(c, lat.elements[nonzero[rng() % nonzero.size()]]));
    out.emplace_back("transport", transport_coalgebra(c, random_invertible(f, c.dim(), rng)));
    if (inst.poset) out.emplace_back("diagonal-collapse", diagonal_collapse(*inst.poset, f));
    return out;
}

} // namespace cotop
