#pragma once

/**
 * @file check.hpp
 * @brief Statement registry: each structural theorem about the coprime
 *        spectrum is evaluated on a concrete instance and yields a verdict.
 *
 * A check first evaluates its hypotheses. If they fail the verdict is
 * VACUOUS and names the missing hypothesis; otherwise the conclusion is
 * tested exhaustively over the computed lattice and a FAIL carries a
 * witness. Failures on an uncertified (generated) lattice are reported as
 * UNSUPPORTED since the enumerated family may be incomplete.
 */

#include "cotop/analysis.hpp"
#include "cotop/catalog.hpp"
#include "cotop/centralizer.hpp"
#include "cotop/topology.hpp"

#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace cotop {

enum class Status { Pass, Vacuous, Fail, Unsupported };

inline const char* to_string(Status s)
{
    switch (s) {
    case Status::Pass: return "PASS";
    case Status::Vacuous: return "VACUOUS";
    case Status::Fail: return "FAIL";
    case Status::Unsupported: return "UNSUPPORTED";
    }
    return "?";
}

struct Verdict {
    std::string id;
    Status status = Status::Pass;
    std::string detail;
    std::string hypothesis; ///< unmet hypothesis for VACUOUS
    std::string witness;    ///< counterexample for FAIL
};

/// Statement ids in registry order.
inline const std::vector<std::string>& statement_ids()
{
    static const std::vector<std::string> ids = {
        "Lemma-Properties-1", "Lemma-Properties-2", "Lemma-Properties-3", "Theorem-Topology",
        "Remark-simple-char-1", "Remark-simple-char-2", "Remark-simple-char-3a", "Remark-simple-char-3b",
        "Remark-simple-char-3c", "Remark-simple-char-3d", "Remark-simple-char-4", "Remark-simple-char-5",
        "Theorem-T1", "Prop-bireg", "Theorem-compact", "Prop-lf", "Prop-duo-irr", "Lemma-it-irr-1", "Lemma-it-irr-2",
        "Prop-irr-components-1", "Prop-irr-components-2", "Lemma-1n", "Lemma-closure", "Theorem-11",
        "Punto-M-An-Ke-1", "Punto-M-An-Ke-2", "Punto-M-An-Ke-3a", "Punto-M-An-Ke-3b", "Remark-duo-duo",
        "Lemma-inn-ideal", "Punto-internal-coproduct", "Prop-corad=", "Prop-ro-inn", "Remark-sub-cop",
        "Lemma-simple-2", "Lemma-simple-3", "Lemma-phi-M", "Lemma-End(C)=Z",
        "Prop-th-tel-1", "Prop-th-tel-2", "Prop-th-tel-3", "Prop-th-tel-4", "Prop-th-tel-5",
    };
    return ids;
}

/// Selects statements by id prefix; empty or "all" selects everything.
class SuiteFilter {
public:
    SuiteFilter() = default;
    explicit SuiteFilter(std::vector<std::string> prefixes)
        : prefixes_(std::move(prefixes))
    {
        if (prefixes_.size() == 1 && prefixes_[0] == "all") prefixes_.clear();
        for (const auto& p : prefixes_) {
            bool any = std::any_of(statement_ids().begin(), statement_ids().end(), [&](const std::string& id) { return id.starts_with(p); });
            if (!any) throw Error(ErrorKind::Usage, "no statement matches \"" + p + "\"");
        }
    }
    static SuiteFilter parse(std::string_view csv)
    {
        std::vector<std::string> out;
        std::string cur;
        for (char ch : csv) {
            if (ch == ',') {
                if (!cur.empty()) out.push_back(cur);
                cur.clear();
            } else {
                cur += ch;
            }
        }
        if (!cur.empty()) out.push_back(cur);
        return SuiteFilter(out);
    }
    bool matches(std::string_view id) const
    {
        if (prefixes_.empty()) return true;
        return std::any_of(prefixes_.begin(), prefixes_.end(), [&](const std::string& p) { return id.starts_with(p); });
    }

private:
    std::vector<std::string> prefixes_;
};

struct CheckOptions {
    AnalysisOptions analysis;
    std::size_t connected_max = 6;      ///< largest subset size examined for connectedness
    std::size_t closure_all_points = 12; ///< all subsets are closed-checked up to this many points
    std::size_t sub_budget = 64;         ///< max subbicomodules analyzed standalone
    std::uint64_t seed = 0;
};

namespace detail {

inline Verdict pass(std::string id, std::string detail = {}) { return {std::move(id), Status::Pass, std::move(detail), {}, {}}; }
inline Verdict vacuous(std::string id, std::string hyp) { return {std::move(id), Status::Vacuous, {}, std::move(hyp), {}}; }
inline Verdict unsupported(std::string id, std::string why) { return {std::move(id), Status::Unsupported, std::move(why), {}, {}}; }
inline Verdict fail(std::string id, std::string witness, bool certified)
{
    if (!certified)
        return {std::move(id), Status::Unsupported, "uncertified lattice; candidate counterexample", {}, std::move(witness)};
    return {std::move(id), Status::Fail, {}, {}, std::move(witness)};
}

/// Names of the false entries among (name, value) pairs, joined by " and ".
inline std::string missing(std::initializer_list<std::pair<const char*, bool>> hyps)
{
    std::string out;
    for (auto [name, ok] : hyps)
        if (!ok) out += (out.empty() ? "" : " and ") + std::string(name);
    return out;
}

inline std::size_t popcount(PointSet s) { return static_cast<std::size_t>(std::popcount(s)); }

} // namespace detail

/// Bicolinear maps Q → M between bicomodules over the same coalgebras, as dim M × dim Q matrices.
template <ExactField F>
std::vector<Matrix<F>> hom_space(const Bicomodule<F>& q, const Bicomodule<F>& m)
{
    const F& f = m.field();
    const std::size_t n = m.dim(), d = q.dim();
    const auto& gm = m.generators();
    const auto& gq = q.generators();
    if (gm.size() != gq.size()) throw Error(ErrorKind::CoalgebraMismatch, "bicomodules over different coalgebras");
    Matrix<F> sys(f, gm.size() * n * d, n * d);
    std::size_t row = 0;
    for (std::size_t g = 0; g < gm.size(); ++g)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < d; ++j, ++row) {
                for (std::size_t t = 0; t < n; ++t) sys(row, t * d + j) = f.add(sys(row, t * d + j), gm[g](i, t));
                for (std::size_t t = 0; t < d; ++t) sys(row, i * d + t) = f.sub(sys(row, i * d + t), gq[g](t, j));
            }
    std::vector<Matrix<F>> out;
    auto sol = kernel(sys);
    for (std::size_t b = 0; b < sol.dim(); ++b) {
        auto v = sol.basis_vector(b);
        Matrix<F> h(f, n, d);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < d; ++j) h(i, j) = v[i * d + j];
        out.push_back(std::move(h));
    }
    return out;
}

/// Whether M/K embeds in a power of M: the maps M/K → M jointly separate points.
template <ExactField F>
bool quotient_cogenerated(const Bicomodule<F>& m, const Subspace<F>& k)
{
    if (k.is_full()) return true;
    auto q = quotient(m, k);
    auto homs = hom_space(q, m);
    Matrix<F> stacked(m.field(), homs.size() * m.dim(), q.dim());
    for (std::size_t h = 0; h < homs.size(); ++h)
        for (std::size_t i = 0; i < m.dim(); ++i)
            for (std::size_t j = 0; j < q.dim(); ++j) stacked(h * m.dim() + i, j) = homs[h](i, j);
    return kernel(stacked).is_zero();
}

/// Evaluates the registry on one analyzed instance.
template <ExactField F>
class Checker {
public:
    Checker(const Analysis<F>& a, CheckOptions opt)
        : a_(a)
        , opt_(std::move(opt))
        , full_(build_topology(a.lat, a.spec, Flavor::Full))
        , fi_(build_topology(a.lat, a.spec, Flavor::FullyInvariant))
    {
        const auto& p = a.pred;
        standing_ = p.duo && p.self_injective && p.property_S;
        standing_missing_ = detail::missing({{"duo", p.duo}, {"self-injective", p.self_injective}, {"Property S", p.property_S}});
        certified_ = a.lat.certified();
        for (const auto& k : a.lat.elements) an_.push_back(an(a.e, k).space);
    }

    std::vector<Verdict> run(const SuiteFilter& filter)
    {
        using Fn = Verdict (Checker::*)();
        static const std::vector<std::pair<const char*, Fn>> registry = {
            {"Lemma-Properties-1", &Checker::properties_1},
            {"Lemma-Properties-2", &Checker::properties_2},
            {"Lemma-Properties-3", &Checker::properties_3},
            {"Theorem-Topology", &Checker::theorem_topology},
            {"Remark-simple-char-1", &Checker::simple_char_1},
            {"Remark-simple-char-2", &Checker::simple_char_2},
            {"Remark-simple-char-3a", &Checker::simple_char_3a},
            {"Remark-simple-char-3b", &Checker::simple_char_3b},
            {"Remark-simple-char-3c", &Checker::simple_char_3c},
            {"Remark-simple-char-3d", &Checker::simple_char_3d},
            {"Remark-simple-char-4", &Checker::simple_char_4},
            {"Remark-simple-char-5", &Checker::simple_char_5},
            {"Theorem-T1", &Checker::theorem_t1},
            {"Prop-bireg", &Checker::prop_bireg},
            {"Theorem-compact", &Checker::theorem_compact},
            {"Prop-lf", &Checker::prop_lf},
            {"Prop-duo-irr", &Checker::prop_duo_irr},
            {"Lemma-it-irr-1", &Checker::it_irr_1},
            {"Lemma-it-irr-2", &Checker::it_irr_2},
            {"Prop-irr-components-1", &Checker::irr_components_1},
            {"Prop-irr-components-2", &Checker::irr_components_2},
            {"Lemma-1n", &Checker::lemma_1n},
            {"Lemma-closure", &Checker::lemma_closure},
            {"Theorem-11", &Checker::theorem_11},
            {"Punto-M-An-Ke-1", &Checker::an_ke_1},
            {"Punto-M-An-Ke-2", &Checker::an_ke_2},
            {"Punto-M-An-Ke-3a", &Checker::an_ke_3a},
            {"Punto-M-An-Ke-3b", &Checker::an_ke_3b},
            {"Remark-duo-duo", &Checker::duo_duo},
            {"Lemma-inn-ideal", &Checker::inn_ideal},
            {"Punto-internal-coproduct", &Checker::internal_coproduct_check},
            {"Prop-corad=", &Checker::prop_corad},
            {"Prop-ro-inn", &Checker::prop_ro_inn},
            {"Remark-sub-cop", &Checker::sub_cop},
            {"Lemma-simple-2", &Checker::simple_2},
            {"Lemma-simple-3", &Checker::simple_3},
            {"Lemma-phi-M", &Checker::phi_m},
            {"Lemma-End(C)=Z", &Checker::end_c},
        };
        std::vector<Verdict> out;
        for (const auto& [id, fn] : registry)
            if (filter.matches(id)) {
                Verdict v = (this->*fn)();
                v.id = id;
                out.push_back(std::move(v));
            }
        return out;
    }

    const TopSpace& full() const { return full_; }
    const TopSpace& fi() const { return fi_; }
    /// The space Z_M: the full topology on duo instances, the fully invariant one otherwise.
    const TopSpace& z() const { return a_.pred.duo ? full_ : fi_; }

private:
    using S = Subspace<F>;

    const S& el(std::size_t i) const { return a_.lat.elements[i]; }
    std::string name(std::size_t i) const { return "L" + std::to_string(i) + "=" + el(i).to_string(); }
    std::string name(const S& s) const
    {
        auto i = a_.lat.index_of(s);
        return i ? name(*i) : s.to_string();
    }

    /// V_S for an arbitrary subspace S.
    PointSet variety_of(const TopSpace& t, const S& s) const
    {
        PointSet out = 0;
        for (std::size_t p = 0; p < t.size(); ++p)
            if (s.contains(el(t.points[p]))) out |= PointSet{1} << p;
        return out;
    }

    bool is_simple(std::size_t i) const
    {
        const auto& s = a_.simples.simple;
        return std::find(s.begin(), s.end(), i) != s.end();
    }

    Verdict gate_standing(const char* id) const { return detail::vacuous(id, standing_missing_); }

    /// Standalone analysis of a nonzero lattice element, cached.
    const Analysis<F>& sub(std::size_t i)
    {
        auto it = sub_.find(i);
        if (it != sub_.end()) return it->second;
        auto o = opt_.analysis;
        o.ideals = false;
        return sub_.emplace(i, analyze(restrict_to(a_.m, el(i)), o)).first->second;
    }

    /// CPcorad(L) computed standalone and embedded in M.
    S sub_cpcorad(std::size_t i)
    {
        if (el(i).is_zero()) return el(i);
        return embed(el(i), sub(i).spec.cpcorad);
    }

    /// Nonzero lattice elements to analyze standalone, capped by sub_budget.
    std::vector<std::size_t> sub_candidates(bool fi_only) const
    {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < a_.lat.size() && out.size() < opt_.sub_budget; ++i)
            if (!el(i).is_zero() && (!fi_only || a_.lat.fully_invariant[i])) out.push_back(i);
        return out;
    }

    // --- Lemma Properties and the topology ---

    Verdict properties_1()
    {
        for (const auto* t : {&full_, &fi_}) {
            if (variety(*t, a_.lat, a_.lat.top()) != t->all()) return detail::fail("", "X_M is not empty", certified_);
            if (variety(*t, a_.lat, a_.lat.bottom()) != 0) return detail::fail("", "X_0 is not CPSpec", certified_);
        }
        return detail::pass("");
    }

    Verdict properties_2()
    {
        const auto all = full_.all();
        for (std::size_t x = 0; x < a_.lat.size(); ++x)
            for (std::size_t y = x + 1; y < a_.lat.size(); ++y) {
                PointSet xx = all & ~variety(full_, a_.lat, x), xy = all & ~variety(full_, a_.lat, y);
                PointSet xs = all & ~variety_of(full_, sum(el(x), el(y)));
                PointSet xi = all & ~variety_of(full_, intersection(el(x), el(y)));
                if ((xs & ~(xx & xy)) != 0 || (xx | xy) != xi)
                    return detail::fail("", "pair " + name(x) + ", " + name(y), certified_);
            }
        return detail::pass("", "all lattice pairs");
    }

    Verdict properties_3()
    {
        const auto all = fi_.all();
        const auto& t = a_.table;
        for (std::size_t i = 0; i < t.fi.size(); ++i)
            for (std::size_t j = 0; j < t.fi.size(); ++j) {
                auto x = t.fi[i], y = t.fi[j];
                PointSet xs = all & ~variety_of(fi_, sum(el(x), el(y)));
                PointSet xx = all & ~variety(fi_, a_.lat, x), xy = all & ~variety(fi_, a_.lat, y);
                PointSet xc = all & ~variety_of(fi_, t.value[i][j]);
                if (xs != (xx & xy) || xs != xc) return detail::fail("", "fully invariant pair " + name(x) + ", " + name(y), certified_);
            }
        return detail::pass("", std::to_string(t.fi.size()) + " fully invariant elements");
    }

    Verdict theorem_topology()
    {
        for (const auto* t : {&full_, &fi_}) {
            if (!t->is_closed(0) || !t->is_closed(t->all())) return detail::fail("", std::string("empty set or whole space not closed (") + to_string(t->flavor) + ")", certified_);
            for (const auto& c : t->closed)
                for (const auto& d : t->closed)
                    if (!t->is_closed(c.points & d.points))
                        return detail::fail("", "intersection of V_" + name(c.witness) + " and V_" + name(d.witness) + " not closed", certified_);
        }
        if (!fi_.is_topology) {
            auto [x, y] = fi_.top_failures.front();
            return detail::fail("", "fully invariant union V_" + name(x) + " ∪ V_" + name(y) + " not closed", certified_);
        }
        if (!a_.pred.duo) return detail::pass("", "fully invariant topology; full family not asserted (not duo)");
        if (!full_.is_topology) {
            auto [x, y] = full_.top_failures.front();
            return detail::fail("", "duo but V_" + name(x) + " ∪ V_" + name(y) + " not closed", certified_);
        }
        return detail::pass("", "both flavors are topologies");
    }

    // --- Remarks simple-char ---

    Verdict simple_char_1()
    {
        auto s = separation(z());
        if (!s.t0) {
            auto [p, q] = *s.t0_failure;
            return detail::fail("", "indistinguishable points " + name(z().points[p]) + ", " + name(z().points[q]), certified_);
        }
        return detail::pass("");
    }

    Verdict simple_char_2()
    {
        if (!standing_) return gate_standing("");
        const auto all = full_.all();
        for (std::size_t p = 0; p < full_.size(); ++p)
            if (variety(full_, a_.lat, a_.lat.bottom()) >> p & 1) return detail::fail("", "point not in X_0", certified_);
        for (const auto& c : full_.closed)
            for (const auto& d : full_.closed) {
                PointSet both = all & ~c.points & ~d.points;
                PointSet xs = all & ~variety_of(full_, sum(el(c.witness), el(d.witness)));
                if ((both & ~xs) != 0 || (xs & ~both) != 0)
                    return detail::fail("", "X_{L1+L2} differs from X_L1 ∩ X_L2 for " + name(c.witness) + ", " + name(d.witness), certified_);
            }
        return detail::pass("", "finite dimension: every subbicomodule is finitely generated");
    }

    Verdict simple_char_3a()
    {
        if (!standing_) return gate_standing("");
        for (std::size_t i = 0; i < a_.lat.size(); ++i) {
            if (el(i).is_zero()) continue;
            bool rhs = false;
            if (auto p = full_.point_of(i)) rhs = variety(full_, a_.lat, i) == (PointSet{1} << *p);
            if (is_simple(i) != rhs) return detail::fail("", name(i) + (is_simple(i) ? " simple but not a closed point" : " closed coprime point but not simple"), certified_);
        }
        return detail::pass("");
    }

    Verdict simple_char_3b()
    {
        if (!standing_) return gate_standing("");
        for (std::size_t p = 0; p < full_.size(); ++p) {
            auto k = full_.points[p];
            PointSet single = PointSet{1} << p;
            if (smallest_closed_superset(full_, single) != variety(full_, a_.lat, k)) return detail::fail("", "closure of {" + name(k) + "} is not V_K", certified_);
            if (is_simple(k) != full_.is_closed(single)) return detail::fail("", name(k) + ": simplicity and closedness of {K} disagree", certified_);
        }
        return detail::pass("");
    }

    Verdict simple_char_3c()
    {
        if (!standing_) return gate_standing("");
        for (std::size_t i = 0; i < a_.lat.size(); ++i)
            if ((variety(full_, a_.lat, i) == 0) != el(i).is_zero()) return detail::fail("", name(i) + " has X_L = CPSpec but L ≠ 0", certified_);
        return detail::pass("");
    }

    Verdict simple_char_3d()
    {
        if (!standing_) return gate_standing("");
        for (std::size_t i = 0; i < a_.lat.size(); ++i)
            if (variety(full_, a_.lat, i) == full_.all() && !el(i).contains(a_.simples.corad))
                return detail::fail("", name(i) + " has X_L empty but does not contain Corad", certified_);
        return detail::pass("");
    }

    Verdict simple_char_4()
    {
        if (!standing_) return gate_standing("");
        std::size_t checked = 0;
        for (auto l : sub_candidates(true)) {
            const auto& L = el(l);
            const auto& s = sub(l);
            auto ts = build_topology(s.lat, s.spec, Flavor::Full);
            // point map CPSpec(L) → CPSpec(M)
            std::vector<std::size_t> image;
            for (auto k : s.spec.cpspec) {
                auto idx = a_.lat.index_of(embed(L, s.element(k)));
                if (!idx || !a_.spec.in_cpspec(*idx))
                    return detail::fail("", "member of CPSpec(" + name(l) + ") is not in CPSpec(M)", certified_ && s.lat.certified());
                image.push_back(*full_.point_of(*idx));
            }
            for (std::size_t n = 0; n < a_.lat.size(); ++n) {
                PointSet pre = 0;
                PointSet vn = variety(full_, a_.lat, n);
                for (std::size_t p = 0; p < image.size(); ++p)
                    if (vn >> image[p] & 1) pre |= PointSet{1} << p;
                auto meet = intersection(el(n), L);
                std::vector<Vector<F>> coords;
                for (std::size_t b = 0; b < meet.dim(); ++b) coords.push_back(*L.coordinates(meet.basis_vector(b)));
                auto local = S::span(a_.m.field(), L.dim(), coords);
                PointSet expect = 0;
                for (std::size_t p = 0; p < ts.size(); ++p)
                    if (local.contains(s.element(ts.points[p]))) expect |= PointSet{1} << p;
                if (pre != expect) return detail::fail("", "preimage of V_" + name(n) + " in Z_" + name(l) + " is not V_{N∩L}", certified_ && s.lat.certified());
                if (!ts.is_closed(pre)) return detail::fail("", "preimage of V_" + name(n) + " not closed in Z_" + name(l), certified_ && s.lat.certified());
            }
            ++checked;
        }
        return detail::pass("", std::to_string(checked) + " fully invariant subbicomodules embedded");
    }

    Verdict simple_char_5()
    {
        std::mt19937_64 rng(opt_.seed ^ 0x5151);
        const F& f = a_.m.field();
        auto p = random_invertible(f, a_.m.dim(), rng);
        auto n = analyze(transport(a_.m, p), opt_.analysis);
        bool cert = certified_ && n.lat.certified();
        auto mapped = [&](const std::vector<std::size_t>& idx) {
            std::vector<S> out;
            for (auto i : idx) out.push_back(image(p, el(i)));
            std::sort(out.begin(), out.end());
            return out;
        };
        auto target = [&](const std::vector<std::size_t>& idx) {
            std::vector<S> out;
            for (auto i : idx) out.push_back(n.element(i));
            return out;
        };
        if (mapped(a_.spec.cpspec) != target(n.spec.cpspec)) return detail::fail("", "CPSpec not transported", cert);
        if (mapped(a_.spec.csp) != target(n.spec.csp)) return detail::fail("", "CSP not transported", cert);
        if (!(image(p, a_.spec.cpcorad) == n.spec.cpcorad)) return detail::fail("", "θ(CPcorad(M)) ≠ CPcorad(N)", cert);
        for (auto flavor : {Flavor::FullyInvariant, Flavor::Full}) {
            if (flavor == Flavor::Full && !a_.pred.duo) continue;
            const auto& t = flavor == Flavor::Full ? full_ : fi_;
            auto tn = build_topology(n.lat, n.spec, flavor);
            std::vector<std::size_t> pm;
            for (auto k : t.points) pm.push_back(*tn.point_of(*n.lat.index_of(image(p, el(k)))));
            std::set<PointSet> images;
            for (const auto& c : t.closed) {
                PointSet out = 0;
                for (std::size_t q = 0; q < t.size(); ++q)
                    if (c.points >> q & 1) out |= PointSet{1} << pm[q];
                images.insert(out);
            }
            std::set<PointSet> targets;
            for (const auto& c : tn.closed) targets.insert(c.points);
            if (images != targets) return detail::fail("", std::string("closed sets not matched (") + to_string(flavor) + ")", cert);
        }
        return detail::pass("", "transport along a seeded invertible matrix");
    }

    // --- separation and compactness ---

    Verdict theorem_t1()
    {
        if (!standing_) return gate_standing("");
        std::vector<std::size_t> cp = a_.spec.cpspec, sm = a_.simples.simple;
        std::sort(cp.begin(), cp.end());
        std::sort(sm.begin(), sm.end());
        bool c1 = cp == sm;
        auto s = separation(full_);
        if (c1 == s.discrete && s.discrete == s.t2 && s.t2 == s.t1) return detail::pass("", std::string("S(M)=CPSpec: ") + (c1 ? "yes" : "no"));
        std::ostringstream w;
        w << "S(M)=CPSpec " << c1 << ", discrete " << s.discrete << ", T2 " << s.t2 << ", T1 " << s.t1;
        return detail::fail("", w.str(), certified_);
    }

    Verdict prop_bireg()
    {
        if (!standing_) return gate_standing("");
        if (!a_.ideals) return detail::unsupported("", a_.ideals_unavailable);
        auto h = detail::missing({{"self-cogenerator", a_.pred.self_cogenerator}, {"every prime ideal of E maximal", a_.ideals->primes_maximal}});
        if (!h.empty()) return detail::vacuous("", h);
        std::vector<std::size_t> cp = a_.spec.cpspec, sm = a_.simples.simple;
        std::sort(cp.begin(), cp.end());
        std::sort(sm.begin(), sm.end());
        if (cp != sm) return detail::fail("", "S(M) ≠ CPSpec", certified_);
        if (a_.pred.subdirectly_irreducible != (cp.size() == 1)) return detail::fail("", "subdirect irreducibility disagrees with |CPSpec| = 1", certified_);
        for (std::size_t i = 0; i < a_.lat.size(); ++i)
            if ((variety(full_, a_.lat, i) == full_.all()) != el(i).contains(a_.simples.corad))
                return detail::fail("", name(i) + ": X_L = ∅ disagrees with Corad ⊆ L", certified_);
        return detail::pass("");
    }

    Verdict theorem_compact()
    {
        if (!standing_) return gate_standing("");
        return detail::pass("", "degenerate: finite space, compact and Lindelöf");
    }

    Verdict prop_lf()
    {
        if (!standing_) return gate_standing("");
        const auto& simples = a_.simples.simple;
        for (auto l : a_.spec.cpspec) {
            auto fsum = S::zero(a_.m.field(), a_.m.dim());
            for (auto k : simples)
                if (!a_.lat.leq[k][l]) fsum = sum(fsum, el(k));
            if (fsum.contains(el(l))) return detail::fail("", name(l) + " lies in F = Σ{K ∈ S(M) : K ⊄ L}", certified_);
            for (auto k : simples)
                if (!fsum.contains(el(k)) && !a_.lat.leq[k][l])
                    return detail::fail("", "neighbourhood X_F of " + name(l) + " meets simple " + name(k) + " outside V_L", certified_);
        }
        return detail::pass("", "degenerate: finite family");
    }

    // --- irreducibility and connectedness ---

    Verdict prop_duo_irr()
    {
        if (!standing_) return gate_standing("");
        bool irr = is_irreducible(full_, full_.all());
        bool fc = is_fully_coprime_subspace(a_.lat, a_.table, a_.spec.cpcorad);
        if (irr != fc) return detail::fail("", std::string("irreducible ") + (irr ? "yes" : "no") + " but CPcorad fully coprime " + (fc ? "yes" : "no"), certified_);
        return detail::pass("", std::string("irreducible: ") + (irr ? "yes" : "no"));
    }

    Verdict it_irr_1()
    {
        if (!standing_) return gate_standing("");
        bool meet = true;
        for (const auto& c : full_.closed)
            for (const auto& d : full_.closed)
                if (c.points && d.points && !(c.points & d.points)) meet = false;
        if (meet != a_.pred.subdirectly_irreducible)
            return detail::fail("", std::string("subdirectly irreducible ") + (a_.pred.subdirectly_irreducible ? "yes" : "no") + ", nonempty closed sets meet " + (meet ? "yes" : "no"), certified_);
        return detail::pass("");
    }

    Verdict it_irr_2()
    {
        if (!standing_) return gate_standing("");
        bool conn = is_connected(full_, full_.all());
        std::vector<std::size_t> cp = a_.spec.cpspec, sm = a_.simples.simple;
        std::sort(cp.begin(), cp.end());
        std::sort(sm.begin(), sm.end());
        if (a_.pred.subdirectly_irreducible && !conn) return detail::fail("", "subdirectly irreducible but CPSpec disconnected", certified_);
        if (conn && cp == sm && !a_.pred.subdirectly_irreducible) return detail::fail("", "connected with CPSpec = S(M) but not subdirectly irreducible", certified_);
        return detail::pass("", std::string("connected: ") + (conn ? "yes" : "no"));
    }

    Verdict irr_components_1()
    {
        if (!standing_) return gate_standing("");
        for (auto k : a_.spec.cpspec)
            if (!is_irreducible(full_, variety(full_, a_.lat, k))) return detail::fail("", "V_" + name(k) + " is reducible", certified_);
        return detail::pass("");
    }

    Verdict irr_components_2()
    {
        if (!standing_) return gate_standing("");
        auto comps = irreducible_components(full_);
        for (auto c : comps) {
            auto r = closure(full_, a_.lat, c);
            auto l = r.phi;
            if (!a_.spec.in_cpspec(l) || variety(full_, a_.lat, l) != c)
                return detail::fail("", "component " + to_string(full_, c) + " is not V_K with K fully coprime", certified_);
            for (auto k : a_.spec.cpspec)
                if (k != l && a_.lat.leq[l][k]) return detail::fail("", name(l) + " is not maximal in CPSpec", certified_);
        }
        return detail::pass("", std::to_string(comps.size()) + " components");
    }

    Verdict lemma_1n()
    {
        if (!standing_) return gate_standing("");
        const std::size_t n = full_.size();
        std::size_t examined = 0;
        std::optional<std::string> bad;
        std::vector<std::size_t> chosen;
        std::function<void(std::size_t)> rec = [&](std::size_t from) {
            if (bad) return;
            if (chosen.size() >= 2) {
                PointSet a = 0;
                for (auto p : chosen) a |= PointSet{1} << p;
                if (is_connected(full_, a)) {
                    ++examined;
                    for (auto i : chosen) {
                        bool ok = false;
                        for (auto j : chosen)
                            if (j != i && (a_.lat.leq[full_.points[i]][full_.points[j]] || a_.lat.leq[full_.points[j]][full_.points[i]])) ok = true;
                        if (!ok) {
                            bad = "connected subset " + to_string(full_, a) + " with incomparable point P" + std::to_string(i);
                            return;
                        }
                    }
                }
            }
            if (chosen.size() == opt_.connected_max) return;
            for (std::size_t p = from; p < n; ++p) {
                chosen.push_back(p);
                rec(p + 1);
                chosen.pop_back();
            }
        };
        rec(0);
        if (bad) return detail::fail("", *bad, certified_);
        return detail::pass("", std::to_string(examined) + " connected subsets of size 2.." + std::to_string(opt_.connected_max));
    }

    Verdict lemma_closure()
    {
        const auto& t = z();
        const std::size_t n = t.size();
        std::vector<PointSet> subsets;
        if (n <= opt_.closure_all_points) {
            for (PointSet a = 0; a <= t.all(); ++a) subsets.push_back(a);
        } else {
            subsets.push_back(0);
            for (std::size_t p = 0; p < n; ++p)
                for (std::size_t q = p; q < n; ++q) subsets.push_back((PointSet{1} << p) | (PointSet{1} << q));
        }
        std::map<PointSet, PointSet> cl;
        for (auto a : subsets) {
            auto r = closure(t, a_.lat, a);
            if (r.formula != r.smallest) return detail::fail("", "closure of " + to_string(t, a) + " is " + to_string(t, r.smallest) + " but V_φ(A) = " + to_string(t, r.formula), certified_);
            if ((a & ~r.smallest) != 0 || smallest_closed_superset(t, r.smallest) != r.smallest)
                return detail::fail("", "closure of " + to_string(t, a) + " not extensive or idempotent", certified_);
            cl[a] = r.smallest;
        }
        if (t.is_topology) {
            std::mt19937_64 rng(opt_.seed);
            const std::size_t pairs = std::min<std::size_t>(subsets.size() * subsets.size(), 4096);
            for (std::size_t i = 0; i < pairs; ++i) {
                PointSet x = subsets[rng() % subsets.size()], y = subsets[rng() % subsets.size()];
                auto u = smallest_closed_superset(t, x | y);
                if (u != (cl[x] | cl[y])) return detail::fail("", "closure not additive on " + to_string(t, x) + ", " + to_string(t, y), certified_);
            }
        }
        return detail::pass("", std::to_string(subsets.size()) + " subsets");
    }

    Verdict theorem_11()
    {
        if (!standing_) return gate_standing("");
        // E(M): L with CPcorad(L) = L, computed standalone
        std::vector<std::size_t> em;
        for (std::size_t i = 0; i < a_.lat.size(); ++i)
            if (sub_cpcorad(i) == el(i)) em.push_back(i);
        std::set<PointSet> from_e;
        for (auto l : em) {
            auto v = variety(full_, a_.lat, l);
            if (closure(full_, a_.lat, v).phi != l) return detail::fail("", "φ(V_L) ≠ L for " + name(l) + " in E(M)", certified_);
            from_e.insert(v);
        }
        for (const auto& c : full_.closed) {
            auto phi = closure(full_, a_.lat, c.points).phi;
            if (std::find(em.begin(), em.end(), phi) == em.end()) return detail::fail("", "φ of closed set " + to_string(full_, c.points) + " is not in E(M)", certified_);
            if (!from_e.count(c.points)) return detail::fail("", "closed set " + to_string(full_, c.points) + " missed by L ↦ V_L", certified_);
        }
        if (from_e.size() != em.size()) return detail::fail("", "L ↦ V_L is not injective on E(M)", certified_);
        std::string detail_text = std::to_string(em.size()) + " closed sets";
        if (a_.pred.self_cogenerator) {
            std::vector<std::size_t> nonzero;
            for (auto l : em)
                if (!el(l).is_zero()) nonzero.push_back(l);
            std::vector<std::size_t> csp = a_.spec.csp;
            std::sort(csp.begin(), csp.end());
            if (nonzero != csp) return detail::fail("", "E(M) \\ {0} differs from CSP", certified_);
            detail_text += "; CL \\ {∅} ↔ CSP";
        }
        return detail::pass("", detail_text);
    }

    // --- annihilators and kernels ---

    Verdict an_ke_1()
    {
        const auto& e = a_.e;
        for (std::size_t i = 0; i < a_.lat.size(); ++i) {
            auto r = classify_ideal(e, an_[i]);
            if (!r.is_right_ideal) return detail::fail("", "An(" + name(i) + ") is not a right ideal", certified_);
            if (a_.lat.fully_invariant[i] && !r.is_two_sided) return detail::fail("", "An(" + name(i) + ") of a fully invariant element is one-sided", certified_);
            if (!ke(e, an_[i]).contains(el(i))) return detail::fail("", name(i) + " ⊄ Ke(An(K))", certified_);
            for (std::size_t j = 0; j < a_.lat.size(); ++j)
                if (a_.lat.leq[i][j] && !an_[i].contains(an_[j])) return detail::fail("", "An not order-reversing on " + name(i) + " ⊆ " + name(j), certified_);
        }
        if (a_.ideals) {
            for (const auto& ideal : a_.ideals->right) {
                auto k = ke(e, ideal);
                if (!a_.m.is_subbicomodule(k)) return detail::fail("", "Ke of a right ideal is not a subbicomodule", certified_);
                if (!an(e, k).space.contains(ideal)) return detail::fail("", "I ⊄ An(Ke(I))", certified_);
            }
            for (const auto& ideal : a_.ideals->two_sided)
                if (!is_fully_invariant(e, ke(e, ideal))) return detail::fail("", "Ke of a two-sided ideal is not fully invariant", certified_);
            return detail::pass("", "lattice and all ideals");
        }
        return detail::pass("", "lattice side only: " + a_.ideals_unavailable);
    }

    Verdict an_ke_2()
    {
        for (std::size_t i = 0; i < a_.lat.size(); ++i) {
            bool closed = ke(a_.e, an_[i]) == el(i);
            if (closed != quotient_cogenerated(a_.m, el(i)))
                return detail::fail("", name(i) + ": Ke(An(K)) = K is " + (closed ? "true" : "false") + " but M/K cogenerated is " + (closed ? "false" : "true"), certified_);
        }
        if (a_.pred.self_cogenerator) {
            std::set<S> seen(an_.begin(), an_.end());
            if (seen.size() != an_.size()) return detail::fail("", "self-cogenerator but An is not injective", certified_);
            return detail::pass("", "An injective");
        }
        return detail::pass("", "equivalence only; not self-cogenerator");
    }

    Verdict an_ke_3a()
    {
        if (!a_.pred.self_injective) return detail::vacuous("", "self-injective");
        for (std::size_t i = 0; i < a_.lat.size(); ++i)
            for (std::size_t j = i + 1; j < a_.lat.size(); ++j) {
                auto lhs = an(a_.e, intersection(el(i), el(j))).space;
                if (!(lhs == sum(an_[i], an_[j]))) return detail::fail("", "An(K1 ∩ K2) ≠ An(K1) + An(K2) for " + name(i) + ", " + name(j), certified_);
            }
        return detail::pass("");
    }

    Verdict an_ke_3b()
    {
        if (!a_.pred.self_injective) return detail::vacuous("", "self-injective");
        if (!a_.pred.intrinsically_injective.value_or(false)) return detail::fail("", "self-injective but not intrinsically injective", certified_);
        return detail::pass("", a_.pred.intrinsically_injective_partial ? "sampled right ideals" : "all right ideals");
    }

    Verdict duo_duo()
    {
        const auto& p = a_.pred;
        bool ii_known = p.intrinsically_injective && !p.intrinsically_injective_partial;
        std::vector<std::string> done, unmet;
        if (p.e_right_duo) {
            if (p.self_cogenerator && *p.e_right_duo) {
                if (!p.duo) return detail::fail("", "self-cogenerator with E right-duo but not duo", certified_);
                done.push_back("sc∧right-duo⇒duo");
            } else {
                unmet.push_back(detail::missing({{"self-cogenerator", p.self_cogenerator}, {"E right-duo", *p.e_right_duo}}));
            }
            if (ii_known && *p.intrinsically_injective && p.duo) {
                if (!*p.e_right_duo) return detail::fail("", "intrinsically injective duo but E not right-duo", certified_);
                done.push_back("ii∧duo⇒right-duo");
            } else {
                unmet.push_back(detail::missing({{"intrinsically injective", ii_known && *p.intrinsically_injective}, {"duo", p.duo}}));
            }
        }
        if (p.self_injective && p.duo) {
            for (auto l : sub_candidates(true))
                if (!sub(l).pred.duo) return detail::fail("", "fully invariant " + name(l) + " is not duo", certified_ && sub(l).lat.certified());
            done.push_back("si∧duo⇒fi duo");
        } else {
            unmet.push_back(detail::missing({{"self-injective", p.self_injective}, {"duo", p.duo}}));
        }
        if (!done.empty()) {
            std::string d;
            for (const auto& x : done) d += (d.empty() ? "" : ", ") + x;
            return detail::pass("", d);
        }
        if (!p.e_right_duo) return detail::unsupported("", "E right-duo unknown: " + a_.ideals_unavailable);
        std::string h;
        for (const auto& x : unmet) h += (h.empty() ? "" : "; ") + x;
        return detail::vacuous("", h);
    }

    Verdict inn_ideal()
    {
        std::size_t equalities = 0;
        for (std::size_t x = 0; x < a_.lat.size(); ++x)
            for (std::size_t y = 0; y < a_.lat.size(); ++y) {
                auto b = ke_product_bound(a_.e, el(x), el(y));
                if (!b.included) return detail::fail("", "(X:Y) ⊄ Ke(An(X)·An(Y)) for " + name(x) + ", " + name(y), certified_);
                if (a_.pred.self_cogenerator) {
                    if (!b.equal) return detail::fail("", "self-cogenerator but (X:Y) ≠ Ke(An(X)·An(Y)) for " + name(x) + ", " + name(y), certified_);
                    ++equalities;
                }
            }
        return detail::pass("", a_.pred.self_cogenerator ? std::to_string(equalities) + " equalities" : "inclusion only; not self-cogenerator");
    }

    Verdict internal_coproduct_check()
    {
        for (std::size_t x = 0; x < a_.lat.size(); ++x)
            for (std::size_t y = 0; y < a_.lat.size(); ++y) {
                auto c = internal_coproduct(a_.e, el(x), el(y));
                if (!a_.m.is_subbicomodule(c)) return detail::fail("", "(X:Y) not a subbicomodule for " + name(x) + ", " + name(y), certified_);
                if (a_.lat.fully_invariant[x] && !is_fully_invariant(a_.e, c))
                    return detail::fail("", "(X:Y) not fully invariant for fully invariant X = " + name(x) + ", Y = " + name(y), certified_);
            }
        return detail::pass("");
    }

    Verdict prop_corad()
    {
        if (!a_.pred.self_cogenerator) return detail::vacuous("", "self-cogenerator");
        auto c = corad_cross_check(a_.e, a_.lat, a_.spec);
        if (!c) return detail::unsupported("", a_.ideals_unavailable);
        if (!c->ep_subset_cpspec) return detail::fail("", "EP ⊄ CPSpec", certified_);
        if (!c->esp_subset_csp) return detail::fail("", "ESP ⊄ CSP", certified_);
        std::string d = "inclusions";
        if (a_.pred.intrinsically_injective.value_or(false)) {
            if (!c->ep_equals_cpspec) return detail::fail("", "intrinsically injective but EP ≠ CPSpec", certified_);
            if (!c->esp_equals_csp) return detail::fail("", "intrinsically injective but ESP ≠ CSP", certified_);
            d += ", EP = CPSpec, ESP = CSP";
        }
        if (!c->prad_equals_an_cpcorad) return detail::fail("", "Prad(E) ≠ An(CPcorad)", certified_);
        if (!c->cpcorad_equals_ke_prad) return detail::fail("", "CPcorad ≠ Ke(Prad(E))", certified_);
        if (!c->cosemiprime_iff_corad) return detail::fail("", "M fully cosemiprime disagrees with M = CPcorad", certified_);
        return detail::pass("", d + ", Prad = An(CPcorad), CPcorad = Ke(Prad)");
    }

    Verdict prop_ro_inn()
    {
        if (!a_.pred.self_injective) return detail::vacuous("", "self-injective");
        std::size_t checked = 0;
        for (auto l : sub_candidates(true)) {
            const auto& L = el(l);
            const auto& s = sub(l);
            bool cert = certified_ && s.lat.certified();
            std::vector<S> sub_cp, sub_csp, res_cp, res_csp;
            for (auto k : s.spec.cpspec) sub_cp.push_back(embed(L, s.element(k)));
            for (auto k : s.spec.csp) sub_csp.push_back(embed(L, s.element(k)));
            for (auto k : a_.spec.cpspec)
                if (a_.lat.leq[k][l]) res_cp.push_back(el(k));
            for (auto k : a_.spec.csp)
                if (a_.lat.leq[k][l]) res_csp.push_back(el(k));
            for (auto* v : {&sub_cp, &sub_csp, &res_cp, &res_csp}) std::sort(v->begin(), v->end());
            if (sub_cp != res_cp) return detail::fail("", "CPSpec(" + name(l) + ") differs from the members of CPSpec(M) inside it", cert);
            if (sub_csp != res_csp) return detail::fail("", "CSP(" + name(l) + ") differs from the members of CSP(M) inside it", cert);
            if (!(embed(L, s.spec.cpcorad) == intersection(L, a_.spec.cpcorad))) return detail::fail("", "CPcorad(" + name(l) + ") ≠ L ∩ CPcorad(M)", cert);
            ++checked;
        }
        return detail::pass("", std::to_string(checked) + " fully invariant subbicomodules");
    }

    Verdict sub_cop()
    {
        for (auto l : a_.simples.simple_fi) {
            const auto& s = sub(l);
            if (!s.spec.in_cpspec(s.lat.top())) return detail::fail("", "simple fully invariant " + name(l) + " is not fully coprime in itself", certified_ && s.lat.certified());
        }
        if (!a_.pred.self_injective) return detail::pass("", "first part only; not self-injective");
        for (auto l : a_.simples.simple_fi)
            if (!a_.spec.in_cpspec(l)) return detail::fail("", "self-injective but simple fully invariant " + name(l) + " is not in CPSpec", certified_);
        if (!a_.pred.property_S_fi) return detail::pass("", "Property S_fi fails; containment part not asserted");
        for (auto l : a_.lat.fully_invariant_indices()) {
            if (el(l).is_zero()) continue;
            bool has = std::any_of(a_.spec.cpspec.begin(), a_.spec.cpspec.end(), [&](std::size_t k) { return a_.lat.leq[k][l]; });
            if (!has) return detail::fail("", "fully invariant " + name(l) + " contains no CPSpec member", certified_);
        }
        return detail::pass("");
    }

    Verdict simple_2()
    {
        if (!a_.pred.property_S) return detail::fail("", "Property S fails", certified_);
        if (a_.pred.quasi_duo && !a_.pred.property_S_fi) return detail::fail("", "quasi-duo without Property S_fi", certified_);
        return detail::pass("", a_.pred.quasi_duo ? "Property S and S_fi" : "Property S");
    }

    Verdict simple_3()
    {
        if (!a_.pred.corad_essential) return detail::fail("", "Corad(M) is not essential", certified_);
        return detail::pass("");
    }

    // --- centralizer ---

    Verdict phi_m()
    {
        if (!(a_.m.left_coalgebra() == a_.m.right_coalgebra())) return detail::vacuous("", "(C,C)-bicomodule");
        auto z = centralizer(a_.m);
        auto r = check_phi(a_.m, a_.e, z);
        if (!r.unital || !r.bicolinear || !r.multiplicative_op || !r.central) {
            std::ostringstream w;
            w << "unital " << r.unital << ", bicolinear " << r.bicolinear << ", anti-multiplicative " << r.multiplicative_op << ", central " << r.central;
            return detail::fail("", w.str(), true);
        }
        return detail::pass("", "centralizer dimension " + std::to_string(z.dim()));
    }

    Verdict end_c()
    {
        if (!is_regular(a_.m)) return detail::vacuous("", "regular bicomodule");
        auto z = centralizer(a_.m);
        auto r = check_phi(a_.m, a_.e, z);
        if (!r.bijective_regular.value_or(false)) return detail::fail("", "φ and ψ are not mutually inverse", true);
        if (!r.endo_commutative.value_or(false)) return detail::fail("", "End(C) is not commutative", true);
        if (!a_.pred.duo) return detail::fail("", "regular bicomodule is not duo", certified_);
        return detail::pass("", "dim C(C) = dim E = " + std::to_string(z.dim()));
    }

    const Analysis<F>& a_;
    CheckOptions opt_;
    TopSpace full_, fi_;
    bool standing_ = false;
    std::string standing_missing_;
    bool certified_ = false;
    std::vector<S> an_;
    std::map<std::size_t, Analysis<F>> sub_;
};

template <ExactField F>
std::vector<Verdict> run_checks(const Analysis<F>& a, const CheckOptions& opt, const SuiteFilter& filter)
{
    Checker<F> c(a, opt);
    return c.run(filter);
}

} // namespace cotop
