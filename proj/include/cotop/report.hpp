#pragma once

/**
 * @file report.hpp
 * @brief Reports as ordered records, rendered either as text or as
 *        structured lines (one JSON object per line, stable key order).
 *
 * Verdict records carry exactly the Verdict fields, so a CI job can gate on
 * lines whose "status" is "FAIL".
 */

#include "cotop/instance_io.hpp"
#include "cotop/oracle.hpp"
#include "cotop/spectral.hpp"

#include <ostream>

namespace cotop {

enum class ReportFormat { Text, Structured };

inline ReportFormat parse_report_format(std::string_view s)
{
    if (s == "text") return ReportFormat::Text;
    if (s == "structured") return ReportFormat::Structured;
    throw Error(ErrorKind::Usage, "unknown report format \"" + std::string(s) + "\" (expected text or structured)");
}

using Record = ojson;

namespace detail {

inline std::string text_value(const ojson& v)
{
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
    if (v.is_null()) return "-";
    if (v.is_array()) {
        std::string out;
        for (const auto& x : v) out += (out.empty() ? "" : ", ") + text_value(x);
        return "[" + out + "]";
    }
    if (v.is_object()) {
        std::string out;
        for (const auto& [k, x] : v.items()) out += (out.empty() ? "" : " ") + k + "=" + text_value(x);
        return out;
    }
    return v.dump();
}

} // namespace detail

inline void render(std::ostream& os, const std::vector<Record>& records, ReportFormat fmt)
{
    if (fmt == ReportFormat::Structured) {
        for (const auto& r : records) os << r.dump(-1, ' ', false) << '\n';
        return;
    }
    std::string instance;
    for (const auto& r : records) {
        const auto kind = r.value("kind", "");
        if (kind == "verdict") {
            if (r["instance"] != instance) {
                instance = r["instance"].get<std::string>();
                os << "-- " << instance << '\n';
            }
            std::string line = r["status"].get<std::string>();
            line.resize(12, ' ');
            line += r["statement_id"].get<std::string>();
            if (!r["detail"].get<std::string>().empty()) line += "  " + r["detail"].get<std::string>();
            if (!r["hypothesis"].is_null()) line += "  [unmet: " + r["hypothesis"].get<std::string>() + "]";
            if (!r["witness"].is_null()) line += "  [witness: " + r["witness"].get<std::string>() + "]";
            os << line << '\n';
        } else if (kind == "set") {
            os << r["name"].get<std::string>() << " (" << r["members"].size() << "):";
            if (r["members"].empty()) os << " none";
            os << '\n';
            for (const auto& m : r["members"]) os << "  " << detail::text_value(m) << '\n';
        } else if (kind == "section") {
            os << "== " << r["title"].get<std::string>() << " ==\n";
        } else {
            os << kind << ':';
            for (const auto& [k, v] : r.items())
                if (k != "kind") os << ' ' << k << '=' << detail::text_value(v);
            os << '\n';
        }
    }
}

inline Record section(const std::string& title) { return {{"kind", "section"}, {"title", title}}; }

inline Record verdict_record(const Verdict& v, const std::string& instance)
{
    return {{"kind", "verdict"},
            {"instance", instance},
            {"statement_id", v.id},
            {"status", to_string(v.status)},
            {"detail", v.detail},
            {"hypothesis", v.hypothesis.empty() ? ojson(nullptr) : ojson(v.hypothesis)},
            {"witness", v.witness.empty() ? ojson(nullptr) : ojson(v.witness)}};
}

struct VerdictTally {
    std::size_t pass = 0, vacuous = 0, fail = 0, unsupported = 0;
    void add(const Verdict& v)
    {
        switch (v.status) {
        case Status::Pass: ++pass; break;
        case Status::Vacuous: ++vacuous; break;
        case Status::Fail: ++fail; break;
        case Status::Unsupported: ++unsupported; break;
        }
    }
    Record record() const { return {{"kind", "summary"}, {"pass", pass}, {"vacuous", vacuous}, {"fail", fail}, {"unsupported", unsupported}}; }
};

template <ExactField F>
Record element_record(const Lattice<F>& lat, std::size_t i)
{
    return {{"index", i}, {"basis", lat.elements[i].to_string()}};
}

template <ExactField F>
Record set_record(const std::string& name, const Lattice<F>& lat, const std::vector<std::size_t>& idx)
{
    ojson members = ojson::array();
    for (auto i : idx) members.push_back(element_record(lat, i));
    return {{"kind", "set"}, {"name", name}, {"members", members}};
}

template <ExactField F>
Record subspace_record(const std::string& name, const Subspace<F>& s)
{
    return {{"kind", "subspace"}, {"name", name}, {"dim", s.dim()}, {"basis", s.to_string()}};
}

inline ojson optional_bool(const std::optional<bool>& b) { return b ? ojson(*b) : ojson(nullptr); }

template <ExactField F>
Record hypotheses_record(const Analysis<F>& a)
{
    const auto& p = a.pred;
    return {{"kind", "hypotheses"},
            {"certified", p.certified},
            {"duo", p.duo},
            {"quasi_duo", p.quasi_duo},
            {"self_injective", p.self_injective},
            {"self_cogenerator", p.self_cogenerator},
            {"intrinsically_injective", optional_bool(p.intrinsically_injective)},
            {"intrinsically_injective_sampled", p.intrinsically_injective_partial},
            {"subdirectly_irreducible", p.subdirectly_irreducible},
            {"semisimple", p.semisimple},
            {"property_S", p.property_S},
            {"property_S_fi", p.property_S_fi},
            {"corad_essential", p.corad_essential},
            {"E_right_duo", optional_bool(p.e_right_duo)},
            {"E_primes_maximal", optional_bool(p.e_primes_maximal)}};
}

template <ExactField F>
Record instance_record(const std::string& label, const Bicomodule<F>& m)
{
    return {{"kind", "instance"},
            {"label", label},
            {"field", m.field().name()},
            {"dim", m.dim()},
            {"left_dim", m.left_coalgebra().dim()},
            {"right_dim", m.right_coalgebra().dim()}};
}

template <ExactField F>
std::vector<Record> spectrum_records(const std::string& label, const Analysis<F>& a)
{
    std::vector<Record> out;
    out.push_back(instance_record(label, a.m));
    out.push_back({{"kind", "lattice"},
                   {"size", a.lat.size()},
                   {"fully_invariant", a.lat.fully_invariant_indices().size()},
                   {"certification", to_string(a.lat.completeness)},
                   {"endo_dim", a.e.dim()}});
    out.push_back(set_record("CPSpec", a.lat, a.spec.cpspec));
    out.push_back(subspace_record("CPcorad", a.spec.cpcorad));
    out.push_back(set_record("CSP", a.lat, a.spec.csp));
    if (a.spec.ep) {
        out.push_back(set_record("EP", a.lat, *a.spec.ep));
        out.push_back(set_record("ESP", a.lat, *a.spec.esp));
    } else {
        out.push_back({{"kind", "unavailable"}, {"what", a.spec.prad ? "EP, ESP" : "EP, ESP, Prad(E)"}, {"reason", a.ideals_unavailable}});
    }
    if (a.spec.prad) {
        out.push_back(subspace_record("Prad(E)", *a.spec.prad));
        out.push_back(subspace_record("Jacobson(E)", *a.spec.jacobson));
    }
    out.push_back(set_record("S(M)", a.lat, a.simples.simple));
    out.push_back(subspace_record("Corad(M)", a.simples.corad));
    out.push_back(hypotheses_record(a));
    return out;
}

template <ExactField F>
std::vector<Record> topology_records(const Analysis<F>& a, const TopSpace& t)
{
    std::vector<Record> out;
    for (std::size_t p = 0; p < t.size(); ++p)
        out.push_back({{"kind", "point"}, {"id", "P" + std::to_string(p)}, {"index", t.points[p]}, {"basis", a.element(t.points[p]).to_string()}});
    for (const auto& c : t.closed)
        out.push_back({{"kind", "closed_set"}, {"points", to_string(t, c.points)}, {"witness", c.witness}, {"witness_basis", a.element(c.witness).to_string()}});
    auto sep = separation(t);
    ojson comps = ojson::array();
    for (auto c : irreducible_components(t)) comps.push_back(to_string(t, c));
    out.push_back({{"kind", "topology"},
                   {"flavor", to_string(t.flavor)},
                   {"points", t.size()},
                   {"closed_sets", t.closed.size()},
                   {"is_topology", t.is_topology},
                   {"T0", sep.t0},
                   {"T1", sep.t1},
                   {"T2", sep.t2},
                   {"discrete", sep.discrete},
                   {"connected", is_connected(t, t.all())},
                   {"irreducible", is_irreducible(t, t.all())},
                   {"components", comps},
                   {"cpcorad_fully_coprime", is_fully_coprime_subspace(a.lat, a.table, a.spec.cpcorad)}});
    return out;
}

inline std::vector<Record> validation_records(const std::string& object, const std::string& type, const ValidationReport& r)
{
    std::vector<Record> out;
    out.push_back({{"kind", "validation"}, {"object", object}, {"type", type}, {"ok", r.ok()}, {"violations", r.violations.size()}});
    for (const auto& v : r.violations)
        out.push_back({{"kind", "violation"}, {"object", object}, {"identity", v.identity}, {"indices", v.indices}, {"detail", v.detail}});
    return out;
}

inline std::vector<Record> oracle_records(const std::string& label, const oracle::Comparison& c)
{
    std::vector<Record> out;
    out.push_back({{"kind", "oracle"},
                   {"instance", label},
                   {"subspaces", c.subspaces},
                   {"lattice", c.lattice_size},
                   {"CPSpec", c.cpspec_size},
                   {"CSP", c.csp_size},
                   {"identical", c.identical()}});
    for (const auto& d : c.diffs) {
        ojson eo = ojson::array(), oo = ojson::array();
        for (const auto& r : d.engine_only) eo.push_back(oracle::to_string(r));
        for (const auto& r : d.oracle_only) oo.push_back(oracle::to_string(r));
        out.push_back({{"kind", "diff"}, {"what", d.what}, {"engine_only", eo}, {"oracle_only", oo}});
    }
    return out;
}

template <ExactField F>
std::vector<Record> spectral_map_records(const std::string& name, const MorphismAnalysis<F>& a)
{
    const auto& r = a.report;
    ojson map = ojson::array();
    for (std::size_t p = 0; p < r.map.size(); ++p)
        map.push_back(ojson{{"source", a.source.element(r.source_points[p]).to_string()},
                            {"target", r.map[p] ? ojson(a.target.element(a.tgt_full.points[*r.map[p]]).to_string()) : ojson(nullptr)}});
    return {{{"kind", "spectral_map"},
             {"morphism", name},
             {"injective_theta", a.shape.injective},
             {"surjective_theta", a.shape.surjective},
             {"defined", r.defined},
             {"injective", r.injective},
             {"surjective", r.surjective},
             {"continuous", r.continuous_full},
             {"continuous_fi", r.continuous_fi},
             {"open_fi", r.open_fi},
             {"closed_fi", r.closed_fi},
             {"homeomorphism_fi", r.homeomorphism_fi},
             {"cpcorad_included", r.cpcorad_included},
             {"cpcorad_equal", r.cpcorad_equal},
             {"dual_right_duo", optional_bool(a.dual_right_duo)}},
            {{"kind", "set"}, {"name", "point map " + name}, {"members", map}}};
}

} // namespace cotop
