#pragma once

/**
 * @file instance_io.hpp
 * @brief JSON instance files: a field, named coalgebras, bicomodules and
 *        coalgebra morphisms with exact coefficients.
 *
 *     {
 *       "field": {"kind": "Fp", "p": 2} | {"kind": "Q"},
 *       "coalgebras": {"C": {"dim": n, "delta": [[i, j, k, c], ...], "counit": [...]}},
 *       "bicomodules": {"M": {"left": "D", "right": "C", "dim": m,
 *                             "rho_left": [[i, j, k, c], ...], "rho_right": [...]}},
 *       "morphisms": {"t": {"source": "C", "target": "D", "matrix": [[...], ...]}}
 *     }
 *
 * Coefficients are integers (reduced mod p over F_p) or "num/den" strings.
 * Rendering is canonical: F_p coefficients as integers, rationals as strings,
 * keys in the order above, so parse ∘ render is the identity.
 */

#include "cotop/bicomodule.hpp"
#include "cotop/catalog.hpp"
#include "cotop/morphism.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace cotop {

using ojson = nlohmann::ordered_json;

template <ExactField F>
struct NamedBicomodule {
    std::string name, left, right;
    Bicomodule<F> module;
};

template <ExactField F>
struct NamedMorphism {
    std::string name, source, target;
    CoalgebraMorphism<F> morphism;
};

template <ExactField F>
struct Instance {
    F field;
    std::vector<std::pair<std::string, Coalgebra<F>>> coalgebras;
    std::vector<NamedBicomodule<F>> bicomodules;
    std::vector<NamedMorphism<F>> morphisms;

    const Coalgebra<F>* coalgebra(std::string_view name) const
    {
        for (const auto& [n, c] : coalgebras)
            if (n == name) return &c;
        return nullptr;
    }
};

namespace detail {

/// Error text without its category prefix.
inline std::string message(const Error& e)
{
    std::string w = e.what();
    auto at = w.find(": ");
    return at == std::string::npos ? w : w.substr(at + 2);
}

/// "line L, column C" of a byte offset.
inline std::string position(std::string_view text, std::size_t offset)
{
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

/// Position of the first occurrence of a token, or empty.
inline std::string locate(std::string_view text, std::string_view token)
{
    auto at = text.find(token);
    if (at == std::string_view::npos) return {};
    return " at " + position(text, at);
}

class Reader {
public:
    explicit Reader(std::string_view text)
        : text_(text)
    {
    }

    [[noreturn]] void fail(const std::string& path, const std::string& what, const ojson* value = nullptr) const
    {
        std::string where = value ? locate(text_, value->dump()) : std::string{};
        if (where.empty() && !path.empty()) where = locate(text_, "\"" + path.substr(path.rfind('.') + 1) + "\"");
        throw Error(ErrorKind::Parse, path + ": " + what + where);
    }

    const ojson& member(const ojson& obj, const std::string& key, const std::string& path) const
    {
        if (!obj.is_object()) fail(path, "expected an object", &obj);
        auto it = obj.find(key);
        if (it == obj.end()) fail(path, "missing key \"" + key + "\"");
        return *it;
    }

    std::size_t index(const ojson& v, const std::string& path) const
    {
        if (!v.is_number_integer() || v.get<std::int64_t>() < 0) fail(path, "expected a non-negative integer", &v);
        return v.get<std::size_t>();
    }

    template <ExactField F>
    typename F::value_type scalar(const F& f, const ojson& v, const std::string& path) const
    {
        try {
            if (v.is_number_integer()) {
                if (v.is_number_unsigned()) return f.parse(std::to_string(v.get<std::uint64_t>()));
                return f.parse(std::to_string(v.get<std::int64_t>()));
            }
            if (v.is_string()) return f.parse(v.get<std::string>());
        } catch (const Error& e) {
            fail(path, message(e), &v);
        }
        fail(path, "expected an integer or a \"num/den\" string", &v);
    }

    template <ExactField F>
    std::vector<Triple<F>> triples(const F& f, const ojson& v, const std::string& path) const
    {
        if (!v.is_array()) fail(path, "expected an array of [i, j, k, coeff]", &v);
        std::vector<Triple<F>> out;
        for (std::size_t t = 0; t < v.size(); ++t) {
            const auto& e = v[t];
            std::string p = path + "[" + std::to_string(t) + "]";
            if (!e.is_array() || e.size() != 4) fail(p, "expected [i, j, k, coeff]", &e);
            out.push_back({index(e[0], p), index(e[1], p), index(e[2], p), scalar(f, e[3], p)});
        }
        return out;
    }

    template <ExactField F>
    Vector<F> vector(const F& f, const ojson& v, std::size_t n, const std::string& path) const
    {
        if (!v.is_array() || v.size() != n) fail(path, "expected an array of length " + std::to_string(n), &v);
        Vector<F> out;
        for (std::size_t i = 0; i < n; ++i) out.push_back(scalar(f, v[i], path + "[" + std::to_string(i) + "]"));
        return out;
    }

private:
    std::string_view text_;
};

inline ojson parse_json(std::string_view text)
{
    try {
        return ojson::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        std::string msg = e.what();
        auto cut = msg.find(": ");
        cut = msg.find(": ", cut == std::string::npos ? 0 : cut + 2);
        throw Error(ErrorKind::Parse, "malformed JSON at " + position(text, e.byte > 0 ? e.byte - 1 : 0) + (cut == std::string::npos ? "" : msg.substr(cut)));
    }
}

template <ExactField F>
ojson scalar_json(const F& f, const typename F::value_type& a)
{
    if constexpr (FiniteField<F>) return a;
    else return f.to_string(a);
}

template <ExactField F>
std::string triples_json(const F& f, const std::vector<Triple<F>>& ts, const std::string& indent)
{
    if (ts.empty()) return "[]";
    std::string out = "[\n";
    for (std::size_t t = 0; t < ts.size(); ++t) {
        ojson row = ojson::array({ts[t].i, ts[t].j, ts[t].k, scalar_json(f, ts[t].coeff)});
        out += indent + "  " + row.dump(-1, ' ', false) + (t + 1 < ts.size() ? ",\n" : "\n");
    }
    return out + indent + "]";
}

template <ExactField F>
std::string vector_json(const F& f, const Vector<F>& v)
{
    ojson a = ojson::array();
    for (const auto& x : v) a.push_back(scalar_json(f, x));
    return a.dump();
}

} // namespace detail

/// Field declared by an instance text.
inline FieldSpec instance_field(std::string_view text)
{
    auto doc = detail::parse_json(text);
    detail::Reader rd(text);
    const auto& fj = rd.member(doc, "field", "field");
    const auto& kind = rd.member(fj, "kind", "field");
    if (kind == "Q") return FieldSpec::rationals();
    if (kind != "Fp") rd.fail("field.kind", "expected \"Fp\" or \"Q\"", &kind);
    auto p = rd.index(rd.member(fj, "p", "field"), "field.p");
    try {
        PrimeField check(p);
    } catch (const Error& e) {
        rd.fail("field.p", detail::message(e), &fj["p"]);
    }
    return FieldSpec::prime(static_cast<std::uint32_t>(p));
}

template <ExactField F>
Instance<F> parse_instance(std::string_view text, const F& f)
{
    auto doc = detail::parse_json(text);
    detail::Reader rd(text);
    if (!(instance_field(text) == spec_of(f))) throw Error(ErrorKind::Parse, "instance field differs from " + f.name());
    for (const auto& [key, _] : doc.items())
        if (key != "field" && key != "coalgebras" && key != "bicomodules" && key != "morphisms") rd.fail(key, "unknown top-level key");
    Instance<F> inst{f, {}, {}, {}};
    auto section = [&](const char* key) -> const ojson* {
        auto it = doc.find(key);
        if (it == doc.end()) return nullptr;
        if (!it->is_object()) rd.fail(key, "expected an object of named entries", &*it);
        return &*it;
    };
    auto wrap = [&](const std::string& path, auto&& fn) {
        try {
            return fn();
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::Parse) throw;
            rd.fail(path, detail::message(e));
        }
    };
    if (const auto* cs = section("coalgebras")) {
        for (const auto& [name, c] : cs->items()) {
            std::string p = "coalgebras." + name;
            auto dim = rd.index(rd.member(c, "dim", p), p + ".dim");
            auto delta = rd.triples(f, rd.member(c, "delta", p), p + ".delta");
            auto counit = rd.vector(f, rd.member(c, "counit", p), dim, p + ".counit");
            inst.coalgebras.emplace_back(name, wrap(p, [&] { return Coalgebra<F>(f, dim, delta, counit); }));
        }
    }
    auto resolve = [&](const ojson& obj, const char* key, const std::string& p) -> std::pair<std::string, const Coalgebra<F>*> {
        const auto& v = rd.member(obj, key, p);
        if (!v.is_string()) rd.fail(p + "." + key, "expected a coalgebra name", &v);
        auto name = v.get<std::string>();
        const auto* c = inst.coalgebra(name);
        if (!c) rd.fail(p + "." + key, "unknown coalgebra \"" + name + "\"", &v);
        return {name, c};
    };
    if (const auto* bs = section("bicomodules")) {
        for (const auto& [name, b] : bs->items()) {
            std::string p = "bicomodules." + name;
            auto [ln, lc] = resolve(b, "left", p);
            auto [rn, rc] = resolve(b, "right", p);
            auto dim = rd.index(rd.member(b, "dim", p), p + ".dim");
            auto rl = rd.triples(f, rd.member(b, "rho_left", p), p + ".rho_left");
            auto rr = rd.triples(f, rd.member(b, "rho_right", p), p + ".rho_right");
            inst.bicomodules.push_back({name, ln, rn, wrap(p, [&] { return Bicomodule<F>(*lc, *rc, dim, rl, rr); })});
        }
    }
    if (const auto* ms = section("morphisms")) {
        for (const auto& [name, m] : ms->items()) {
            std::string p = "morphisms." + name;
            auto [sn, sc] = resolve(m, "source", p);
            auto [tn, tc] = resolve(m, "target", p);
            const auto& rows = rd.member(m, "matrix", p);
            if (!rows.is_array() || rows.size() != tc->dim()) rd.fail(p + ".matrix", "expected target.dim rows", &rows);
            Matrix<F> mat(f, tc->dim(), sc->dim());
            for (std::size_t i = 0; i < tc->dim(); ++i) {
                auto row = rd.vector(f, rows[i], sc->dim(), p + ".matrix[" + std::to_string(i) + "]");
                for (std::size_t j = 0; j < sc->dim(); ++j) mat(i, j) = row[j];
            }
            inst.morphisms.push_back({name, sn, tn, CoalgebraMorphism<F>{*sc, *tc, mat}});
        }
    }
    return inst;
}

template <ExactField F>
std::string render_instance(const Instance<F>& inst)
{
    const F& f = inst.field;
    ojson field = spec_of(f).kind == FieldSpec::Kind::Rationals ? ojson{{"kind", "Q"}} : ojson{{"kind", "Fp"}, {"p", spec_of(f).p}};
    std::ostringstream out;
    out << "{\n  \"field\": " << field.dump() << ",\n  \"coalgebras\": {";
    for (std::size_t c = 0; c < inst.coalgebras.size(); ++c) {
        const auto& [name, co] = inst.coalgebras[c];
        out << (c ? ",\n" : "\n") << "    " << ojson(name).dump() << ": {\n"
            << "      \"dim\": " << co.dim() << ",\n"
            << "      \"delta\": " << detail::triples_json(f, co.delta_triples(), "      ") << ",\n"
            << "      \"counit\": " << detail::vector_json(f, co.counit_vector()) << "\n    }";
    }
    out << (inst.coalgebras.empty() ? "}" : "\n  }");
    if (!inst.bicomodules.empty()) {
        out << ",\n  \"bicomodules\": {";
        for (std::size_t b = 0; b < inst.bicomodules.size(); ++b) {
            const auto& nb = inst.bicomodules[b];
            out << (b ? ",\n" : "\n") << "    " << ojson(nb.name).dump() << ": {\n"
                << "      \"left\": " << ojson(nb.left).dump() << ",\n"
                << "      \"right\": " << ojson(nb.right).dump() << ",\n"
                << "      \"dim\": " << nb.module.dim() << ",\n"
                << "      \"rho_left\": " << detail::triples_json(f, nb.module.rho_left_triples(), "      ") << ",\n"
                << "      \"rho_right\": " << detail::triples_json(f, nb.module.rho_right_triples(), "      ") << "\n    }";
        }
        out << "\n  }";
    }
    if (!inst.morphisms.empty()) {
        out << ",\n  \"morphisms\": {";
        for (std::size_t m = 0; m < inst.morphisms.size(); ++m) {
            const auto& nm = inst.morphisms[m];
            const auto& mat = nm.morphism.matrix;
            out << (m ? ",\n" : "\n") << "    " << ojson(nm.name).dump() << ": {\n"
                << "      \"source\": " << ojson(nm.source).dump() << ",\n"
                << "      \"target\": " << ojson(nm.target).dump() << ",\n"
                << "      \"matrix\": [";
            for (std::size_t i = 0; i < mat.rows(); ++i) {
                Vector<F> row;
                for (std::size_t j = 0; j < mat.cols(); ++j) row.push_back(mat(i, j));
                out << (i ? ",\n" : "\n") << "        " << detail::vector_json(f, row);
            }
            out << (mat.rows() ? "\n      ]" : "]") << "\n    }";
        }
        out << "\n  }";
    }
    out << "\n}\n";
    return out.str();
}

template <ExactField F>
bool same_bicomodule(const Bicomodule<F>& a, const Bicomodule<F>& b)
{
    if (!(a.left_coalgebra() == b.left_coalgebra()) || !(a.right_coalgebra() == b.right_coalgebra()) || a.dim() != b.dim()) return false;
    return a.generators() == b.generators();
}

template <ExactField F>
bool operator==(const Instance<F>& a, const Instance<F>& b)
{
    if (!(a.field == b.field) || a.coalgebras.size() != b.coalgebras.size() || a.bicomodules.size() != b.bicomodules.size() ||
        a.morphisms.size() != b.morphisms.size())
        return false;
    for (std::size_t i = 0; i < a.coalgebras.size(); ++i)
        if (a.coalgebras[i].first != b.coalgebras[i].first || !(a.coalgebras[i].second == b.coalgebras[i].second)) return false;
    for (std::size_t i = 0; i < a.bicomodules.size(); ++i) {
        const auto &x = a.bicomodules[i], &y = b.bicomodules[i];
        if (x.name != y.name || x.left != y.left || x.right != y.right || !same_bicomodule(x.module, y.module)) return false;
    }
    for (std::size_t i = 0; i < a.morphisms.size(); ++i) {
        const auto &x = a.morphisms[i], &y = b.morphisms[i];
        if (x.name != y.name || x.source != y.source || x.target != y.target || !(x.morphism.matrix == y.morphism.matrix)) return false;
    }
    return true;
}

/// Instance holding one coalgebra and, when it is valid, its regular bicomodule.
template <ExactField F>
Instance<F> regular_instance(const std::string& name, const Coalgebra<F>& c)
{
    Instance<F> inst{c.field(), {{name, c}}, {}, {}};
    if (validate_coalgebra(c).ok()) inst.bicomodules.push_back({name + "_reg", name, name, regular_bicomodule(c)});
    return inst;
}

inline std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::Usage, "cannot read \"" + path + "\"");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// Poset files: {"size": n, "relations": [[a, b], ...]} with a ≤ b, closed transitively.
inline Poset parse_poset(std::string_view text)
{
    auto doc = detail::parse_json(text);
    detail::Reader rd(text);
    auto n = rd.index(rd.member(doc, "size", "poset"), "size");
    const auto& rel = rd.member(doc, "relations", "poset");
    if (!rel.is_array()) rd.fail("relations", "expected an array of [a, b]", &rel);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t t = 0; t < rel.size(); ++t) {
        std::string p = "relations[" + std::to_string(t) + "]";
        if (!rel[t].is_array() || rel[t].size() != 2) rd.fail(p, "expected [a, b]", &rel[t]);
        auto a = rd.index(rel[t][0], p), b = rd.index(rel[t][1], p);
        if (a >= n || b >= n) rd.fail(p, "element out of range", &rel[t]);
        pairs.emplace_back(a, b);
    }
    try {
        return Poset::from_relations(n, pairs);
    } catch (const Error& e) {
        throw Error(ErrorKind::Parse, "poset: " + detail::message(e));
    }
}

} // namespace cotop
