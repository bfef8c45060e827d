#pragma once

/**
 * @file resolve.hpp
 * @brief Catalog references and instance files, resolved to an instance.
 *
 *     grouplike:n  divided:N  divided-shifted:N  comatrix:n
 *     incidence:chain:n  incidence:antichain:n  incidence:<poset.json>
 *     sum:(a,b)  quotient:(ref,e0+2e3)  <instance.json>
 *
 * Quotients divide by the subbicomodule generated by the given vector,
 * written as a sum of 0-based basis terms.
 */

#include "cotop/instance_io.hpp"

#include <filesystem>

namespace cotop {

inline const std::vector<std::pair<std::string, std::string>>& catalog_entries()
{
    static const std::vector<std::pair<std::string, std::string>> e = {
        {"grouplike:n", "group-like coalgebra kG_n, basis g_0..g_{n-1}"},
        {"divided:N", "divided-power coalgebra D_N, basis c_0..c_N"},
        {"divided-shifted:N", "D_N with comultiplication indexed from j = 1 (fails the counit law)"},
        {"comatrix:n", "comatrix coalgebra M^c(n), basis e_ij at index i*n+j"},
        {"incidence:chain:n", "incidence coalgebra of the n-element chain"},
        {"incidence:antichain:n", "incidence coalgebra of the n-element antichain"},
        {"incidence:<file>", "incidence coalgebra of a poset file {\"size\": n, \"relations\": [[a, b], ...]}"},
        {"sum:(a,b)", "direct sum of two catalog coalgebras"},
        {"quotient:(ref,v)", "quotient of a bicomodule by the subbicomodule generated by v, e.g. e0+2e3"},
    };
    return e;
}

template <ExactField F>
struct Resolved {
    std::string label;
    Instance<F> instance;
    std::optional<Poset> poset; ///< set for incidence coalgebras
};

namespace detail {

inline std::size_t parse_count(std::string_view s, std::string_view ref)
{
    if (s.empty() || s.size() > 6 || s.find_first_not_of("0123456789") != std::string_view::npos)
        throw Error(ErrorKind::Usage, "expected a size in \"" + std::string(ref) + "\"");
    return std::stoul(std::string(s));
}

/// Splits "(a,b)" at its top-level comma.
inline std::pair<std::string, std::string> split_pair(std::string_view s, std::string_view ref)
{
    if (s.size() < 2 || s.front() != '(' || s.back() != ')') throw Error(ErrorKind::Usage, "expected (a,b) in \"" + std::string(ref) + "\"");
    s = s.substr(1, s.size() - 2);
    int depth = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '(') ++depth;
        else if (s[i] == ')') --depth;
        else if (s[i] == ',' && depth == 0) return {std::string(s.substr(0, i)), std::string(s.substr(i + 1))};
    }
    throw Error(ErrorKind::Usage, "expected (a,b) in \"" + std::string(ref) + "\"");
}

/// "e0+2e3-e1" as a coordinate vector.
template <ExactField F>
Vector<F> parse_basis_sum(const F& f, std::string_view s, std::size_t n)
{
    Vector<F> v(n, f.zero());
    std::size_t i = 0;
    auto bad = [&] { return Error(ErrorKind::Usage, "malformed vector \"" + std::string(s) + "\" (expected e.g. e0+2e3)"); };
    if (s.empty()) throw bad();
    while (i < s.size()) {
        bool neg = false;
        if (s[i] == '+' || s[i] == '-') neg = s[i++] == '-';
        auto e = s.find('e', i);
        if (e == std::string_view::npos) throw bad();
        auto coeff_text = s.substr(i, e - i);
        auto coeff = coeff_text.empty() ? f.one() : f.parse(coeff_text);
        i = e + 1;
        auto end = i;
        while (end < s.size() && std::isdigit(static_cast<unsigned char>(s[end]))) ++end;
        if (end == i) throw bad();
        auto idx = std::stoul(std::string(s.substr(i, end - i)));
        if (idx >= n) throw Error(ErrorKind::Usage, "basis index " + std::to_string(idx) + " out of range in \"" + std::string(s) + "\"");
        v[idx] = f.add(v[idx], neg ? f.neg(coeff) : coeff);
        i = end;
    }
    return v;
}

} // namespace detail

inline bool is_instance_file(std::string_view ref)
{
    std::error_code ec;
    return std::filesystem::is_regular_file(std::filesystem::path(ref), ec);
}

/// Field of a reference: the file's own field, else `fallback`.
inline FieldSpec reference_field(std::string_view ref, const FieldSpec& fallback)
{
    if (is_instance_file(ref)) return instance_field(read_file(std::string(ref)));
    return fallback;
}

/// The named bicomodule, else the first one, else the regular bicomodule of the first coalgebra.
template <ExactField F>
NamedBicomodule<F> select_bicomodule(const Instance<F>& inst, std::string_view name)
{
    for (const auto& b : inst.bicomodules)
        if (name.empty() || b.name == name) return b;
    if (!name.empty()) throw Error(ErrorKind::Usage, "no bicomodule named \"" + std::string(name) + "\"");
    if (inst.coalgebras.empty()) throw Error(ErrorKind::Usage, "instance has no coalgebra or bicomodule");
    const auto& [cn, c] = inst.coalgebras.front();
    return {cn + "_reg", cn, cn, regular_bicomodule(c)};
}

template <ExactField F>
Resolved<F> resolve(std::string_view ref, const F& f)
{
    if (is_instance_file(ref)) return {std::string(ref), parse_instance(read_file(std::string(ref)), f), std::nullopt};
    auto colon = ref.find(':');
    if (colon == std::string_view::npos) throw Error(ErrorKind::Usage, "no such file or catalog entry \"" + std::string(ref) + "\"");
    auto kind = ref.substr(0, colon), arg = ref.substr(colon + 1);
    auto regular = [&](const std::string& name, Coalgebra<F> c, std::optional<Poset> p = std::nullopt) {
        return Resolved<F>{std::string(ref), regular_instance(name, c), std::move(p)};
    };
    if (kind == "grouplike") {
        auto n = detail::parse_count(arg, ref);
        return regular("G" + std::to_string(n), grouplike(n, f));
    }
    if (kind == "divided") {
        auto n = detail::parse_count(arg, ref);
        return regular("D" + std::to_string(n), divided_power(n, f));
    }
    if (kind == "divided-shifted") {
        auto n = detail::parse_count(arg, ref);
        return regular("D" + std::to_string(n) + "_shifted", divided_power(n, f, 1));
    }
    if (kind == "comatrix") {
        auto n = detail::parse_count(arg, ref);
        return regular("Mc" + std::to_string(n), comatrix(n, f));
    }
    if (kind == "incidence") {
        std::optional<Poset> p;
        if (arg.starts_with("chain:")) p = Poset::chain(detail::parse_count(arg.substr(6), ref));
        else if (arg.starts_with("antichain:")) p = Poset::antichain(detail::parse_count(arg.substr(10), ref));
        else if (is_instance_file(arg)) p = parse_poset(read_file(std::string(arg)));
        else throw Error(ErrorKind::Usage, "expected chain:n, antichain:n or a poset file in \"" + std::string(ref) + "\"");
        return regular("Inc", incidence(*p, f), p);
    }
    if (kind == "sum") {
        auto [a, b] = detail::split_pair(arg, ref);
        auto ra = resolve(a, f), rb = resolve(b, f);
        if (ra.instance.coalgebras.empty() || rb.instance.coalgebras.empty()) throw Error(ErrorKind::Usage, "sum needs two coalgebras");
        return regular("Sum", direct_sum(ra.instance.coalgebras.front().second, rb.instance.coalgebras.front().second));
    }
    if (kind == "quotient") {
        auto [a, v] = detail::split_pair(arg, ref);
        auto ra = resolve(a, f);
        auto nb = select_bicomodule(ra.instance, "");
        const auto& m = nb.module;
        auto k = cyclic_subbicomodule(m, detail::parse_basis_sum(f, v, m.dim()));
        if (k.is_full()) throw Error(ErrorKind::Usage, "quotient by the whole bicomodule in \"" + std::string(ref) + "\"");
        auto inst = ra.instance;
        inst.bicomodules.clear();
        inst.morphisms.clear();
        inst.bicomodules.push_back({"quotient", nb.left, nb.right, quotient(m, k)});
        return {std::string(ref), std::move(inst), std::nullopt};
    }
    throw Error(ErrorKind::Usage, "unknown catalog entry \"" + std::string(kind) + "\" (see `catalog list`)");
}

/// The coalgebra whose regular bicomodule `b` is, if any.
template <ExactField F>
std::optional<Coalgebra<F>> regular_coalgebra(const Instance<F>& inst, const NamedBicomodule<F>& b)
{
    if (b.left != b.right) return std::nullopt;
    const auto* c = inst.coalgebra(b.left);
    if (!c || c->dim() != b.module.dim() || !same_bicomodule(b.module, regular_bicomodule(*c))) return std::nullopt;
    return *c;
}

} // namespace cotop
