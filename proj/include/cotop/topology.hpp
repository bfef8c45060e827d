#pragma once

/**
 * @file topology.hpp
 * @brief The Zariski-type topology on a computed fully coprime spectrum.
 *
 * Points are CPSpec members (lattice indices); a set of points is a 64-bit
 * mask. Closed sets are the varieties V_L = {K : K ⊆ L}, each tagged with a
 * lattice index L realizing it.
 */

#include "cotop/coprime.hpp"

#include <bit>

namespace cotop {

enum class Flavor { Full, FullyInvariant };

inline const char* to_string(Flavor f) { return f == Flavor::Full ? "full" : "fully-invariant"; }

using PointSet = std::uint64_t;

struct ClosedSet {
    PointSet points = 0;
    std::size_t witness = 0; ///< lattice index L with V_L = points
};

struct TopSpace {
    std::vector<std::size_t> points; ///< lattice indices of CPSpec members
    std::vector<ClosedSet> closed;   ///< deduplicated, sorted by mask
    Flavor flavor = Flavor::Full;
    bool is_topology = false;
    std::vector<std::pair<std::size_t, std::size_t>> top_failures; ///< (L1, L2) whose union V_L1 ∪ V_L2 is no V_L

    std::size_t size() const { return points.size(); }
    PointSet all() const { return points.size() == 64 ? ~PointSet{0} : (PointSet{1} << points.size()) - 1; }
    bool is_closed(PointSet s) const { return witness(s).has_value(); }
    bool is_open(PointSet s) const { return is_closed(all() & ~s); }
    std::optional<std::size_t> witness(PointSet s) const
    {
        auto it = std::lower_bound(closed.begin(), closed.end(), s, [](const ClosedSet& c, PointSet v) { return c.points < v; });
        if (it == closed.end() || it->points != s) return std::nullopt;
        return it->witness;
    }
    std::optional<std::size_t> point_of(std::size_t lattice_index) const
    {
        auto it = std::find(points.begin(), points.end(), lattice_index);
        if (it == points.end()) return std::nullopt;
        return static_cast<std::size_t>(it - points.begin());
    }
};

/// V_L as a point mask.
template <ExactField F>
PointSet variety(const TopSpace& t, const Lattice<F>& lat, std::size_t l)
{
    PointSet s = 0;
    for (std::size_t p = 0; p < t.points.size(); ++p)
        if (lat.leq[t.points[p]][l]) s |= PointSet{1} << p;
    return s;
}

template <ExactField F>
TopSpace build_topology(const Lattice<F>& lat, const SpectrumReport<F>& spec, Flavor flavor)
{
    if (spec.cpspec.size() > 64) throw Error(ErrorKind::BudgetExceeded, "spectra with more than 64 points are not supported");
    TopSpace t;
    t.points = spec.cpspec;
    t.flavor = flavor;
    std::map<PointSet, std::size_t> seen;
    for (std::size_t l = 0; l < lat.size(); ++l) {
        if (flavor == Flavor::FullyInvariant && !lat.fully_invariant[l]) continue;
        seen.emplace(variety(t, lat, l), l);
    }
    for (auto [mask, w] : seen) t.closed.push_back({mask, w});
    t.is_topology = true;
    for (const auto& a : t.closed)
        for (const auto& b : t.closed)
            if (a.witness < b.witness && !t.is_closed(a.points | b.points)) {
                t.is_topology = false;
                t.top_failures.emplace_back(a.witness, b.witness);
            }
    return t;
}

/// Smallest closed superset of `a` from the closed-set family.
inline PointSet smallest_closed_superset(const TopSpace& t, PointSet a)
{
    PointSet out = t.all();
    for (const auto& c : t.closed)
        if ((c.points & a) == a) out &= c.points;
    return out;
}

struct ClosureResult {
    PointSet formula = 0;  ///< V_{φ(A)} with φ(A) = Σ_{K∈A} K
    PointSet smallest = 0; ///< intersection of the closed supersets
    std::size_t phi = 0;   ///< lattice index of φ(A)
};

template <ExactField F>
ClosureResult closure(const TopSpace& t, const Lattice<F>& lat, PointSet a)
{
    if (a & ~t.all()) throw Error(ErrorKind::UnknownPoint, "point set refers to points outside the spectrum");
    auto phi = lat.elements[lat.bottom()];
    for (std::size_t p = 0; p < t.size(); ++p)
        if (a >> p & 1) phi = sum(phi, lat.elements[t.points[p]]);
    auto idx = lat.index_of(phi);
    if (!idx) throw Error(ErrorKind::NotSubbicomodule, "sum of spectrum members missing from the lattice");
    return {variety(t, lat, *idx), smallest_closed_superset(t, a), *idx};
}

struct Separation {
    bool t0 = false, t1 = false, t2 = false, discrete = false;
    std::optional<std::pair<std::size_t, std::size_t>> t0_failure; ///< indistinguishable point pair
};

inline Separation separation(const TopSpace& t)
{
    Separation s;
    const std::size_t n = t.size();
    s.t0 = s.t1 = s.discrete = true;
    for (std::size_t p = 0; p < n; ++p) {
        PointSet single = PointSet{1} << p;
        if (!t.is_closed(single)) s.t1 = false;
        if (!t.is_open(single)) s.discrete = false;
        for (std::size_t q = p + 1; q < n; ++q) {
            bool distinguished = false;
            for (const auto& c : t.closed)
                if (((c.points >> p) & 1) != ((c.points >> q) & 1)) distinguished = true;
            if (!distinguished && !s.t0_failure) {
                s.t0 = false;
                s.t0_failure = std::pair{p, q};
            }
        }
    }
    // T2: disjoint open neighbourhoods; opens are complements of closed sets
    s.t2 = true;
    for (std::size_t p = 0; p < n && s.t2; ++p)
        for (std::size_t q = p + 1; q < n && s.t2; ++q) {
            bool found = false;
            for (const auto& u : t.closed) {
                PointSet ou = t.all() & ~u.points;
                if (!(ou >> p & 1)) continue;
                for (const auto& v : t.closed) {
                    PointSet ov = t.all() & ~v.points;
                    if ((ov >> q & 1) && (ou & ov) == 0) found = true;
                }
            }
            s.t2 = found;
        }
    return s;
}

/// Whether the subspace A (a point mask) is irreducible: nonempty and not a union of two proper relatively closed subsets.
inline bool is_irreducible(const TopSpace& t, PointSet a)
{
    if (a == 0) return false;
    for (const auto& x : t.closed)
        for (const auto& y : t.closed) {
            PointSet bx = x.points & a, by = y.points & a;
            if (bx != a && by != a && (bx | by) == a) return false;
        }
    return true;
}

/// Whether A is connected in the relative topology.
inline bool is_connected(const TopSpace& t, PointSet a)
{
    for (const auto& x : t.closed) {
        PointSet b = x.points & a;
        if (b == 0 || b == a) continue;
        for (const auto& y : t.closed)
            if ((y.points & a) == (a & ~b)) return false;
    }
    return true;
}

/// Maximal irreducible closed subsets.
inline std::vector<PointSet> irreducible_components(const TopSpace& t)
{
    std::vector<PointSet> irr;
    for (const auto& c : t.closed)
        if (is_irreducible(t, c.points)) irr.push_back(c.points);
    std::vector<PointSet> out;
    for (auto a : irr) {
        bool maximal = true;
        for (auto b : irr)
            if (b != a && (a & b) == a) maximal = false;
        if (maximal) out.push_back(a);
    }
    return out;
}

inline std::string to_string(const TopSpace& t, PointSet s)
{
    std::string out = "{";
    bool first = true;
    for (std::size_t p = 0; p < t.size(); ++p)
        if (s >> p & 1) {
            out += (first ? "" : ",") + std::string("P") + std::to_string(p);
            first = false;
        }
    return out + "}";
}

} // namespace cotop
