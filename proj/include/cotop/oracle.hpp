#pragma once

/**
 * @file oracle.hpp
 * @brief Independent brute-force path over F_p for differential testing.
 *
 * Shares nothing with the engine beyond reading structure constants: its own
 * modular elimination, every subspace enumerated in reduced echelon form,
 * subbicomodules and fully invariant ones filtered by direct stability
 * tests, and coprimeness decided by quantifying over all pairs.
 */

#include "cotop/analysis.hpp"

#include <map>
#include <set>

namespace cotop::oracle {

using Row = std::vector<std::uint32_t>;
using Rows = std::vector<Row>; ///< reduced echelon basis, canonical

class Zp {
public:
    explicit Zp(std::uint32_t p)
        : p_(p)
    {
    }
    std::uint32_t p() const { return p_; }
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return static_cast<std::uint32_t>((std::uint64_t{a} + b) % p_); }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return static_cast<std::uint32_t>((std::uint64_t{a} * b) % p_); }
    std::uint32_t neg(std::uint32_t a) const { return a ? p_ - a : 0; }
    std::uint32_t inv(std::uint32_t a) const
    {
        for (std::uint32_t x = 1; x < p_; ++x)
            if (mul(a, x) == 1) return x;
        throw Error(ErrorKind::InvalidField, "no inverse");
    }

    /// Reduced echelon form with zero rows dropped.
    Rows rref(Rows rows) const
    {
        if (rows.empty()) return rows;
        const std::size_t n = rows[0].size();
        std::size_t r = 0;
        for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
            std::size_t piv = r;
            while (piv < rows.size() && rows[piv][c] == 0) ++piv;
            if (piv == rows.size()) continue;
            std::swap(rows[r], rows[piv]);
            auto s = inv(rows[r][c]);
            for (auto& x : rows[r]) x = mul(x, s);
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (i == r || rows[i][c] == 0) continue;
                auto m = neg(rows[i][c]);
                for (std::size_t j = 0; j < n; ++j) rows[i][j] = add(rows[i][j], mul(m, rows[r][j]));
            }
            ++r;
        }
        rows.resize(r);
        return rows;
    }

    bool in_span(const Rows& basis, const Row& v) const
    {
        Rows all = basis;
        all.push_back(v);
        return rref(all).size() == basis.size();
    }

    bool contains(const Rows& big, const Rows& small) const
    {
        return std::all_of(small.begin(), small.end(), [&](const Row& v) { return in_span(big, v); });
    }

    /// Null space of a matrix given by rows.
    Rows null_space(const Rows& m, std::size_t cols) const
    {
        Rows r = rref(m);
        std::vector<std::size_t> pivots;
        for (const auto& row : r) pivots.push_back(static_cast<std::size_t>(std::find_if(row.begin(), row.end(), [](std::uint32_t x) { return x != 0; }) - row.begin()));
        Rows out;
        for (std::size_t fcol = 0; fcol < cols; ++fcol) {
            if (std::find(pivots.begin(), pivots.end(), fcol) != pivots.end()) continue;
            Row v(cols, 0);
            v[fcol] = 1;
            for (std::size_t i = 0; i < r.size(); ++i) v[pivots[i]] = neg(r[i][fcol]);
            out.push_back(v);
        }
        return out;
    }

    Row apply(const Rows& a, const Row& v) const
    {
        Row out(a.size(), 0);
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < v.size(); ++j) out[i] = add(out[i], mul(a[i][j], v[j]));
        return out;
    }

private:
    std::uint32_t p_;
};

/// Every subspace of F_p^n in reduced echelon form.
inline std::vector<Rows> all_subspaces(const Zp& z, std::size_t n, std::uint64_t budget)
{
    std::vector<Rows> out;
    const std::uint32_t p = z.p();
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<std::size_t> piv;
        for (std::size_t c = 0; c < n; ++c)
            if (mask >> c & 1) piv.push_back(c);
        // free slots: (row r, column c) with c > piv[r] and c not a pivot
        std::vector<std::pair<std::size_t, std::size_t>> slots;
        for (std::size_t r = 0; r < piv.size(); ++r)
            for (std::size_t c = piv[r] + 1; c < n; ++c)
                if (!(mask >> c & 1)) slots.emplace_back(r, c);
        std::vector<std::uint32_t> digits(slots.size(), 0);
        while (true) {
            if (out.size() >= budget) throw Error(ErrorKind::BudgetExceeded, "oracle subspace enumeration exceeds " + std::to_string(budget));
            Rows rows(piv.size(), Row(n, 0));
            for (std::size_t r = 0; r < piv.size(); ++r) rows[r][piv[r]] = 1;
            for (std::size_t s = 0; s < slots.size(); ++s) rows[slots[s].first][slots[s].second] = digits[s];
            out.push_back(std::move(rows));
            std::size_t s = 0;
            while (s < digits.size() && ++digits[s] == p) digits[s++] = 0;
            if (s == digits.size()) break;
        }
    }
    return out;
}

struct OracleResult {
    std::vector<Rows> lattice;  ///< subbicomodules, sorted
    std::vector<bool> fully_invariant;
    std::vector<Rows> cpspec, csp;
    std::size_t subspaces = 0;
};

/// Brute-force lattice and spectra of a bicomodule over F_p.
inline OracleResult compute(const Bicomodule<PrimeField>& m, std::uint64_t budget = 200000)
{
    const Zp z(m.field().characteristic());
    const std::size_t n = m.dim();
    // action matrices straight from the structure constants
    std::vector<Rows> acts;
    for (std::size_t k = 0; k < m.right_coalgebra().dim(); ++k) {
        Rows a(n, Row(n, 0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) a[j][i] = m.r(i, j, k);
        acts.push_back(a);
    }
    for (std::size_t j = 0; j < m.left_coalgebra().dim(); ++j) {
        Rows a(n, Row(n, 0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) a[k][i] = m.l(i, j, k);
        acts.push_back(a);
    }
    auto stable = [&](const Rows& s, const std::vector<Rows>& maps) {
        for (const auto& a : maps)
            for (const auto& v : s)
                if (!z.in_span(s, z.apply(a, v))) return false;
        return true;
    };
    // endomorphisms: X with A X = X A, unknown X[i][j] at i*n+j
    Rows sys;
    for (const auto& a : acts)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Row eq(n * n, 0);
                for (std::size_t t = 0; t < n; ++t) {
                    eq[t * n + j] = z.add(eq[t * n + j], a[i][t]);
                    eq[i * n + t] = z.add(eq[i * n + t], z.neg(a[t][j]));
                }
                sys.push_back(eq);
            }
    std::vector<Rows> endo;
    for (const auto& v : z.null_space(sys, n * n)) {
        Rows x(n, Row(n, 0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) x[i][j] = v[i * n + j];
        endo.push_back(x);
    }

    OracleResult res;
    auto subs = all_subspaces(z, n, budget);
    res.subspaces = subs.size();
    for (auto& s : subs)
        if (stable(s, acts)) res.lattice.push_back(std::move(s));
    std::sort(res.lattice.begin(), res.lattice.end());
    for (const auto& s : res.lattice) res.fully_invariant.push_back(stable(s, endo));

    // An(X) as combinations of the endomorphism basis
    auto annihilator = [&](const Rows& x) {
        Rows eqs;
        for (const auto& v : x)
            for (std::size_t i = 0; i < n; ++i) {
                Row eq(endo.size(), 0);
                for (std::size_t b = 0; b < endo.size(); ++b) eq[b] = z.apply(endo[b], v)[i];
                eqs.push_back(eq);
            }
        std::vector<Rows> out;
        for (const auto& c : z.null_space(eqs, endo.size())) {
            Rows f(n, Row(n, 0));
            for (std::size_t b = 0; b < endo.size(); ++b)
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j) f[i][j] = z.add(f[i][j], z.mul(c[b], endo[b][i][j]));
            out.push_back(f);
        }
        return out;
    };
    std::vector<std::size_t> fi;
    for (std::size_t i = 0; i < res.lattice.size(); ++i)
        if (res.fully_invariant[i]) fi.push_back(i);
    std::map<std::size_t, std::vector<Rows>> ann;
    for (auto x : fi) ann[x] = annihilator(res.lattice[x]);
    // K ⊆ (X : Y) iff f(K) ⊆ Y for every f in An(X)
    auto inside_coproduct = [&](const Rows& k, std::size_t x, std::size_t y) {
        for (const auto& f : ann[x])
            for (const auto& v : k)
                if (!z.in_span(res.lattice[y], z.apply(f, v))) return false;
        return true;
    };
    for (auto k : fi) {
        const auto& K = res.lattice[k];
        if (K.empty()) continue;
        bool coprime = true, semiprime = true;
        for (auto x : fi)
            for (auto y : fi) {
                if (!inside_coproduct(K, x, y)) continue;
                if (z.contains(res.lattice[x], K) || z.contains(res.lattice[y], K)) continue;
                coprime = false;
                if (x == y) semiprime = false;
            }
        if (coprime) res.cpspec.push_back(K);
        if (semiprime) res.csp.push_back(K);
    }
    return res;
}

inline Rows canonical(const Zp& z, const Subspace<PrimeField>& s)
{
    Rows rows;
    for (std::size_t i = 0; i < s.dim(); ++i) {
        auto v = s.basis_vector(i);
        rows.emplace_back(v.begin(), v.end());
    }
    auto r = z.rref(rows);
    return r;
}

inline std::string to_string(const Rows& r)
{
    std::string out = "<";
    for (std::size_t i = 0; i < r.size(); ++i) {
        out += i ? "; " : "";
        for (std::size_t j = 0; j < r[i].size(); ++j) out += (j ? " " : "") + std::to_string(r[i][j]);
    }
    return out + ">";
}

struct Diff {
    std::string what; ///< "lattice", "CPSpec", "CSP"
    std::vector<Rows> engine_only, oracle_only;
};

struct Comparison {
    std::size_t lattice_size = 0, cpspec_size = 0, csp_size = 0, subspaces = 0;
    std::vector<Diff> diffs;
    bool identical() const { return diffs.empty(); }
};

/// Engine analysis versus brute force; requires an exhaustive engine lattice.
inline Comparison compare(const Analysis<PrimeField>& a, std::uint64_t budget = 200000)
{
    const Zp z(a.m.field().characteristic());
    auto o = compute(a.m, budget);
    auto engine = [&](const std::vector<std::size_t>* idx) {
        std::vector<Rows> out;
        if (idx)
            for (auto i : *idx) out.push_back(canonical(z, a.element(i)));
        else
            for (const auto& s : a.lat.elements) out.push_back(canonical(z, s));
        std::sort(out.begin(), out.end());
        return out;
    };
    Comparison c{o.lattice.size(), o.cpspec.size(), o.csp.size(), o.subspaces, {}};
    auto diff = [&](const char* what, std::vector<Rows> mine, std::vector<Rows> theirs) {
        std::sort(theirs.begin(), theirs.end());
        Diff d{what, {}, {}};
        std::set_difference(mine.begin(), mine.end(), theirs.begin(), theirs.end(), std::back_inserter(d.engine_only));
        std::set_difference(theirs.begin(), theirs.end(), mine.begin(), mine.end(), std::back_inserter(d.oracle_only));
        if (!d.engine_only.empty() || !d.oracle_only.empty()) c.diffs.push_back(std::move(d));
    };
    diff("lattice", engine(nullptr), o.lattice);
    std::vector<Rows> fi_engine, fi_oracle;
    for (std::size_t i = 0; i < a.lat.size(); ++i)
        if (a.lat.fully_invariant[i]) fi_engine.push_back(canonical(z, a.element(i)));
    for (std::size_t i = 0; i < o.lattice.size(); ++i)
        if (o.fully_invariant[i]) fi_oracle.push_back(o.lattice[i]);
    std::sort(fi_engine.begin(), fi_engine.end());
    diff("fully invariant", fi_engine, fi_oracle);
    diff("CPSpec", engine(&a.spec.cpspec), o.cpspec);
    diff("CSP", engine(&a.spec.csp), o.csp);
    return c;
}

} // namespace cotop::oracle
