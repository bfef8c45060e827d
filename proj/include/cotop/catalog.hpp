#pragma once

/**
 * @file catalog.hpp
 * @brief Standard coalgebras (group-like, divided power, comatrix,
 *        incidence), direct sums, and a seeded random instance generator.
 */

#include "cotop/lattice.hpp"
#include "cotop/morphism.hpp"

#include <random>

namespace cotop {

/// A finite partial order on {0, ..., size-1}.
class Poset {
public:
    Poset(std::size_t size, std::vector<std::vector<bool>> leq)
        : size_(size)
        , leq_(std::move(leq))
    {
        if (size_ == 0) throw Error(ErrorKind::InvalidCoalgebra, "poset must be nonempty");
        if (leq_.size() != size_) throw Error(ErrorKind::InvalidCoalgebra, "poset relation has wrong size");
        for (const auto& row : leq_)
            if (row.size() != size_) throw Error(ErrorKind::InvalidCoalgebra, "poset relation has wrong size");
        for (std::size_t x = 0; x < size_; ++x) {
            if (!leq_[x][x]) throw Error(ErrorKind::InvalidCoalgebra, "poset relation is not reflexive");
            for (std::size_t y = 0; y < size_; ++y) {
                if (x != y && leq_[x][y] && leq_[y][x]) throw Error(ErrorKind::InvalidCoalgebra, "poset relation is not antisymmetric");
                for (std::size_t z = 0; z < size_; ++z)
                    if (leq_[x][y] && leq_[y][z] && !leq_[x][z]) throw Error(ErrorKind::InvalidCoalgebra, "poset relation is not transitive");
            }
        }
    }

    /// Reflexive-transitive closure of the given covering pairs (a ≤ b).
    static Poset from_relations(std::size_t size, const std::vector<std::pair<std::size_t, std::size_t>>& pairs)
    {
        std::vector<std::vector<bool>> r(size, std::vector<bool>(size, false));
        for (std::size_t i = 0; i < size; ++i) r[i][i] = true;
        for (auto [a, b] : pairs) {
            if (a >= size || b >= size) throw Error(ErrorKind::InvalidCoalgebra, "poset relation index out of range");
            r[a][b] = true;
        }
        for (std::size_t k = 0; k < size; ++k)
            for (std::size_t i = 0; i < size; ++i)
                for (std::size_t j = 0; j < size; ++j)
                    if (r[i][k] && r[k][j]) r[i][j] = true;
        return Poset(size, std::move(r));
    }

    static Poset chain(std::size_t n)
    {
        std::vector<std::pair<std::size_t, std::size_t>> p;
        for (std::size_t i = 0; i + 1 < n; ++i) p.emplace_back(i, i + 1);
        return from_relations(n, p);
    }
    static Poset antichain(std::size_t n) { return from_relations(n, {}); }

    std::size_t size() const { return size_; }
    bool leq(std::size_t x, std::size_t y) const { return leq_[x][y]; }

    /// Intervals [x, z] with x ≤ z, in lexicographic order.
    std::vector<std::pair<std::size_t, std::size_t>> intervals() const
    {
        std::vector<std::pair<std::size_t, std::size_t>> out;
        for (std::size_t x = 0; x < size_; ++x)
            for (std::size_t z = 0; z < size_; ++z)
                if (leq_[x][z]) out.emplace_back(x, z);
        return out;
    }

    /// Covering-free relation list (all strict pairs), for serialization.
    std::vector<std::pair<std::size_t, std::size_t>> strict_pairs() const
    {
        std::vector<std::pair<std::size_t, std::size_t>> out;
        for (auto [x, z] : intervals())
            if (x != z) out.emplace_back(x, z);
        return out;
    }

private:
    std::size_t size_;
    std::vector<std::vector<bool>> leq_;
};

/// Δ(g_i) = g_i ⊗ g_i, ε(g_i) = 1.
template <ExactField F>
Coalgebra<F> grouplike(std::size_t n, const F& f)
{
    if (n == 0) throw Error(ErrorKind::InvalidCoalgebra, "grouplike needs n >= 1");
    std::vector<Triple<F>> t;
    for (std::size_t i = 0; i < n; ++i) t.push_back({i, i, i, f.one()});
    return Coalgebra<F>(f, n, t, Vector<F>(n, f.one()));
}

/// Truncated divided power coalgebra: Δ(x_n) = Σ_{j=first}^{n} x_j ⊗ x_{n−j}, ε(x_n) = δ_{n,0}.
/// The standard coalgebra has first = 0; first = 1 reproduces a counit-violating variant.
template <ExactField F>
Coalgebra<F> divided_power(std::size_t N, const F& f, std::size_t first = 0)
{
    std::vector<Triple<F>> t;
    for (std::size_t n = 0; n <= N; ++n)
        for (std::size_t j = first; j <= n; ++j) t.push_back({n, j, n - j, f.one()});
    Vector<F> eps(N + 1, f.zero());
    eps[0] = f.one();
    return Coalgebra<F>(f, N + 1, t, eps);
}

/// Δ(e_ij) = Σ_k e_ik ⊗ e_kj, ε(e_ij) = δ_ij; basis index i*n + j.
template <ExactField F>
Coalgebra<F> comatrix(std::size_t n, const F& f)
{
    if (n == 0) throw Error(ErrorKind::InvalidCoalgebra, "comatrix needs n >= 1");
    std::vector<Triple<F>> t;
    Vector<F> eps(n * n, f.zero());
    for (std::size_t i = 0; i < n; ++i) {
        eps[i * n + i] = f.one();
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) t.push_back({i * n + j, i * n + k, k * n + j, f.one()});
    }
    return Coalgebra<F>(f, n * n, t, eps);
}

/// Δ([x,z]) = Σ_{x≤y≤z} [x,y] ⊗ [y,z], ε([x,y]) = δ_{x,y}.
template <ExactField F>
Coalgebra<F> incidence(const Poset& p, const F& f)
{
    auto iv = p.intervals();
    auto index = [&](std::size_t x, std::size_t z) {
        return static_cast<std::size_t>(std::find(iv.begin(), iv.end(), std::pair{x, z}) - iv.begin());
    };
    std::vector<Triple<F>> t;
    Vector<F> eps(iv.size(), f.zero());
    for (std::size_t a = 0; a < iv.size(); ++a) {
        auto [x, z] = iv[a];
        if (x == z) eps[a] = f.one();
        for (std::size_t y = 0; y < p.size(); ++y)
            if (p.leq(x, y) && p.leq(y, z)) t.push_back({a, index(x, y), index(y, z), f.one()});
    }
    return Coalgebra<F>(f, iv.size(), t, eps);
}

/// Block-diagonal sum: basis of a followed by basis of b.
template <ExactField F>
Coalgebra<F> direct_sum(const Coalgebra<F>& a, const Coalgebra<F>& b)
{
    if (!(a.field() == b.field())) throw Error(ErrorKind::CoalgebraMismatch, "direct sum of coalgebras over different fields");
    const std::size_t s = a.dim();
    auto t = a.delta_triples();
    for (auto x : b.delta_triples()) t.push_back({x.i + s, x.j + s, x.k + s, x.coeff});
    auto eps = a.counit_vector();
    eps.insert(eps.end(), b.counit_vector().begin(), b.counit_vector().end());
    return Coalgebra<F>(a.field(), s + b.dim(), t, eps);
}

/// The coalgebra structure Δ restricts to on a subcoalgebra K, in K's echelon basis, with its inclusion.
template <ExactField F>
CoalgebraMorphism<F> subcoalgebra_inclusion(const Coalgebra<F>& c, const Subspace<F>& k)
{
    const F& f = c.field();
    if (k.is_zero()) throw Error(ErrorKind::ZeroSubmodule, "zero subcoalgebra");
    const std::size_t d = k.dim(), n = c.dim();
    std::vector<Triple<F>> t;
    Vector<F> eps(d, f.zero());
    for (std::size_t a = 0; a < d; ++a) {
        auto v = k.basis_vector(a);
        // Δ(v) as an n×n coefficient array, then rewritten in K ⊗ K coordinates
        Matrix<F> dv(f, n, n);
        for (std::size_t i = 0; i < n; ++i) {
            if (f.is_zero(v[i])) continue;
            eps[a] = f.add(eps[a], f.mul(v[i], c.counit(i)));
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t l = 0; l < n; ++l) dv(j, l) = f.add(dv(j, l), f.mul(v[i], c.mu(i, j, l)));
        }
        // dv = B^T X B where B is K's basis (d×n); pivot columns read X off directly
        const auto& piv = k.pivots();
        Matrix<F> x(f, d, d);
        for (std::size_t b = 0; b < d; ++b)
            for (std::size_t e = 0; e < d; ++e) {
                x(b, e) = dv(piv[b], piv[e]);
                if (!f.is_zero(x(b, e))) t.push_back({a, b, e, x(b, e)});
            }
        if (!(transpose(k.basis()) * x * k.basis() == dv))
            throw Error(ErrorKind::InvalidCoalgebra, "subspace is not a subcoalgebra");
    }
    Coalgebra<F> sub(f, d, t, eps);
    return {sub, c, transpose(k.basis())};
}

/// C as a right C-comodule, i.e. a (k, C)-bicomodule over the one-dimensional coalgebra k.
template <ExactField F>
Bicomodule<F> right_comodule(const Coalgebra<F>& c)
{
    const F& f = c.field();
    std::vector<Triple<F>> left;
    for (std::size_t i = 0; i < c.dim(); ++i) left.push_back({i, 0, i, f.one()});
    return Bicomodule<F>(grouplike(1, f), c, c.dim(), left, c.delta_triples());
}

/// Isomorphic copy C' of C with θ = P: C → C' as the isomorphism.
template <ExactField F>
CoalgebraMorphism<F> transport_coalgebra(const Coalgebra<F>& c, const Matrix<F>& p)
{
    const F& f = c.field();
    const std::size_t n = c.dim();
    auto pinv = inverse(p);
    if (!pinv || p.rows() != n || p.cols() != n) throw Error(ErrorKind::InvalidMorphism, "transport along a singular matrix");
    std::vector<Triple<F>> t;
    Vector<F> eps(n, f.zero());
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t i = 0; i < n; ++i) eps[a] = f.add(eps[a], f.mul((*pinv)(i, a), c.counit(i)));
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t d = 0; d < n; ++d) {
                auto x = f.zero();
                for (std::size_t i = 0; i < n; ++i) {
                    if (f.is_zero((*pinv)(i, a))) continue;
                    for (std::size_t j = 0; j < n; ++j)
                        for (std::size_t k = 0; k < n; ++k)
                            if (!f.is_zero(c.mu(i, j, k))) x = f.add(x, f.mul((*pinv)(i, a), f.mul(c.mu(i, j, k), f.mul(p(b, j), p(d, k)))));
                }
                if (!f.is_zero(x)) t.push_back({a, b, d, x});
            }
    }
    return {c, Coalgebra<F>(f, n, t, eps), p};
}

/// [x,x] ↦ g_x and [x,z] ↦ 0 for x < z: the surjection of an incidence coalgebra onto its group-likes.
template <ExactField F>
CoalgebraMorphism<F> diagonal_collapse(const Poset& p, const F& f)
{
    auto iv = p.intervals();
    Matrix<F> m(f, p.size(), iv.size());
    for (std::size_t a = 0; a < iv.size(); ++a)
        if (iv[a].first == iv[a].second) m(iv[a].first, a) = f.one();
    return {incidence(p, f), grouplike(p.size(), f), m};
}

template <ExactField F>
CoalgebraMorphism<F> identity_morphism(const Coalgebra<F>& c)
{
    return {c, c, Matrix<F>::identity(c.field(), c.dim())};
}

/// Seeded invertible n × n matrix (rejection sampling).
template <ExactField F>
Matrix<F> random_invertible(const F& f, std::size_t n, std::mt19937_64& rng)
{
    while (true) {
        Matrix<F> m(f, n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = detail::random_scalar(f, rng);
        if (inverse(m)) return m;
    }
}

/// Description plus the generated bicomodule; `coalgebra` is set for regular instances.
template <ExactField F>
struct RandomInstance {
    std::string description;
    std::optional<Coalgebra<F>> coalgebra;
    Bicomodule<F> m;
    std::optional<Poset> poset; ///< set when the instance is a regular incidence bicomodule
};

namespace detail {

inline Poset random_poset(std::mt19937_64& rng, std::size_t max_intervals)
{
    while (true) {
        std::size_t n = 1 + rng() % max_intervals;
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b)
                if (rng() % 3 == 0) pairs.emplace_back(a, b);
        auto p = Poset::from_relations(n, pairs);
        if (p.intervals().size() <= max_intervals) return p;
    }
}

inline std::string describe(const Poset& p)
{
    std::string s = "poset(" + std::to_string(p.size());
    for (auto [a, b] : p.strict_pairs()) s += " " + std::to_string(a) + "<" + std::to_string(b);
    return s + ")";
}

} // namespace detail

/// Incidence coalgebra of a seeded random poset with at most `dim_budget` intervals, as a regular bicomodule.
template <ExactField F>
RandomInstance<F> random_incidence_instance(std::uint64_t seed, std::size_t dim_budget, const F& f)
{
    std::mt19937_64 rng(seed);
    auto p = detail::random_poset(rng, dim_budget);
    auto c = incidence(p, f);
    return {"incidence " + detail::describe(p), c, regular_bicomodule(c), p};
}

/// Seeded mix: mostly regular incidence bicomodules, some direct sums and quotients. Deterministic per seed.
template <ExactField F>
RandomInstance<F> random_instance(std::uint64_t seed, std::size_t dim_budget, const F& f)
{
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    const auto kind = rng() % 10;
    if (kind < 7 || dim_budget < 2) return random_incidence_instance(rng(), dim_budget, f);
    if (kind < 9) {
        auto p = detail::random_poset(rng, dim_budget - 1);
        auto q = detail::random_poset(rng, dim_budget - p.intervals().size());
        auto c = direct_sum(incidence(p, f), incidence(q, f));
        return {"sum(" + detail::describe(p) + ", " + detail::describe(q) + ")", c, regular_bicomodule(c), std::nullopt};
    }
    // quotient of a regular incidence bicomodule by a cyclic subbicomodule
    auto p = detail::random_poset(rng, dim_budget + 1);
    auto c = incidence(p, f);
    auto m = regular_bicomodule(c);
    std::size_t v = rng() % c.dim();
    Vector<F> e(c.dim(), f.zero());
    e[v] = f.one();
    auto k = cyclic_subbicomodule(m, e);
    if (k.is_full()) return {"incidence " + detail::describe(p), c, m, p};
    return {"quotient(" + detail::describe(p) + ", e" + std::to_string(v) + ")", std::nullopt, quotient(m, k), std::nullopt};
}

} // namespace cotop
