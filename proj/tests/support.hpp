#pragma once

// Small builders shared by the test suites.

#include "cotop/cotop.hpp"

#include <random>

namespace cotop::test {

inline const PrimeField F2{2};
inline const PrimeField F3{3};
inline const RationalField QQ{};

/// span{e_i : i in idx} inside F^n.
template <ExactField F>
Subspace<F> units(const F& f, std::size_t n, std::initializer_list<std::size_t> idx)
{
    std::vector<Vector<F>> vs;
    for (auto i : idx) vs.push_back(unit_vector(f, n, i));
    return Subspace<F>::span(f, n, vs);
}

/// C_k = span{x_0..x_k} inside F^n.
template <ExactField F>
Subspace<F> chain(const F& f, std::size_t n, std::size_t k)
{
    std::vector<Vector<F>> vs;
    for (std::size_t i = 0; i <= k; ++i) vs.push_back(unit_vector(f, n, i));
    return Subspace<F>::span(f, n, vs);
}

/// x_n ↦ x_{n-1}, x_0 ↦ 0, raised to the power j.
template <ExactField F>
Matrix<F> shift_power(const F& f, std::size_t n, std::size_t j)
{
    Matrix<F> s(f, n, n);
    for (std::size_t c = j; c < n; ++c) s(c - j, c) = f.one();
    return s;
}

template <ExactField F>
Vector<F> vec(const F& f, std::initializer_list<std::int64_t> xs)
{
    Vector<F> v;
    for (auto x : xs) v.push_back(f.from_int(x));
    return v;
}

template <ExactField F>
Analysis<F> exhaustive(const Bicomodule<F>& m)
{
    AnalysisOptions o;
    o.lattice.mode = LatticeMode::Exhaustive;
    return analyze(m, o);
}

template <ExactField F>
Analysis<F> generated(const Bicomodule<F>& m)
{
    AnalysisOptions o;
    o.lattice.mode = LatticeMode::Generated;
    return analyze(m, o);
}

/// Lattice elements at the given indices.
template <ExactField F>
std::vector<Subspace<F>> members(const Analysis<F>& a, const std::vector<std::size_t>& idx)
{
    std::vector<Subspace<F>> out;
    for (auto i : idx) out.push_back(a.element(i));
    return out;
}

template <ExactField F>
Matrix<F> random_matrix(const F& f, std::size_t r, std::size_t c, std::mt19937_64& rng)
{
    Matrix<F> m(f, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = detail::random_scalar(f, rng);
    return m;
}

template <ExactField F>
Vector<F> random_vector(const F& f, std::size_t n, std::mt19937_64& rng)
{
    Vector<F> v(n, f.zero());
    for (auto& x : v) x = detail::random_scalar(f, rng);
    return v;
}

} // namespace cotop::test
