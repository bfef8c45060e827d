#pragma once

#include "cotop/subspace.hpp"

#include <cstdint>
#include <limits>

namespace cotop {

namespace detail {

inline std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b)
{
    if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
    return a * b;
}

inline std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b)
{
    return a > std::numeric_limits<std::uint64_t>::max() - b ? std::numeric_limits<std::uint64_t>::max() : a + b;
}

inline std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp)
{
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < exp; ++i) r = saturating_mul(r, base);
    return r;
}

} // namespace detail

/// Number of subspaces of F_q^n (sum of Gaussian binomials), saturating at 2^64-1.
inline std::uint64_t subspace_count(std::uint64_t q, std::size_t n)
{
    // Count echelon shapes directly: for each pivot set, q^(number of free slots).
    std::uint64_t total = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        std::uint64_t free_slots = 0, rows_before = 0;
        for (std::size_t c = 0; c < n; ++c) {
            if (mask >> c & 1) ++rows_before;
            else free_slots += rows_before;
        }
        total = detail::saturating_add(total, detail::saturating_pow(q, free_slots));
    }
    return total;
}

/// Visits every subspace of F^n exactly once by enumerating reduced echelon bases.
/// The visitor returns false to stop early.
template <FiniteField F, class Visit>
void for_each_subspace(const F& f, std::size_t n, Visit&& visit)
{
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        std::vector<std::size_t> pivots;
        for (std::size_t c = 0; c < n; ++c)
            if (mask >> c & 1) pivots.push_back(c);
        // free slots: (row, col) with col > pivot[row] and col not a pivot
        std::vector<std::pair<std::size_t, std::size_t>> slots;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            for (std::size_t c = pivots[r] + 1; c < n; ++c)
                if (!(mask >> c & 1)) slots.emplace_back(r, c);
        std::vector<std::uint64_t> digits(slots.size(), 0);
        const std::uint64_t q = f.size();
        while (true) {
            Matrix<F> b(f, pivots.size(), n);
            for (std::size_t r = 0; r < pivots.size(); ++r) b(r, pivots[r]) = f.one();
            for (std::size_t s = 0; s < slots.size(); ++s) b(slots[s].first, slots[s].second) = f.element(digits[s]);
            if (!visit(Subspace<F>(b))) return;
            std::size_t pos = 0;
            while (pos < digits.size() && ++digits[pos] == q) digits[pos++] = 0;
            if (pos == digits.size()) break;
        }
    }
}

/// Visits every vector of F^n in base-q counting order.
template <FiniteField F, class Visit>
void for_each_vector(const F& f, std::size_t n, Visit&& visit)
{
    std::vector<std::uint64_t> digits(n, 0);
    const std::uint64_t q = f.size();
    while (true) {
        Vector<F> v;
        v.reserve(n);
        for (auto d : digits) v.push_back(f.element(d));
        if (!visit(v)) return;
        std::size_t pos = 0;
        while (pos < n && ++digits[pos] == q) digits[pos++] = 0;
        if (pos == n) break;
    }
}

} // namespace cotop
