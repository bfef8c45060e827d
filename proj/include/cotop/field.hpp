#pragma once

/**
 * @file field.hpp
 * @brief Exact scalar fields: prime fields F_p and the rationals.
 *
 * A field is a small value object describing the arithmetic; elements are
 * plain `value_type`s. Containers (matrices, subspaces) carry a copy of the
 * field so that the modulus of F_p can be chosen at run time.
 */

#include "cotop/error.hpp"

#include <gmpxx.h>

#include <cctype>
#include <compare>
#include <concepts>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace cotop {

template <class F>
concept ExactField = std::copyable<F> && requires(const F f, const typename F::value_type& a, std::int64_t n, std::string_view s) {
    { f.zero() } -> std::convertible_to<typename F::value_type>;
    { f.one() } -> std::convertible_to<typename F::value_type>;
    { f.from_int(n) } -> std::convertible_to<typename F::value_type>;
    { f.add(a, a) } -> std::convertible_to<typename F::value_type>;
    { f.sub(a, a) } -> std::convertible_to<typename F::value_type>;
    { f.mul(a, a) } -> std::convertible_to<typename F::value_type>;
    { f.neg(a) } -> std::convertible_to<typename F::value_type>;
    { f.inv(a) } -> std::convertible_to<typename F::value_type>;
    { f.is_zero(a) } -> std::convertible_to<bool>;
    { f.equal(a, a) } -> std::convertible_to<bool>;
    { f.less(a, a) } -> std::convertible_to<bool>;
    { f.to_string(a) } -> std::convertible_to<std::string>;
    { f.parse(s) } -> std::convertible_to<typename F::value_type>;
    { f.is_finite() } -> std::convertible_to<bool>;
    { f.name() } -> std::convertible_to<std::string>;
};

namespace detail {

inline bool is_prime(std::uint64_t n)
{
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

/// Splits "num/den" or "num" into validated digit strings. Throws ErrorKind::Parse.
inline std::pair<std::string, std::string> split_fraction(std::string_view s)
{
    auto valid_int = [](std::string_view t, bool allow_sign) {
        if (t.empty()) return false;
        std::size_t i = 0;
        if (allow_sign && (t[0] == '-' || t[0] == '+')) i = 1;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    auto slash = s.find('/');
    std::string num(s.substr(0, slash));
    std::string den = slash == std::string_view::npos ? "1" : std::string(s.substr(slash + 1));
    if (!valid_int(num, true) || !valid_int(den, false))
        throw Error(ErrorKind::Parse, "malformed scalar \"" + std::string(s) + "\"");
    if (!num.empty() && num[0] == '+') num.erase(0, 1);
    if (den.find_first_not_of('0') == std::string::npos)
        throw Error(ErrorKind::Parse, "zero denominator in \"" + std::string(s) + "\"");
    return {num, den};
}

} // namespace detail

/// The prime field F_p, p prime and p <= 2^31.
class PrimeField {
public:
    using value_type = std::uint32_t;

    explicit PrimeField(std::uint64_t p)
        : p_(static_cast<std::uint32_t>(p))
    {
        if (p > (std::uint64_t{1} << 31) || !detail::is_prime(p))
            throw Error(ErrorKind::InvalidField, "F_p requires a prime p <= 2^31, got " + std::to_string(p));
    }

    std::uint32_t characteristic() const { return p_; }
    std::uint64_t size() const { return p_; }
    bool is_finite() const { return true; }
    std::string name() const { return "F" + std::to_string(p_); }

    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    value_type from_int(std::int64_t n) const
    {
        auto r = n % static_cast<std::int64_t>(p_);
        return static_cast<value_type>(r < 0 ? r + p_ : r);
    }
    /// i-th element in the canonical enumeration 0, 1, ..., p-1.
    value_type element(std::uint64_t i) const { return static_cast<value_type>(i); }
    std::uint64_t index(value_type a) const { return a; }

    value_type add(value_type a, value_type b) const { return static_cast<value_type>((std::uint64_t{a} + b) % p_); }
    value_type sub(value_type a, value_type b) const { return static_cast<value_type>((std::uint64_t{a} + p_ - b) % p_); }
    value_type mul(value_type a, value_type b) const { return static_cast<value_type>((std::uint64_t{a} * b) % p_); }
    value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }
    value_type inv(value_type a) const
    {
        if (a == 0) throw Error(ErrorKind::InvalidField, "division by zero in " + name());
        // Fermat: a^(p-2)
        std::uint64_t result = 1, base = a, e = p_ - 2;
        while (e) {
            if (e & 1) result = result * base % p_;
            base = base * base % p_;
            e >>= 1;
        }
        return static_cast<value_type>(result);
    }

    bool is_zero(value_type a) const { return a == 0; }
    bool equal(value_type a, value_type b) const { return a == b; }
    bool less(value_type a, value_type b) const { return a < b; }

    std::string to_string(value_type a) const { return std::to_string(a); }

    /// Accepts integers and "num/den" (den invertible mod p); reduces mod p.
    value_type parse(std::string_view s) const
    {
        auto [num, den] = detail::split_fraction(s);
        mpz_class n(num), d(den);
        mpz_class pz(static_cast<unsigned long>(p_));
        n %= pz;
        if (n < 0) n += pz;
        d %= pz;
        if (d == 0) throw Error(ErrorKind::Parse, "denominator not invertible mod " + std::to_string(p_) + " in \"" + std::string(s) + "\"");
        return mul(static_cast<value_type>(n.get_ui()), inv(static_cast<value_type>(d.get_ui())));
    }

    bool operator==(const PrimeField&) const = default;

private:
    std::uint32_t p_;
};

/// The rationals with arbitrary-precision numerators and denominators.
class RationalField {
public:
    using value_type = mpq_class;

    bool is_finite() const { return false; }
    std::string name() const { return "Q"; }

    value_type zero() const { return value_type(0); }
    value_type one() const { return value_type(1); }
    value_type from_int(std::int64_t n) const { return value_type(mpz_class(std::to_string(n))); }

    value_type add(const value_type& a, const value_type& b) const { return a + b; }
    value_type sub(const value_type& a, const value_type& b) const { return a - b; }
    value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    value_type neg(const value_type& a) const { return -a; }
    value_type inv(const value_type& a) const
    {
        if (sgn(a) == 0) throw Error(ErrorKind::InvalidField, "division by zero in Q");
        return 1 / a;
    }

    bool is_zero(const value_type& a) const { return sgn(a) == 0; }
    bool equal(const value_type& a, const value_type& b) const { return a == b; }
    bool less(const value_type& a, const value_type& b) const { return a < b; }

    std::string to_string(const value_type& a) const
    {
        if (a.get_den() == 1) return a.get_num().get_str();
        return a.get_num().get_str() + "/" + a.get_den().get_str();
    }

    value_type parse(std::string_view s) const
    {
        auto [num, den] = detail::split_fraction(s);
        value_type q{mpz_class(num), mpz_class(den)};
        q.canonicalize();
        return q;
    }

    bool operator==(const RationalField&) const = default;
};

/// Run-time description of a field, used by file formats and the CLI.
struct FieldSpec {
    enum class Kind { PrimeField, Rationals };
    Kind kind = Kind::Rationals;
    std::uint32_t p = 0;

    static FieldSpec prime(std::uint32_t p) { return {Kind::PrimeField, p}; }
    static FieldSpec rationals() { return {Kind::Rationals, 0}; }

    /// Parses "F2", "F7", "Fp:7" or "Q".
    static FieldSpec parse(std::string_view s)
    {
        if (s == "Q" || s == "q") return rationals();
        std::string_view digits;
        if (s.starts_with("Fp:")) digits = s.substr(3);
        else if (s.starts_with("F")) digits = s.substr(1);
        else throw Error(ErrorKind::Usage, "unknown field \"" + std::string(s) + "\" (expected F<p> or Q)");
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string_view::npos || digits.size() > 10)
            throw Error(ErrorKind::Usage, "unknown field \"" + std::string(s) + "\"");
        auto p = std::stoull(std::string(digits));
        PrimeField check(p);
        return prime(static_cast<std::uint32_t>(p));
    }

    std::string to_string() const { return kind == Kind::Rationals ? "Q" : "F" + std::to_string(p); }
    bool operator==(const FieldSpec&) const = default;
};

inline FieldSpec spec_of(const PrimeField& f) { return FieldSpec::prime(f.characteristic()); }
inline FieldSpec spec_of(const RationalField&) { return FieldSpec::rationals(); }

/// Calls `fn` with the concrete field object described by `spec`.
template <class Fn>
decltype(auto) with_field(const FieldSpec& spec, Fn&& fn)
{
    if (spec.kind == FieldSpec::Kind::PrimeField) return std::forward<Fn>(fn)(PrimeField(spec.p));
    return std::forward<Fn>(fn)(RationalField{});
}

template <class F>
concept FiniteField = ExactField<F> && requires(const F f, std::uint64_t i) {
    { f.size() } -> std::convertible_to<std::uint64_t>;
    { f.element(i) } -> std::convertible_to<typename F::value_type>;
};

static_assert(ExactField<PrimeField>);
static_assert(ExactField<RationalField>);
static_assert(FiniteField<PrimeField>);

} // namespace cotop
