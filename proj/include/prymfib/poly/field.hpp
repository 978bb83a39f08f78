#pragma once

// Coefficient fields. A field object is a small descriptor that carries
// whatever runtime data its arithmetic needs (the modulus for F_p) and
// performs all coefficient operations; elements are plain values.

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <string>

#include "prymfib/poly/error.hpp"

namespace prymfib {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// Parses "p/q" or an integer literal. Throws PreconditionError on bad text.
inline Rational rational_from_string(const std::string& text) {
    Rational q;
    if (q.set_str(text, 10) != 0) throw PreconditionError("not a rational literal: '" + text + "'");
    if (sgn(q.get_den()) == 0) throw PreconditionError("zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

template <class F>
concept CoefficientField = requires(const F& f, const typename F::value_type& a, long long n, const Rational& q) {
    typename F::value_type;
    { f.zero() } -> std::same_as<typename F::value_type>;
    { f.one() } -> std::same_as<typename F::value_type>;
    { f.from_int(n) } -> std::same_as<typename F::value_type>;
    { f.from_rational(q) } -> std::same_as<typename F::value_type>;
    { f.is_zero(a) } -> std::same_as<bool>;
    { f.equal(a, a) } -> std::same_as<bool>;
    { f.add(a, a) } -> std::same_as<typename F::value_type>;
    { f.sub(a, a) } -> std::same_as<typename F::value_type>;
    { f.mul(a, a) } -> std::same_as<typename F::value_type>;
    { f.neg(a) } -> std::same_as<typename F::value_type>;
    { f.div(a, a) } -> std::same_as<typename F::value_type>;
    { f.format(a) } -> std::same_as<std::string>;
};

/// The rationals, backed by GMP. Values are kept canonical (lowest terms,
/// positive denominator) by mpq_class.
struct RationalField {
    using value_type = Rational;

    value_type zero() const { return {}; }
    value_type one() const { return 1; }
    value_type from_int(long long v) const { return Rational(static_cast<long>(v)); }
    value_type from_rational(const Rational& q) const { return q; }

    bool is_zero(const value_type& a) const { return sgn(a) == 0; }
    bool equal(const value_type& a, const value_type& b) const { return a == b; }
    value_type add(const value_type& a, const value_type& b) const { return a + b; }
    value_type sub(const value_type& a, const value_type& b) const { return a - b; }
    value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    value_type neg(const value_type& a) const { return -a; }
    value_type div(const value_type& a, const value_type& b) const {
        if (sgn(b) == 0) throw PreconditionError("division by zero rational");
        return a / b;
    }
    std::string format(const value_type& a) const { return a.get_str(); }
    std::string name() const { return "Q"; }

    bool operator==(const RationalField&) const = default;
};

namespace detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    if (m <= 0xFFFFFFFFULL) return (a * b) % m;
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp != 0) {
        if (exp & 1U) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1U;
    }
    return result;
}

// Deterministic Miller-Rabin for 64-bit inputs.
inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1U) == 0) {
        d >>= 1U;
        ++s;
    }
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

}  // namespace detail

/// The prime field F_p for a machine-word prime p < 2^62. Elements are
/// residues in [0, p).
class PrimeField {
public:
    using value_type = std::uint64_t;

    explicit PrimeField(std::uint64_t p) : p_(p) {
        if (p >= (1ULL << 62) || !detail::is_prime_u64(p)) {
            throw PreconditionError("modulus " + std::to_string(p) + " is not a prime below 2^62");
        }
    }

    std::uint64_t modulus() const noexcept { return p_; }

    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    value_type from_int(long long v) const {
        long long r = v % static_cast<long long>(p_);
        if (r < 0) r += static_cast<long long>(p_);
        return static_cast<value_type>(r);
    }
    value_type from_integer(const Integer& v) const {
        return mpz_fdiv_ui(v.get_mpz_t(), static_cast<unsigned long>(p_));
    }
    /// Reduction of a rational; throws BadPrimeError when p divides the denominator.
    value_type from_rational(const Rational& q) const {
        value_type den = from_integer(q.get_den());
        if (den == 0) throw BadPrimeError("prime " + std::to_string(p_) + " divides a denominator");
        return mul(from_integer(q.get_num()), inverse(den));
    }

    bool is_zero(const value_type& a) const { return a == 0; }
    bool equal(const value_type& a, const value_type& b) const { return a == b; }
    value_type add(const value_type& a, const value_type& b) const {
        value_type s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    value_type sub(const value_type& a, const value_type& b) const { return a >= b ? a - b : a + p_ - b; }
    value_type mul(const value_type& a, const value_type& b) const { return detail::mulmod(a, b, p_); }
    value_type neg(const value_type& a) const { return a == 0 ? 0 : p_ - a; }
    value_type inverse(const value_type& a) const {
        if (a == 0) throw PreconditionError("division by zero in F_" + std::to_string(p_));
        return detail::powmod(a, p_ - 2, p_);
    }
    value_type div(const value_type& a, const value_type& b) const { return mul(a, inverse(b)); }
    std::string format(const value_type& a) const { return std::to_string(a); }
    std::string name() const { return "F_" + std::to_string(p_); }

    bool operator==(const PrimeField&) const = default;

private:
    std::uint64_t p_;
};

static_assert(CoefficientField<RationalField>);
static_assert(CoefficientField<PrimeField>);

}  // namespace prymfib
