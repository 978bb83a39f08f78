#pragma once

// Division, univariate views and content for multivariate polynomials.

#include <type_traits>
#include <vector>

#include "prymfib/poly/polynomial.hpp"

namespace prymfib {

/// Quotient f/g when g divides f exactly; throws PreconditionError otherwise.
template <CoefficientField Field>
Polynomial<Field> divide_exact(const Polynomial<Field>& f, const Polynomial<Field>& g) {
    f.require_compatible(g);
    if (g.is_zero()) throw PreconditionError("division by the zero polynomial");
    const auto& field = f.field();
    if (g.is_constant()) return f.scaled(field.div(field.one(), g.leading_coefficient()));
    const Exponents& lg = g.leading_exponents();
    const auto inv_lc = field.div(field.one(), g.leading_coefficient());
    Polynomial<Field> r = f;
    Polynomial<Field> q = f.zero_like();
    const std::size_t n = f.vars().size();
    while (!r.is_zero()) {
        const Exponents& lr = r.leading_exponents();
        Exponents e(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (lr[i] < lg[i]) throw PreconditionError("inexact polynomial division");
            e[i] = lr[i] - lg[i];
        }
        auto t = Polynomial<Field>::monomial(f.vars(), std::move(e), field.mul(r.leading_coefficient(), inv_lc), field);
        r -= t * g;
        q += t;
    }
    return q;
}

/// True when g divides f.
template <CoefficientField Field>
bool divides(const Polynomial<Field>& g, const Polynomial<Field>& f) {
    try {
        (void)divide_exact(f, g);
        return true;
    } catch (const PreconditionError&) {
        return false;
    }
}

/// Coefficients of f as a polynomial in `var`: result[k] multiplies var^k.
template <CoefficientField Field>
std::vector<Polynomial<Field>> coefficients_in(const Polynomial<Field>& f, std::size_t var) {
    std::vector<Polynomial<Field>> out(f.is_zero() ? 0 : f.degree_in(var) + 1, f.zero_like());
    for (const auto& [e, c] : f.terms()) {
        Exponents rest = e;
        const auto k = rest[var];
        rest[var] = 0;
        out[k].add_term(std::move(rest), c);
    }
    return out;
}

template <CoefficientField Field>
Polynomial<Field> from_coefficients(const std::vector<Polynomial<Field>>& coeffs, std::size_t var,
                                    const Polynomial<Field>& proto) {
    Polynomial<Field> r = proto.zero_like();
    Polynomial<Field> power = proto.constant_like(proto.field().one());
    const auto x = proto.variable_like(var);
    for (const auto& c : coeffs) {
        r += c * power;
        power = power * x;
    }
    return r;
}

/// Leading coefficient of f regarded as a polynomial in `var`.
template <CoefficientField Field>
Polynomial<Field> leading_coefficient_in(const Polynomial<Field>& f, std::size_t var) {
    if (f.is_zero()) return f;
    return coefficients_in(f, var).back();
}

/// Pseudo-remainder: lc_var(g)^(deg f - deg g + 1) * f = q*g + r with deg_var r < deg_var g.
template <CoefficientField Field>
Polynomial<Field> pseudo_remainder(const Polynomial<Field>& f, const Polynomial<Field>& g, std::size_t var) {
    if (g.is_zero()) throw PreconditionError("pseudo-remainder by zero");
    const unsigned dg = g.degree_in(var);
    if (f.is_zero() || f.degree_in(var) < dg) return f;
    const auto lg = leading_coefficient_in(g, var);
    const auto x = f.variable_like(var);
    int spare = static_cast<int>(f.degree_in(var)) - static_cast<int>(dg) + 1;
    Polynomial<Field> r = f;
    while (!r.is_zero() && r.degree_in(var) >= dg) {
        const unsigned dr = r.degree_in(var);
        auto t = leading_coefficient_in(r, var) * x.pow(dr - dg);
        r = lg * r - t * g;
        --spare;
    }
    if (spare > 0) r = r * lg.pow(static_cast<unsigned>(spare));
    return r;
}

/// Largest monomial dividing every term.
template <CoefficientField Field>
Exponents monomial_content(const Polynomial<Field>& f) {
    Exponents m(f.vars().size(), 0);
    bool first = true;
    for (const auto& [e, c] : f.terms()) {
        if (first) {
            m = e;
            first = false;
        } else {
            for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], e[i]);
        }
    }
    return m;
}

/// Positive rational r such that f/r has coprime integer coefficients.
inline Rational rational_content(const QPoly& f) {
    Integer num = 0;
    Integer den = 1;
    for (const auto& [e, c] : f.terms()) {
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num_mpz_t());
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    }
    if (num == 0) return 0;
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// Canonical associate: integer-primitive with positive leading coefficient
/// over Q, monic over a prime field. Zero stays zero.
template <CoefficientField Field>
Polynomial<Field> normalize(const Polynomial<Field>& f) {
    if (f.is_zero()) return f;
    const auto& field = f.field();
    if constexpr (std::is_same_v<Field, RationalField>) {
        Rational s = 1 / rational_content(f);
        if (sgn(f.leading_coefficient()) < 0) s = -s;
        return f.scaled(s);
    } else {
        return f.scaled(field.div(field.one(), f.leading_coefficient()));
    }
}

/// Monic associate (leading coefficient 1 in grevlex order).
template <CoefficientField Field>
Polynomial<Field> make_monic(const Polynomial<Field>& f) {
    if (f.is_zero()) return f;
    return f.scaled(f.field().div(f.field().one(), f.leading_coefficient()));
}

/// Restriction of f to the affine chart {var = 1}.
template <CoefficientField Field>
Polynomial<Field> dehomogenize(const Polynomial<Field>& f, std::size_t var) {
    return f.substitute(var, f.constant_like(f.field().one()));
}

/// Homogenization with respect to `var` up to total degree `degree`.
template <CoefficientField Field>
Polynomial<Field> homogenize(const Polynomial<Field>& f, std::size_t var, int degree) {
    Polynomial<Field> r = f.zero_like();
    for (const auto& [e, c] : f.terms()) {
        const auto d = static_cast<int>(exponent_sum(e));
        if (d > degree) throw PreconditionError("homogenization degree below polynomial degree");
        Exponents h = e;
        h[var] = checked_exponent_add(h[var], static_cast<Exponent>(degree - d));
        r.add_term(std::move(h), c);
    }
    return r;
}

}  // namespace prymfib
