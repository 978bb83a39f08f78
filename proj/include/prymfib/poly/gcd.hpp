#pragma once

// Multivariate gcd (recursive content / subresultant PRS), squarefree
// decomposition, and a factored display form.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "prymfib/poly/algebra.hpp"

namespace prymfib {

template <CoefficientField Field>
Polynomial<Field> gcd_poly(const Polynomial<Field>& f, const Polynomial<Field>& g);

namespace detail {

template <CoefficientField Field>
std::optional<std::size_t> main_variable(const Polynomial<Field>& f, const Polynomial<Field>& g) {
    for (std::size_t i = 0; i < f.vars().size(); ++i) {
        if (f.depends_on(i) || g.depends_on(i)) return i;
    }
    return std::nullopt;
}

// gcd of the coefficients of f in `var` (a polynomial free of var).
template <CoefficientField Field>
Polynomial<Field> content_in(const Polynomial<Field>& f, std::size_t var) {
    Polynomial<Field> c = f.zero_like();
    for (const auto& coeff : coefficients_in(f, var)) {
        if (coeff.is_zero()) continue;
        c = gcd_poly(c, coeff);
        if (c.is_constant()) break;
    }
    return c;
}

// gcd of two polynomials primitive in var, both of positive degree in var.
template <CoefficientField Field>
Polynomial<Field> primitive_prs_gcd(Polynomial<Field> a, Polynomial<Field> b, std::size_t var) {
    if (a.degree_in(var) < b.degree_in(var)) std::swap(a, b);
    auto g = a.constant_like(a.field().one());
    auto h = g;
    for (;;) {
        const unsigned delta = a.degree_in(var) - b.degree_in(var);
        auto r = pseudo_remainder(a, b, var);
        if (r.is_zero()) break;
        if (r.degree_in(var) == 0) return a.constant_like(a.field().one());
        a = std::move(b);
        b = divide_exact(r, g * h.pow(delta));
        g = leading_coefficient_in(a, var);
        if (delta == 0) {
        } else if (delta == 1) {
            h = g;
        } else {
            h = divide_exact(g.pow(delta), h.pow(delta - 1));
        }
    }
    return divide_exact(b, content_in(b, var));
}

}  // namespace detail

/// Greatest common divisor, normalized (see `normalize`). gcd(f, 0) = normalize(f).
template <CoefficientField Field>
Polynomial<Field> gcd_poly(const Polynomial<Field>& f, const Polynomial<Field>& g) {
    f.require_compatible(g);
    if (f.is_zero()) return normalize(g);
    if (g.is_zero()) return normalize(f);
    if (f.is_constant() || g.is_constant()) return f.constant_like(f.field().one());
    const auto var = *detail::main_variable(f, g);
    if (!f.depends_on(var)) return gcd_poly(f, detail::content_in(g, var));
    if (!g.depends_on(var)) return gcd_poly(detail::content_in(f, var), g);
    const auto cf = detail::content_in(f, var);
    const auto cg = detail::content_in(g, var);
    const auto pf = divide_exact(f, cf);
    const auto pg = divide_exact(g, cg);
    const auto c = gcd_poly(cf, cg);
    return normalize(c * detail::primitive_prs_gcd(pf, pg, var));
}

/// Squarefree part (product of the distinct irreducible factors), normalized.
template <CoefficientField Field>
Polynomial<Field> squarefree_part(const Polynomial<Field>& f, std::size_t var) {
    if (f.is_zero()) throw PreconditionError("squarefree part of zero");
    const auto d = f.derivative(var);
    if (d.is_zero()) return normalize(f);
    return normalize(divide_exact(f, gcd_poly(f, d)));
}

template <CoefficientField Field>
struct SquarefreeFactor {
    Polynomial<Field> factor;
    unsigned exponent;
};

/// Yun's algorithm for a univariate rational polynomial. Returns monic,
/// squarefree, pairwise coprime factors with strictly increasing exponents;
/// f = lc(f) * prod factor^exponent.
inline std::vector<SquarefreeFactor<RationalField>> squarefree_decompose(const QPoly& f) {
    if (f.is_zero()) throw PreconditionError("squarefree decomposition of zero");
    const auto sup = f.support();
    if (sup.size() > 1) throw PreconditionError("squarefree decomposition needs a univariate polynomial");
    std::vector<SquarefreeFactor<RationalField>> out;
    if (sup.empty()) return out;
    const std::size_t var = sup.front();
    const auto fp = f.derivative(var);
    const auto a0 = gcd_poly(f, fp);
    auto b = divide_exact(f, a0);
    auto c = divide_exact(fp, a0);
    auto d = c - b.derivative(var);
    for (unsigned i = 1; !b.is_constant(); ++i) {
        const auto a = gcd_poly(b, d);
        b = divide_exact(b, a);
        c = divide_exact(d, a);
        d = c - b.derivative(var);
        if (!a.is_constant()) out.push_back({make_monic(a), i});
    }
    return out;
}

/// Display form with the constant and monomial content pulled out, e.g.
/// "x*y*(x^3+y^3+z^3)".
inline std::string factored_string(const QPoly& f) {
    if (f.is_zero()) return "0";
    Rational content = rational_content(f);
    if (sgn(f.leading_coefficient()) < 0) content = -content;
    const Exponents mono = monomial_content(f);
    const auto m = QPoly::monomial(f.vars(), mono, 1);
    const QPoly rest = divide_exact(f, m).scaled(1 / content);
    std::string head;
    if (content == -1) {
        head = "-";
    } else if (content != 1) {
        head = content.get_str();
    }
    const std::string mono_text = m.is_constant() ? "" : to_string(m);
    if (rest.is_constant()) {
        if (mono_text.empty()) return to_string(f);
        return head.empty() || head == "-" ? head + mono_text : head + "*" + mono_text;
    }
    std::string out = head;
    if (!head.empty() && head != "-") out += "*";
    if (!mono_text.empty()) out += mono_text + "*";
    if (out.empty()) return to_string(rest);
    return out + "(" + to_string(rest) + ")";
}

}  // namespace prymfib
