#pragma once

// Sylvester resultants and principal subresultant coefficients.

#include "prymfib/poly/matrix.hpp"

namespace prymfib {

namespace detail {

// Rows var^k f (k < n - j) and var^k g (k < m - j) restricted to the
// columns of var^(m+n-j-1) .. var^j.
template <CoefficientField Field>
PolyMatrix<Field> subresultant_matrix(const Polynomial<Field>& f, const Polynomial<Field>& g, std::size_t var,
                                      unsigned j) {
    const auto cf = coefficients_in(f, var);
    const auto cg = coefficients_in(g, var);
    const unsigned m = static_cast<unsigned>(cf.size() - 1);
    const unsigned n = static_cast<unsigned>(cg.size() - 1);
    const unsigned size = m + n - 2 * j;
    PolyMatrix<Field> mat(size, size, f);
    const unsigned top = m + n - j - 1;  // power of var in column 0
    unsigned row = 0;
    auto place = [&](const std::vector<Polynomial<Field>>& coeffs, unsigned shift) {
        for (unsigned k = 0; k < coeffs.size(); ++k) {
            const unsigned power = k + shift;
            if (power < j || power > top) continue;
            mat.set(row, top - power, coeffs[k]);
        }
        ++row;
    };
    for (unsigned k = n - j; k-- > 0;) place(cf, k);
    for (unsigned k = m - j; k-- > 0;) place(cg, k);
    return mat;
}

}  // namespace detail

/// Sylvester matrix of f and g with respect to `var`.
template <CoefficientField Field>
PolyMatrix<Field> sylvester_matrix(const Polynomial<Field>& f, const Polynomial<Field>& g, std::size_t var) {
    f.require_compatible(g);
    if (f.is_zero() || g.is_zero()) throw PreconditionError("Sylvester matrix of a zero polynomial");
    if (f.degree_in(var) + g.degree_in(var) == 0) throw PreconditionError("Sylvester matrix is empty");
    return detail::subresultant_matrix(f, g, var, 0);
}

/// Res_var(f, g). Vanishes iff f and g share a factor of positive degree in var.
template <CoefficientField Field>
Polynomial<Field> resultant(const Polynomial<Field>& f, const Polynomial<Field>& g, std::size_t var) {
    f.require_compatible(g);
    if (f.is_zero() || g.is_zero()) throw PreconditionError("resultant of a zero polynomial");
    if (var >= f.vars().size()) throw PreconditionError("variable index out of range");
    const unsigned m = f.degree_in(var);
    const unsigned n = g.degree_in(var);
    if (m == 0 && n == 0) return f.constant_like(f.field().one());
    if (m == 0) return f.pow(n);
    if (n == 0) return g.pow(m);
    return determinant(detail::subresultant_matrix(f, g, var, 0));
}

template <CoefficientField Field>
Polynomial<Field> resultant(const Polynomial<Field>& f, const Polynomial<Field>& g, std::string_view var) {
    return resultant(f, g, f.vars().index_of(var));
}

/// j-th principal subresultant coefficient. For a value of the remaining
/// variables where the leading coefficients do not both vanish, the gcd of
/// the specialized polynomials has degree equal to the least j whose
/// coefficient is nonzero there.
template <CoefficientField Field>
Polynomial<Field> principal_subresultant(const Polynomial<Field>& f, const Polynomial<Field>& g, std::size_t var,
                                         unsigned j) {
    f.require_compatible(g);
    if (f.is_zero() || g.is_zero()) throw PreconditionError("subresultant of a zero polynomial");
    const unsigned m = f.degree_in(var);
    const unsigned n = g.degree_in(var);
    if (j > std::min(m, n)) throw PreconditionError("subresultant index exceeds the degrees");
    if (j == 0) return resultant(f, g, var);
    if (m + n == 2 * j) return f.constant_like(f.field().one());
    return determinant(detail::subresultant_matrix(f, g, var, j));
}

}  // namespace prymfib
