#pragma once

// Macaulay matrices: n forms in n variables have no common zero in
// projective space over the algebraic closure iff their ideal contains every
// monomial of degree D = sum(d_i - 1) + 1, i.e. iff the degree-D Macaulay
// matrix has full column rank.

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "prymfib/poly/matrix.hpp"

namespace prymfib {

/// Exponent vectors of total degree d in n variables, in grevlex order.
inline std::vector<Exponents> monomials_of_degree(std::size_t n, unsigned d) {
    std::vector<Exponents> out;
    if (n == 0) {
        if (d == 0) out.emplace_back();
        return out;
    }
    Exponents e(n, 0);
    auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
        if (i + 1 == n) {
            e[i] = left;
            out.push_back(e);
            return;
        }
        for (unsigned k = left + 1; k-- > 0;) {
            e[i] = k;
            self(self, i + 1, left - k);
        }
    };
    rec(rec, 0, d);
    std::sort(out.begin(), out.end(), GrevlexGreater{});
    return out;
}

struct MacaulayShape {
    unsigned degree = 0;
    std::size_t rows = 0;
    std::size_t columns = 0;
};

template <CoefficientField Field>
MacaulayShape macaulay_shape(const std::vector<Polynomial<Field>>& forms) {
    if (forms.empty()) throw PreconditionError("Macaulay matrix of no forms");
    const std::size_t n = forms.front().vars().size();
    if (forms.size() != n) throw PreconditionError("Macaulay criterion needs as many forms as variables");
    MacaulayShape s;
    unsigned excess = 0;
    for (const auto& f : forms) {
        if (f.is_zero() || f.is_constant() || !f.is_homogeneous()) {
            throw PreconditionError("Macaulay matrix needs nonconstant forms");
        }
        excess += static_cast<unsigned>(f.total_degree()) - 1;
    }
    s.degree = excess + 1;
    s.columns = monomials_of_degree(n, s.degree).size();
    for (const auto& f : forms) s.rows += monomials_of_degree(n, s.degree - f.total_degree()).size();
    return s;
}

/// Rank of the degree-D Macaulay matrix over the forms' own field.
template <CoefficientField Field>
std::size_t macaulay_rank(const std::vector<Polynomial<Field>>& forms) {
    const auto shape = macaulay_shape(forms);
    const std::size_t n = forms.front().vars().size();
    const auto& field = forms.front().field();
    const auto cols = monomials_of_degree(n, shape.degree);
    std::map<Exponents, std::size_t, GrevlexGreater> column_of;
    for (std::size_t j = 0; j < cols.size(); ++j) column_of.emplace(cols[j], j);
    std::vector<std::vector<typename Field::value_type>> rows;
    rows.reserve(shape.rows);
    for (const auto& f : forms) {
        for (const auto& m : monomials_of_degree(n, shape.degree - f.total_degree())) {
            std::vector<typename Field::value_type> row(cols.size(), field.zero());
            for (const auto& [e, c] : f.terms()) {
                Exponents s(n);
                for (std::size_t i = 0; i < n; ++i) s[i] = e[i] + m[i];
                row[column_of.at(s)] = c;
            }
            rows.push_back(std::move(row));
        }
    }
    return matrix_rank(std::move(rows), field);
}

namespace detail {

// Nonzero constants have no zeros; a zero form leaves fewer equations than
// unknowns, which always have a common projective zero.
template <CoefficientField Field>
std::optional<bool> trivial_common_zero_verdict(const std::vector<Polynomial<Field>>& forms) {
    for (const auto& f : forms) {
        if (!f.is_zero() && f.is_constant()) return true;
    }
    for (const auto& f : forms) {
        if (f.is_zero()) return false;
    }
    return std::nullopt;
}

}  // namespace detail

template <CoefficientField Field>
bool forms_have_no_common_zero(const std::vector<Polynomial<Field>>& forms) {
    if (auto v = detail::trivial_common_zero_verdict(forms)) return *v;
    return macaulay_rank(forms) == macaulay_shape(forms).columns;
}

/// Rational version: full rank modulo a prime proves full rank over Q, so a
/// few primes are tried before exact rational elimination.
inline bool forms_have_no_common_zero(const std::vector<QPoly>& forms) {
    if (auto v = detail::trivial_common_zero_verdict(forms)) return *v;
    const auto columns = macaulay_shape(forms).columns;
    for (std::uint64_t p : {1000003ULL, 1000033ULL, 1000037ULL}) {
        try {
            const PrimeField fp(p);
            std::vector<FpPoly> reduced;
            for (const auto& f : forms) reduced.push_back(reduce_mod(f, fp));
            bool degree_kept = true;
            for (std::size_t i = 0; i < forms.size(); ++i) {
                degree_kept = degree_kept && !reduced[i].is_zero() &&
                              reduced[i].total_degree() == forms[i].total_degree();
            }
            if (degree_kept && macaulay_rank(reduced) == columns) return true;
        } catch (const BadPrimeError&) {
        }
    }
    return macaulay_rank(forms) == columns;
}

}  // namespace prymfib
