#pragma once

// Test-side reference computations. Each one is deliberately naive and
// shares no algorithmic code with the library beyond polynomial arithmetic.

#include <array>
#include <optional>
#include <ostream>
#include <span>
#include <random>
#include <vector>

#include "prymfib/poly.hpp"

namespace prymfib {

// Readable gtest failure messages.
template <CoefficientField Field>
void PrintTo(const Polynomial<Field>& p, std::ostream* os) {
    *os << to_string(p);
}

}  // namespace prymfib

namespace oracle {

using prymfib::Exponents;
using prymfib::QPoly;
using prymfib::Rational;
using prymfib::Variables;

/// Laplace expansion along the first row.
inline QPoly cofactor_determinant(const std::vector<std::vector<QPoly>>& m, const QPoly& proto) {
    const std::size_t n = m.size();
    if (n == 0) return proto.constant_like(1);
    if (n == 1) return m[0][0];
    QPoly det = proto.zero_like();
    for (std::size_t c = 0; c < n; ++c) {
        if (m[0][c].is_zero()) continue;
        std::vector<std::vector<QPoly>> sub;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<QPoly> row;
            for (std::size_t k = 0; k < n; ++k) {
                if (k != c) row.push_back(m[r][k]);
            }
            sub.push_back(std::move(row));
        }
        QPoly term = m[0][c] * cofactor_determinant(sub, proto);
        det = (c % 2 == 0) ? det + term : det - term;
    }
    return det;
}

/// Coefficient of var^k in f, computed term by term.
inline QPoly coeff_of_power(const QPoly& f, std::size_t var, unsigned k) {
    QPoly out = f.zero_like();
    for (const auto& [e, c] : f.terms()) {
        if (e[var] != k) continue;
        Exponents r = e;
        r[var] = 0;
        out.add_term(r, c);
    }
    return out;
}

/// Textbook Sylvester matrix (rows of f first, highest power on the left),
/// expanded by cofactors.
inline QPoly sylvester_resultant(const QPoly& f, const QPoly& g, std::size_t var) {
    const unsigned m = f.degree_in(var);
    const unsigned n = g.degree_in(var);
    const unsigned size = m + n;
    std::vector<std::vector<QPoly>> mat(size, std::vector<QPoly>(size, f.zero_like()));
    for (unsigned r = 0; r < n; ++r) {
        for (unsigned k = 0; k <= m; ++k) mat[r][r + k] = coeff_of_power(f, var, m - k);
    }
    for (unsigned r = 0; r < m; ++r) {
        for (unsigned k = 0; k <= n; ++k) mat[n + r][r + k] = coeff_of_power(g, var, n - k);
    }
    return cofactor_determinant(mat, f);
}

/// Random polynomial with small integer coefficients and total degree <= d.
inline QPoly random_poly(const Variables& vars, unsigned d, std::mt19937_64& rng, int terms = 6, int range = 5,
                         bool homogeneous = false) {
    std::uniform_int_distribution<int> coeff(-range, range);
    std::uniform_int_distribution<unsigned> deg(homogeneous ? d : 0, d);
    QPoly p(vars);
    for (int t = 0; t < terms; ++t) {
        unsigned left = deg(rng);
        Exponents e(vars.size(), 0);
        for (std::size_t i = 0; i + 1 < vars.size(); ++i) {
            std::uniform_int_distribution<unsigned> part(0, left);
            e[i] = part(rng);
            left -= e[i];
        }
        if (!vars.size()) continue;
        e[vars.size() - 1] = homogeneous ? left : std::uniform_int_distribution<unsigned>(0, left)(rng);
        p.add_term(e, Rational(coeff(rng)));
    }
    return p;
}

/// Random form of exact degree d (retries until nonzero).
inline QPoly random_form(const Variables& vars, unsigned d, std::mt19937_64& rng, int terms = 8, int range = 5) {
    for (;;) {
        QPoly p = random_poly(vars, d, rng, terms, range, true);
        if (!p.is_zero()) return p;
    }
}

/// Rank of a rational matrix by plain Gauss-Jordan elimination.
inline std::size_t rational_rank(std::vector<std::vector<Rational>> m) {
    std::size_t rank = 0;
    const std::size_t cols = m.empty() ? 0 : m.front().size();
    for (std::size_t c = 0; c < cols; ++c) {
        std::size_t piv = rank;
        while (piv < m.size() && m[piv][c] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[rank]);
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == rank || m[r][c] == 0) continue;
            const Rational f = m[r][c] / m[rank][c];
            for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
        }
        ++rank;
    }
    return rank;
}

/// dim_Q Q[x,y] / (f, g, (x,y)^n): the span of all monomial multiples of f
/// and g, truncated below degree n, inside the polynomials of degree < n.
inline std::size_t truncated_local_dimension(const QPoly& f, const QPoly& g, std::size_t xv, std::size_t yv,
                                             unsigned n) {
    std::vector<std::pair<unsigned, unsigned>> basis;
    for (unsigned d = 0; d < n; ++d) {
        for (unsigned i = 0; i <= d; ++i) basis.emplace_back(i, d - i);
    }
    auto column = [&](unsigned i, unsigned j) {
        for (std::size_t k = 0; k < basis.size(); ++k) {
            if (basis[k].first == i && basis[k].second == j) return k;
        }
        return basis.size();
    };
    std::vector<std::vector<Rational>> rows;
    for (const QPoly* p : {&f, &g}) {
        for (const auto& [mi, mj] : basis) {
            std::vector<Rational> row(basis.size(), 0);
            for (const auto& [e, c] : p->terms()) {
                const unsigned i = e[xv] + mi;
                const unsigned j = e[yv] + mj;
                if (i + j >= n) continue;
                row[column(i, j)] += c;
            }
            rows.push_back(std::move(row));
        }
    }
    return basis.size() - rational_rank(std::move(rows));
}

/// Local intersection number at the origin as the stabilized dimension of
/// the truncated local algebra; nullopt if it has not stabilized by `cap`.
inline std::optional<unsigned> local_algebra_dimension(const QPoly& f, const QPoly& g, std::size_t xv,
                                                       std::size_t yv, unsigned cap = 12) {
    std::size_t prev = truncated_local_dimension(f, g, xv, yv, 1);
    for (unsigned n = 2; n <= cap; ++n) {
        const std::size_t cur = truncated_local_dimension(f, g, xv, yv, n);
        if (cur == prev) return static_cast<unsigned>(cur);
        prev = cur;
    }
    return std::nullopt;
}

/// Points of P^2(F_p), first nonzero coordinate 1, where F and its three
/// partials vanish mod p (exhaustive search).
inline std::vector<std::array<std::uint64_t, 3>> fp_singular_points(const QPoly& F, std::uint64_t p) {
    const prymfib::PrimeField fp(p);
    std::vector<prymfib::FpPoly> polys{prymfib::reduce_mod(F, fp)};
    for (std::size_t v = 0; v < 3; ++v) polys.push_back(prymfib::reduce_mod(F.derivative(v), fp));
    std::vector<std::array<std::uint64_t, 3>> out;
    auto test = [&](std::array<std::uint64_t, 3> pt) {
        for (const auto& q : polys) {
            if (q.evaluate(std::span<const std::uint64_t>(pt.data(), 3)) != 0) return;
        }
        out.push_back(pt);
    };
    for (std::uint64_t a = 0; a < p; ++a) {
        for (std::uint64_t b = 0; b < p; ++b) test({1, a, b});
    }
    for (std::uint64_t b = 0; b < p; ++b) test({0, 1, b});
    test({0, 0, 1});
    return out;
}

}  // namespace oracle
