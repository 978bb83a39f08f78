#pragma once

// Rational roots of univariate rational polynomials via p-adic lifting.

#include <algorithm>
#include <vector>

#include "prymfib/poly/gcd.hpp"

namespace prymfib {

namespace detail {

inline Integer eval_mod(const std::vector<Integer>& coeffs, const Integer& x, const Integer& m) {
    Integer acc = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        acc = acc * x + coeffs[i];
        mpz_mod(acc.get_mpz_t(), acc.get_mpz_t(), m.get_mpz_t());
    }
    return acc;
}

}  // namespace detail

/// All distinct rational roots of a univariate f, in increasing order.
/// Constant polynomials have none; the zero polynomial is rejected.
inline std::vector<Rational> rational_roots(const QPoly& f) {
    if (f.is_zero()) throw PreconditionError("roots of the zero polynomial");
    const auto sup = f.support();
    if (sup.size() > 1) throw PreconditionError("rational_roots needs a univariate polynomial");
    std::vector<Rational> roots;
    if (sup.empty()) return roots;
    const std::size_t var = sup.front();

    const QPoly g = squarefree_part(f, var);
    std::vector<Integer> a(g.degree_in(var) + 1, 0);
    for (const auto& [e, c] : g.terms()) a[e[var]] = c.get_num();  // integer-primitive after normalize
    std::size_t low = 0;
    while (a[low] == 0) ++low;
    if (low > 0) {
        roots.push_back(0);
        a.erase(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(low));
    }
    if (a.size() > 1) {
        const Integer& lead = a.back();
        std::vector<Integer> da(a.size() - 1);
        for (std::size_t i = 1; i < a.size(); ++i) da[i - 1] = a[i] * static_cast<unsigned long>(i);

        // A prime keeping the degree and squarefreeness.
        std::uint64_t p = 101;
        for (;; p += 2) {
            if (!detail::is_prime_u64(p)) continue;
            if (mpz_fdiv_ui(lead.get_mpz_t(), p) == 0) continue;
            const PrimeField fp(p);
            const FpPoly gp = reduce_mod(g, fp);
            if (gcd_poly(gp, gp.derivative(var)).is_constant()) break;
        }
        const Integer bound = 2 * abs(lead) * abs(a.front());
        const Integer prime(static_cast<unsigned long>(p));
        for (std::uint64_t r0 = 0; r0 < p; ++r0) {
            if (detail::eval_mod(a, Integer(static_cast<unsigned long>(r0)), prime) != 0) continue;
            Integer r(static_cast<unsigned long>(r0));
            Integer m = prime;
            while (m <= bound) {
                const Integer m2 = m * m;
                Integer num = detail::eval_mod(a, r, m2);
                Integer den = detail::eval_mod(da, r, m2);
                Integer inv;
                if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), m2.get_mpz_t()) == 0) break;
                r = r - num * inv;
                mpz_mod(r.get_mpz_t(), r.get_mpz_t(), m2.get_mpz_t());
                m = m2;
            }
            // lead * root is an integer of absolute value at most |lead * a0|.
            Integer s = lead * r;
            mpz_mod(s.get_mpz_t(), s.get_mpz_t(), m.get_mpz_t());
            if (2 * s > m) s -= m;
            Rational cand(s, lead);
            cand.canonicalize();
            Rational value = 0;
            for (std::size_t i = a.size(); i-- > 0;) value = value * cand + a[i];
            if (value == 0) roots.push_back(cand);
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

}  // namespace prymfib
