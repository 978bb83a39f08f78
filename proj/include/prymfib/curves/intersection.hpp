#pragma once

// Local intersection numbers (Fulton's reduction) and global intersection
// multiplicity profiles of plane curves.

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "prymfib/curves/plane_curve.hpp"

namespace prymfib {

/// A local intersection number, possibly infinite (shared component).
struct Multiplicity {
    bool infinite = false;
    unsigned value = 0;

    static Multiplicity finite(unsigned v) { return {false, v}; }
    static Multiplicity infinity() { return {true, 0}; }

    bool operator==(const Multiplicity& o) const { return infinite == o.infinite && value == o.value; }
    std::string to_string() const { return infinite ? "inf" : std::to_string(value); }
};

namespace detail {

inline unsigned lowest_power(const QPoly& f, std::size_t var) {
    unsigned low = ~0U;
    for (const auto& [e, c] : f.terms()) low = std::min(low, e[var]);
    return low;
}

}  // namespace detail

/// Intersection number at the origin of the affine curves f = 0 and g = 0,
/// which may involve only the variables `xv` and `yv`.
inline Multiplicity local_intersection_number(QPoly f, QPoly g, std::size_t xv, std::size_t yv) {
    f.require_compatible(g);
    for (const auto* p : {&f, &g}) {
        for (std::size_t v : p->support()) {
            if (v != xv && v != yv) throw PreconditionError("local intersection needs bivariate polynomials");
        }
    }
    if (f.is_zero()) std::swap(f, g);
    if (g.is_zero()) return sgn(f.constant_term()) == 0 ? Multiplicity::infinity() : Multiplicity::finite(0);
    if (sgn(f.constant_term()) != 0 || sgn(g.constant_term()) != 0) return Multiplicity::finite(0);
    const QPoly common = gcd_poly(f, g);
    if (!common.is_constant() && sgn(common.constant_term()) == 0) return Multiplicity::infinity();

    const auto budget = static_cast<unsigned long>(f.total_degree()) * static_cast<unsigned long>(g.total_degree());
    const QPoly x = f.variable_like(xv);
    const QPoly y = f.variable_like(yv);
    const QPoly zero_y = f.zero_like();
    unsigned long total = 0;
    for (unsigned step = 0; step < 100000; ++step) {
        if (sgn(f.constant_term()) != 0 || sgn(g.constant_term()) != 0) return Multiplicity::finite(static_cast<unsigned>(total));
        QPoly fx = f.substitute(yv, zero_y);
        QPoly gx = g.substitute(yv, zero_y);
        if (fx.is_zero() && gx.is_zero()) return Multiplicity::infinity();
        if (fx.is_zero()) {
            std::swap(f, g);
            std::swap(fx, gx);
        }
        if (gx.is_zero()) {
            // g = y*h: I(f, g) = I(f, y) + I(f, h) and I(f, y) = ord_x f(x, 0).
            total += detail::lowest_power(fx, xv);
            g = divide_exact(g, y);
        } else {
            unsigned r = fx.degree_in(xv);
            unsigned s = gx.degree_in(xv);
            if (r > s) {
                std::swap(f, g);
                std::swap(fx, gx);
                std::swap(r, s);
            }
            const Rational lf = coefficients_in(fx, xv).back().constant_term();
            const Rational lg = coefficients_in(gx, xv).back().constant_term();
            g = g.scaled(lf) - (x.pow(s - r) * f).scaled(lg);
            if (g.is_zero()) return Multiplicity::infinity();
        }
        if (total > budget) throw FuelExhaustedError("local intersection exceeded the Bezout bound " + std::to_string(budget));
    }
    throw FuelExhaustedError("local intersection recursion did not terminate");
}

/// Intersection multiplicity of two projective plane curves at q.
inline Multiplicity fulton_multiplicity(const QPoly& f, const QPoly& g, const RationalPoint& q) {
    const std::size_t chart = q.chart();
    const auto [u, v] = chart_coordinates(chart);
    return local_intersection_number(localize(f, q, chart), localize(g, q, chart), u, v);
}

inline Multiplicity fulton_multiplicity(const PlaneCurve& a, const PlaneCurve& b, const RationalPoint& q) {
    return fulton_multiplicity(a.poly(), b.poly(), q);
}

/// Multiset of intersection multiplicities over the algebraic closure.
struct MultiplicityProfile {
    unsigned degree_product = 0;
    /// Sorted ascending.
    std::vector<unsigned> multiplicities;
    bool resolved = false;

    unsigned total() const {
        unsigned t = 0;
        for (auto m : multiplicities) t += m;
        return t;
    }
    unsigned max() const { return multiplicities.empty() ? 0 : multiplicities.back(); }
    std::size_t points() const { return multiplicities.size(); }

    /// "m×count" groups in ascending m, e.g. "1×2,2×3".
    std::string summary() const {
        std::map<unsigned, unsigned> counts;
        for (auto m : multiplicities) ++counts[m];
        std::string out;
        for (const auto& [m, n] : counts) {
            if (!out.empty()) out += ",";
            out += std::to_string(m) + "×" + std::to_string(n);
        }
        return out.empty() ? "empty" : out;
    }

    bool operator==(const MultiplicityProfile& o) const {
        return degree_product == o.degree_product && multiplicities == o.multiplicities;
    }
};

namespace detail {

using Transform = std::array<std::array<long, 3>, 3>;

// Entries of random coordinate changes lie in [-R, R].
inline constexpr long kTransformRange = 32;

inline long transform_det(const Transform& t) {
    return t[0][0] * (t[1][1] * t[2][2] - t[1][2] * t[2][1]) - t[0][1] * (t[1][0] * t[2][2] - t[1][2] * t[2][0]) +
           t[0][2] * (t[1][0] * t[2][1] - t[1][1] * t[2][0]);
}

inline Transform random_transform(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> entry(-kTransformRange, kTransformRange);
    for (;;) {
        Transform t;
        for (auto& row : t) {
            for (auto& e : row) e = entry(rng);
        }
        if (transform_det(t) != 0) return t;
    }
}

inline QPoly apply_transform(const QPoly& f, const Transform& t) {
    std::vector<QPoly> images;
    for (std::size_t i = 0; i < 3; ++i) {
        QPoly img = f.zero_like();
        for (std::size_t j = 0; j < 3; ++j) img += f.variable_like(j).scaled(Rational(t[i][j]));
        images.push_back(img);
    }
    return f.compose(images);
}

// One attempt: the profile read from Res_y after the change, or nothing when
// the change is visibly degenerate. `resolved` records whether the first
// subresultant separated every fibre; it cannot when both curves are singular
// at a shared point.
inline std::optional<MultiplicityProfile> profile_attempt(const QPoly& f0, const QPoly& g0, const Transform& t) {
    const QPoly f = apply_transform(f0, t);
    const QPoly g = apply_transform(g0, t);
    const int d1 = f.total_degree();
    const int d2 = g.total_degree();
    Exponents ey{0, 0, 0};
    ey[1] = static_cast<Exponent>(d1);
    if (sgn(f.coefficient(ey)) == 0) return std::nullopt;
    ey[1] = static_cast<Exponent>(d2);
    if (sgn(g.coefficient(ey)) == 0) return std::nullopt;
    const QPoly fa = dehomogenize(f, 2);
    const QPoly ga = dehomogenize(g, 2);
    const QPoly res = resultant(fa, ga, 1);
    if (res.is_zero()) throw CommonComponentError("curves share a component");
    // Full degree means no intersection on the line at infinity.
    if (res.total_degree() != d1 * d2) return std::nullopt;
    // A nonvanishing first subresultant separates points with equal x.
    const QPoly s1 = principal_subresultant(fa, ga, 1, 1);
    MultiplicityProfile p;
    p.resolved = gcd_poly(squarefree_part(res, 0), s1).is_constant();
    p.degree_product = static_cast<unsigned>(d1 * d2);
    for (const auto& [factor, e] : squarefree_decompose(res)) {
        for (int k = 0; k < factor.total_degree(); ++k) p.multiplicities.push_back(e);
    }
    std::sort(p.multiplicities.begin(), p.multiplicities.end());
    return p;
}

}  // namespace detail

/// Intersection profile of two curves without a common component. Two
/// independent coordinate changes must agree; the result is `resolved` when
/// either of them separated all fibres.
inline MultiplicityProfile multiplicity_profile(const PlaneCurve& a, const PlaneCurve& b, std::mt19937_64& rng,
                                                unsigned retry_budget = 8) {
    if (!gcd_poly(a.poly(), b.poly()).is_constant()) throw CommonComponentError("curves share a component");
    std::optional<MultiplicityProfile> first;
    for (unsigned attempt = 0; attempt < retry_budget; ++attempt) {
        auto p = detail::profile_attempt(a.poly(), b.poly(), detail::random_transform(rng));
        if (!p) continue;
        if (!first) {
            first = std::move(p);
        } else if (*first == *p) {
            first->resolved = first->resolved || p->resolved;
            return *first;
        } else {
            first = std::move(p);
        }
    }
    throw GenericityError("no two agreeing generic coordinate changes within " + std::to_string(retry_budget) +
                          " attempts");
}

/// Restriction of a curve to a line: the multiplicities of the binary form
/// obtained by parametrizing the line.
inline MultiplicityProfile line_profile(const PlaneCurve& line, const PlaneCurve& curve) {
    if (line.degree() != 1) throw PreconditionError("line_profile needs a line");
    const QPoly& l = line.poly();
    const Rational a = l.coefficient({1, 0, 0});
    const Rational b = l.coefficient({0, 1, 0});
    const Rational c = l.coefficient({0, 0, 1});
    std::array<Rational, 3> p, q;
    if (sgn(c) != 0) {
        p = {c, 0, -a};
        q = {0, c, -b};
    } else if (sgn(b) != 0) {
        p = {b, -a, 0};
        q = {0, 0, 1};
    } else {
        p = {0, 1, 0};
        q = {0, 0, 1};
    }
    const Variables st{"s", "t"};
    const QPoly s = QPoly::variable(st, 0);
    const QPoly t = QPoly::variable(st, 1);
    std::vector<QPoly> images;
    for (std::size_t i = 0; i < 3; ++i) images.push_back(s.scaled(p[i]) + t.scaled(q[i]));
    const QPoly restricted = curve.poly().compose(images);
    if (restricted.is_zero()) throw CommonComponentError("the line is a component of the curve");
    MultiplicityProfile prof;
    prof.degree_product = static_cast<unsigned>(curve.degree());
    const QPoly affine = dehomogenize(restricted, 1);
    const int at_infinity = curve.degree() - std::max(affine.total_degree(), 0);
    if (at_infinity > 0) prof.multiplicities.push_back(static_cast<unsigned>(at_infinity));
    if (!affine.is_constant()) {
        for (const auto& [factor, e] : squarefree_decompose(affine)) {
            for (int k = 0; k < factor.total_degree(); ++k) prof.multiplicities.push_back(e);
        }
    }
    std::sort(prof.multiplicities.begin(), prof.multiplicities.end());
    prof.resolved = true;
    return prof;
}

/// True iff the line meets the sextic in exactly three points, each with multiplicity 2.
inline bool is_tritangent(const PlaneCurve& line, const PlaneCurve& sextic) {
    if (line.degree() != 1) throw PreconditionError("is_tritangent needs a line");
    if (sextic.degree() != 6) throw PreconditionError("is_tritangent needs a sextic");
    if (divides(line.poly(), sextic.poly())) throw CommonComponentError("the line is a component of the sextic");
    return line_profile(line, sextic).multiplicities == std::vector<unsigned>{2, 2, 2};
}

}  // namespace prymfib
