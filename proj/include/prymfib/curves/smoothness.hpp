#pragma once

// Jacobian criterion for plane curves over the algebraic closure, with
// elimination witnesses and rational singular points.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "prymfib/curves/plane_curve.hpp"

namespace prymfib {

/// Polynomial in `keep` alone whose roots contain the `keep`-coordinate of
/// every common zero of `polys` (which involve only `keep` and `drop`).
/// Zero when elimination cannot isolate finitely many values.
inline QPoly eliminant(const std::vector<QPoly>& polys, std::size_t drop) {
    std::vector<QPoly> dep;
    QPoly e = polys.front().zero_like();
    for (const auto& p : polys) {
        if (p.is_zero()) continue;
        if (p.depends_on(drop)) {
            dep.push_back(p);
        } else {
            e = gcd_poly(e, p);
        }
    }
    bool found = false;
    for (std::size_t i = 0; i < dep.size(); ++i) {
        for (std::size_t j = i + 1; j < dep.size(); ++j) {
            const auto r = resultant(dep[i], dep[j], drop);
            if (r.is_zero()) continue;
            e = gcd_poly(e, r);
            found = true;
        }
    }
    // Pairwise common factors: a generic combination of the others separates them.
    if (!found && dep.size() >= 3) {
        for (int lambda = 1; lambda <= 64 && !found; ++lambda) {
            const auto r = resultant(dep[0], dep[1] + dep[2].scaled(Rational(lambda)), drop);
            if (r.is_zero()) continue;
            e = gcd_poly(e, r);
            found = true;
        }
    }
    return e;
}

struct SingularPointSearch {
    std::vector<RationalPoint> points;
    /// Elimination proved there are no singular points beyond `points`.
    bool exhaustive = false;
    /// The curve is singular along a whole component (multiple component).
    bool along_component = false;
    /// Common factor of the partials when `along_component`.
    std::optional<QPoly> common_factor;
};

namespace detail {

inline bool splits_over_q(const QPoly& univariate, std::size_t roots_found) {
    if (univariate.is_constant()) return true;
    const auto sf = squarefree_part(univariate, univariate.support().front());
    return static_cast<std::size_t>(sf.total_degree()) == roots_found;
}

inline QPoly partials_gcd(const PlaneCurve& c) {
    QPoly g = c.poly().zero_like();
    for (const auto& d : c.partials()) g = gcd_poly(g, d);
    return g;
}

struct ChartElimination {
    std::size_t chart;
    QPoly eliminant;
};

// Affine partials on the chart {chart = 1}.
inline std::vector<QPoly> chart_partials(const PlaneCurve& c, std::size_t chart) {
    std::vector<QPoly> out;
    for (const auto& d : c.partials()) out.push_back(dehomogenize(d, chart));
    return out;
}

}  // namespace detail

/// All rational singular points of C (common zeros of the three partials).
inline SingularPointSearch rational_singular_points(const PlaneCurve& c) {
    SingularPointSearch out;
    const QPoly g = detail::partials_gcd(c);
    if (!g.is_constant()) {
        out.along_component = true;
        out.common_factor = g;
        return out;
    }
    bool exhaustive = true;
    std::vector<RationalPoint> found;
    for (std::size_t chart : {2u, 1u, 0u}) {
        const auto gs = detail::chart_partials(c, chart);
        const auto [u, v] = chart_coordinates(chart);
        const QPoly eu = eliminant(gs, v);
        if (eu.is_zero()) {
            exhaustive = false;
            continue;
        }
        if (eu.is_constant()) continue;
        const auto us = rational_roots(eu);
        if (!detail::splits_over_q(eu, us.size())) exhaustive = false;
        for (const auto& u0 : us) {
            QPoly h = eu.zero_like();
            for (const auto& gi : gs) h = gcd_poly(h, gi.substitute(u, eu.constant_like(u0)));
            if (h.is_zero()) {
                exhaustive = false;  // a whole line u = u0 would be singular
                continue;
            }
            if (h.is_constant()) continue;
            const auto vs = rational_roots(h);
            if (!detail::splits_over_q(h, vs.size())) exhaustive = false;
            for (const auto& v0 : vs) {
                std::array<Rational, 3> p;
                p[chart] = 1;
                p[u] = u0;
                p[v] = v0;
                found.emplace_back(p[0], p[1], p[2]);
            }
        }
    }
    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    out.points = std::move(found);
    out.exhaustive = exhaustive;
    return out;
}

struct SmoothnessResult {
    bool smooth = false;
    /// Chart {coordinate = 1} whose eliminant certifies a common root, if singular.
    std::optional<std::size_t> chart;
    std::optional<QPoly> eliminant;
    SingularPointSearch singular;
    std::string witness;
};

inline std::string chart_name(std::size_t chart) {
    static const char* names[] = {"x=1", "y=1", "z=1"};
    return names[chart];
}

/// Jacobian criterion over the algebraic closure. The verdict comes from the
/// Macaulay test on the three partials; a failing curve also gets an
/// elimination witness and its rational singular points.
inline SmoothnessResult is_smooth(const PlaneCurve& c) {
    SmoothnessResult r;
    const auto parts = c.partials();
    r.smooth = forms_have_no_common_zero(std::vector<QPoly>(parts.begin(), parts.end()));
    if (r.smooth) {
        r.singular.exhaustive = true;
        return r;
    }
    r.singular = rational_singular_points(c);
    if (r.singular.along_component) {
        r.witness = "partials share the factor " + to_string(*r.singular.common_factor) +
                    " (singular along a multiple component)";
        return r;
    }
    for (std::size_t chart : {2u, 1u, 0u}) {
        const auto gs = detail::chart_partials(c, chart);
        const QPoly e = eliminant(gs, chart_coordinates(chart)[1]);
        if (!e.is_zero() && !e.is_constant()) {
            r.chart = chart;
            r.eliminant = e;
            break;
        }
    }
    std::string w = "partials have a common zero";
    if (r.chart) w += "; chart " + chart_name(*r.chart) + " eliminant " + to_string(*r.eliminant);
    if (!r.singular.points.empty()) {
        w += "; rational singular point(s)";
        for (const auto& p : r.singular.points) w += " " + p.to_string();
    } else {
        w += "; no rational singular point";
    }
    r.witness = w;
    return r;
}

}  // namespace prymfib
