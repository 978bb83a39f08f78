#pragma once

// Discriminant curves of the quadric and conic bundles, and the type of the
// line L = P ∩ H.

#include <string>
#include <vector>

#include "prymfib/cubic/gram_cubic.hpp"

namespace prymfib {

/// The hyperplane t0 = l1(t1, t2) + l0(x, y, z).
struct HyperplaneSpec {
    std::array<Rational, 2> l1{Rational(0), Rational(0)};
    QPoly l0 = detail::plane_zero();

    static HyperplaneSpec t0_zero() { return {}; }

    void validate() const {
        if (l0.vars() != plane_variables()) throw PreconditionError("l0 must be a polynomial in x, y, z");
        if (!l0.is_zero() && (!l0.is_homogeneous() || l0.total_degree() != 1)) {
            throw PreconditionError("l0 must be zero or a linear form, got " + prymfib::to_string(l0));
        }
    }

    std::string to_string() const {
        const Variables tv{"t1", "t2"};
        QPoly rhs = QPoly::variable(tv, 0).scaled(l1[0]) + QPoly::variable(tv, 1).scaled(l1[1]);
        const Variables all{"t1", "t2", "x", "y", "z"};
        rhs = rhs.rebase(all) + l0.rebase(all);
        return "t0 = " + prymfib::to_string(rhs);
    }
};

/// Gram matrix (basis t1, t2, s) of the conic bundle form q(l1 + l0*s, t1, t2, s).
inline PolyMatrix<RationalField> restrict_hyperplane(const GramCubic& X, const HyperplaneSpec& H) {
    H.validate();
    const auto M = X.gram_matrix();
    const QPoly zero = detail::plane_zero();
    // Columns of S express (t0, t1, t2, s) in terms of (t1, t2, s).
    PolyMatrix<RationalField> S(4, 3, zero);
    S.set(0, 0, zero.constant_like(H.l1[0]));
    S.set(0, 1, zero.constant_like(H.l1[1]));
    S.set(0, 2, H.l0);
    S.set(1, 0, zero.constant_like(1));
    S.set(2, 1, zero.constant_like(1));
    S.set(3, 2, zero.constant_like(1));
    PolyMatrix<RationalField> G(3, 3, zero);
    for (std::size_t k = 0; k < 3; ++k) {
        for (std::size_t l = k; l < 3; ++l) {
            QPoly e = zero;
            for (std::size_t i = 0; i < 4; ++i) {
                if (S(i, k).is_zero()) continue;
                for (std::size_t j = 0; j < 4; ++j) {
                    if (!S(j, l).is_zero()) e += S(i, k) * M(i, j) * S(j, l);
                }
            }
            G.set(k, l, e);
            G.set(l, k, e);
        }
    }
    return G;
}

namespace detail {

inline PlaneCurve discriminant_curve(const QPoly& det, int degree, const std::string& what) {
    if (det.is_zero()) throw DegenerateError(what + " discriminant vanishes identically (degenerate bundle)");
    if (!det.is_homogeneous() || det.total_degree() != degree) {
        throw DegenerateError(what + " discriminant is not a form of degree " + std::to_string(degree));
    }
    return PlaneCurve(det, degree);
}

}  // namespace detail

/// det M_q: the sextic over which the quadric fibres degenerate.
inline PlaneCurve discriminant_sextic(const GramCubic& X) {
    return detail::discriminant_curve(determinant(X.gram_matrix()), 6, "quadric bundle");
}

/// Determinant of the restricted Gram matrix: the quintic of singular conics.
inline PlaneCurve discriminant_quintic(const GramCubic& X, const HyperplaneSpec& H) {
    return detail::discriminant_curve(determinant(restrict_hyperplane(X, H)), 5, "conic bundle");
}

/// Coordinates (x, y, z, t1, t2) on the hyperplane.
inline const Variables& section_variables() {
    static const Variables vars{"x", "y", "z", "t1", "t2"};
    return vars;
}

/// Equation of Y = X ∩ H in section_variables().
inline QPoly hyperplane_section_equation(const GramCubic& X, const HyperplaneSpec& H) {
    H.validate();
    const Variables& sv = section_variables();
    const QPoly t1 = QPoly::variable(sv, 3);
    const QPoly t2 = QPoly::variable(sv, 4);
    std::vector<QPoly> images{QPoly::variable(sv, 0), QPoly::variable(sv, 1), QPoly::variable(sv, 2),
                              t1.scaled(H.l1[0]) + t2.scaled(H.l1[1]) + H.l0.rebase(sv), t1, t2};
    return X.equation().compose(images);
}

/// One restricted partial derivative, expanded in (t1^2, t1*t2, t2^2).
struct RestrictedPartial {
    std::string variable;
    QPoly restriction;
    std::array<Rational, 3> coords;
};

struct LineTypeResult {
    bool first_type = false;
    std::size_t rank = 0;
    std::vector<RestrictedPartial> partials;
    /// Indices into `partials` of rows spanning the image.
    std::vector<std::size_t> witness;
    /// Rank obtained from the partials of the hyperplane section equation.
    std::size_t section_rank = 0;

    std::string witness_text() const {
        std::string out;
        for (std::size_t i : witness) {
            if (!out.empty()) out += ", ";
            out += "d/d" + partials[i].variable + " -> " + to_string(partials[i].restriction);
        }
        return out;
    }
};

namespace detail {

inline const Variables& line_variables() {
    static const Variables vars{"t1", "t2"};
    return vars;
}

// Restricts each partial of f to the line via `images` and ranks the result.
inline std::pair<std::vector<RestrictedPartial>, std::vector<std::size_t>> restricted_partials(
    const QPoly& f, const std::vector<QPoly>& images) {
    std::vector<RestrictedPartial> rows;
    std::vector<std::size_t> witness;
    std::vector<std::vector<Rational>> basis;
    const RationalField Q;
    for (std::size_t v = 0; v < f.vars().size(); ++v) {
        const QPoly r = f.derivative(v).compose(images);
        RestrictedPartial row{f.vars()[v], r, {r.coefficient({2, 0}), r.coefficient({1, 1}), r.coefficient({0, 2})}};
        if (!r.is_zero() && (!r.is_homogeneous() || r.total_degree() != 2)) {
            throw PreconditionError("restricted partial is not a quadratic form on the line");
        }
        auto trial = basis;
        trial.emplace_back(row.coords.begin(), row.coords.end());
        if (matrix_rank(trial, Q) > basis.size()) {
            basis = std::move(trial);
            witness.push_back(rows.size());
        }
        rows.push_back(std::move(row));
    }
    return {std::move(rows), std::move(witness)};
}

}  // namespace detail

/// Whether L = {x = y = z = 0, t0 = l1(t1, t2)} is of the first type: the six
/// partials of F restricted to L span all quadrics in (t1, t2).
inline LineTypeResult line_first_type(const GramCubic& X, const HyperplaneSpec& H) {
    H.validate();
    const Variables& lv = detail::line_variables();
    const QPoly t1 = QPoly::variable(lv, 0);
    const QPoly t2 = QPoly::variable(lv, 1);
    const QPoly zero(lv);
    const QPoly t0 = t1.scaled(H.l1[0]) + t2.scaled(H.l1[1]);
    LineTypeResult out;
    std::tie(out.partials, out.witness) = detail::restricted_partials(X.equation(), {zero, zero, zero, t0, t1, t2});
    out.rank = out.witness.size();
    out.first_type = out.rank == 3;
    const auto section = detail::restricted_partials(hyperplane_section_equation(X, H), {zero, zero, zero, t1, t2});
    out.section_rank = section.second.size();
    if (out.section_rank != out.rank) {
        throw Error("restricted partials of F and of F|H span different spaces");
    }
    return out;
}

}  // namespace prymfib
