#pragma once

// Projective plane curves over Q and rational points of the plane.

#include <array>
#include <string>

#include "prymfib/poly.hpp"

namespace prymfib {

/// The standard coordinates (x, y, z) of the projective plane.
inline const Variables& plane_variables() {
    static const Variables vars{"x", "y", "z"};
    return vars;
}

/// Zero locus of a nonzero form in three variables.
class PlaneCurve {
public:
    explicit PlaneCurve(QPoly f) : f_(std::move(f)) {
        if (f_.vars().size() != 3) throw PreconditionError("a plane curve needs a three-variable context");
        if (f_.is_zero()) throw PreconditionError("a plane curve needs a nonzero polynomial");
        if (!f_.is_homogeneous()) throw PreconditionError("plane curve polynomial is not homogeneous");
        if (f_.total_degree() < 1) throw PreconditionError("a plane curve has positive degree");
    }
    PlaneCurve(QPoly f, int declared_degree) : PlaneCurve(std::move(f)) {
        if (f_.total_degree() != declared_degree) {
            throw PreconditionError("plane curve has degree " + std::to_string(f_.total_degree()) + ", expected " +
                                    std::to_string(declared_degree));
        }
    }
    static PlaneCurve parse(std::string_view text) { return PlaneCurve(parse_polynomial(text, plane_variables())); }

    const QPoly& poly() const noexcept { return f_; }
    int degree() const { return f_.total_degree(); }
    std::array<QPoly, 3> partials() const { return {f_.derivative(0), f_.derivative(1), f_.derivative(2)}; }

    bool operator==(const PlaneCurve& o) const { return f_ == o.f_; }

private:
    QPoly f_;
};

/// A point of the projective plane with rational coordinates, stored with
/// its first nonzero coordinate equal to 1.
class RationalPoint {
public:
    RationalPoint(Rational x, Rational y, Rational z) : c_{std::move(x), std::move(y), std::move(z)} {
        std::size_t lead = 0;
        while (lead < 3 && sgn(c_[lead]) == 0) ++lead;
        if (lead == 3) throw PreconditionError("projective point with all coordinates zero");
        const Rational s = c_[lead];
        for (auto& v : c_) v /= s;
    }

    const Rational& operator[](std::size_t i) const { return c_.at(i); }
    const std::array<Rational, 3>& coords() const noexcept { return c_; }

    bool operator==(const RationalPoint& o) const { return c_ == o.c_; }
    bool operator<(const RationalPoint& o) const { return c_ < o.c_; }

    /// Index of the chart {coordinate = 1} used for local computations.
    std::size_t chart() const {
        for (std::size_t i = 3; i-- > 0;) {
            if (sgn(c_[i]) != 0) return i;
        }
        return 0;
    }

    std::string to_string() const {
        return "(" + c_[0].get_str() + ":" + c_[1].get_str() + ":" + c_[2].get_str() + ")";
    }

    bool lies_on(const QPoly& f) const { return sgn(f.evaluate(c_)) == 0; }

private:
    std::array<Rational, 3> c_;
};

/// f restricted to the chart {c = 1} around p, translated so that p is the
/// origin. The chart variable no longer occurs; the other two keep their indices.
inline QPoly localize(const QPoly& f, const RationalPoint& p, std::size_t chart) {
    if (sgn(p[chart]) == 0) throw PreconditionError("point is not in the requested chart");
    std::vector<QPoly> images;
    for (std::size_t i = 0; i < 3; ++i) {
        if (i == chart) {
            images.push_back(f.constant_like(1));
        } else {
            images.push_back(f.variable_like(i) + f.constant_like(p[i] / p[chart]));
        }
    }
    return f.compose(images);
}

/// The two affine coordinates of a chart, in increasing index order.
inline std::array<std::size_t, 2> chart_coordinates(std::size_t chart) {
    switch (chart) {
        case 0: return {1, 2};
        case 1: return {0, 2};
        default: return {0, 1};
    }
}

}  // namespace prymfib
