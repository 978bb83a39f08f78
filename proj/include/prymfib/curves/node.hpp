#pragma once

// Singularities of the double plane branched along a sextic, above a point
// where another curve touches the sextic.

#include <optional>
#include <string>

#include "prymfib/curves/intersection.hpp"

namespace prymfib {

enum class NodeVerdict { OrdinaryNode, WorseSingularity, SmoothPreimage };

inline std::string to_string(NodeVerdict v) {
    switch (v) {
        case NodeVerdict::OrdinaryNode: return "ordinary-node";
        case NodeVerdict::WorseSingularity: return "worse-singularity";
        case NodeVerdict::SmoothPreimage: return "smooth-preimage";
    }
    return "?";
}

struct NodeCertificate {
    RationalPoint point;
    NodeVerdict verdict = NodeVerdict::SmoothPreimage;
    std::size_t chart = 2;
    /// Second-order jet coefficients of the branch sextic (a2) and of the
    /// curve (b2) along the common tangent; absent for transverse meetings.
    std::optional<Rational> a2;
    std::optional<Rational> b2;
    /// b2 - a2.
    std::optional<Rational> tangency;
    /// Tangent cone of the preimage in local coordinates (x, y, z) with
    /// z^2 = local sextic equation, e.g. "(y, z^2+x^2)".
    std::string tangent_cone;
    /// Local intersection number of the two curves at the point, for cross-checking.
    Multiplicity contact;
};

inline std::string tangent_cone_text(const Rational& c) {
    std::string out = "(y, z^2";
    if (sgn(c) < 0) {
        out += "-";
    } else {
        out += "+";
    }
    const Rational a = abs(c);
    if (a != 1) out += a.get_str() + "*";
    return out + "x^2)";
}

/// Certifies the singularity above q of the double cover branched along
/// `sextic`, where `curve` passes through q. Both curves must be smooth at q.
inline NodeCertificate certify_node_on_double_cover(const PlaneCurve& curve, const PlaneCurve& sextic,
                                                     const RationalPoint& q, unsigned jet_order = 8) {
    if (!q.lies_on(curve.poly())) throw PreconditionError("point " + q.to_string() + " is not on the curve");
    if (!q.lies_on(sextic.poly())) throw PreconditionError("point " + q.to_string() + " is not on the sextic");
    NodeCertificate cert{q, NodeVerdict::SmoothPreimage, q.chart(), {}, {}, {}, "", {}};
    const auto [u, v] = chart_coordinates(cert.chart);
    const QPoly f = localize(curve.poly(), q, cert.chart);
    const QPoly g = localize(sextic.poly(), q, cert.chart);
    cert.contact = local_intersection_number(f, g, u, v);

    const Rational fu = f.derivative(u).constant_term();
    const Rational fv = f.derivative(v).constant_term();
    const Rational gu = g.derivative(u).constant_term();
    const Rational gv = g.derivative(v).constant_term();
    if (sgn(fu) == 0 && sgn(fv) == 0) throw PreconditionError("the curve is singular at " + q.to_string());
    if (sgn(gu) == 0 && sgn(gv) == 0) throw PreconditionError("the sextic is singular at " + q.to_string());
    if (sgn(fu * gv - fv * gu) != 0) {
        cert.tangent_cone = "two smooth preimage points";
        return cert;
    }

    // New coordinates (X, Y) = (u, gu*u + gv*v) or (v, gu*u) so that the
    // common tangent becomes Y = 0.
    const QPoly X = f.variable_like(u);
    const QPoly Y = f.variable_like(v);
    std::vector<QPoly> images(3, f.zero_like());
    if (sgn(gv) != 0) {
        images[u] = X;
        images[v] = (Y - X.scaled(gu)).scaled(1 / gv);
    } else {
        images[v] = X;
        images[u] = Y.scaled(1 / gu);
    }
    const QPoly ft = f.compose(images);
    const QPoly gt = g.compose(images);
    const auto branch_sextic = implicit_jet(gt, u, v, jet_order);
    const auto branch_curve = implicit_jet(ft, u, v, jet_order);
    cert.a2 = branch_sextic[2];
    cert.b2 = branch_curve[2];
    cert.tangency = *cert.b2 - *cert.a2;
    if (sgn(*cert.tangency) != 0) {
        cert.verdict = NodeVerdict::OrdinaryNode;
        cert.tangent_cone = tangent_cone_text(*cert.tangency);
    } else {
        cert.verdict = NodeVerdict::WorseSingularity;
        cert.tangent_cone = "(y, z^2) up to order 2";
    }
    return cert;
}

}  // namespace prymfib
