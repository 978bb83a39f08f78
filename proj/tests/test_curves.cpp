#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "prymfib/curves.hpp"

using namespace prymfib;

namespace {

const Variables& V() { return plane_variables(); }
QPoly P(const char* text) { return parse_polynomial(text, V()); }
PlaneCurve C(const char* text) { return PlaneCurve::parse(text); }

// Random affine polynomial through the origin with optional structure.
QPoly random_germ(std::mt19937_64& rng, int kind) {
    QPoly f = oracle::random_poly(V(), 4, rng, 6, 4);
    // drop z so that the germ lives in (x, y)
    f = f.substitute(2, P("0"));
    f -= f.constant_like(f.constant_term());
    if (kind == 1) {
        // kill the linear part: singular germ
        f -= f.constant_like(0) + P("x").scaled(f.coefficient({1, 0, 0})) + P("y").scaled(f.coefficient({0, 1, 0}));
    } else if (kind == 2) {
        // force tangent line y = 0
        f -= P("x").scaled(f.coefficient({1, 0, 0}));
    }
    return f;
}

}  // namespace

TEST(PlaneCurve, Validation) {
    EXPECT_THROW(C("x^2+y"), PreconditionError);
    EXPECT_THROW(C("0"), PreconditionError);
    EXPECT_THROW(PlaneCurve(P("x^2"), 3), PreconditionError);
    EXPECT_THROW(RationalPoint(0, 0, 0), PreconditionError);
    RationalPoint p(0, 2, 4);
    EXPECT_EQ(p.to_string(), "(0:1:2)");
}

TEST(Smoothness, FermatAndTwoLines) {
    EXPECT_TRUE(is_smooth(C("x^3+y^3+z^3")).smooth);
    const auto r = is_smooth(C("x*y"));
    EXPECT_FALSE(r.smooth);
    ASSERT_EQ(r.singular.points.size(), 1u);
    EXPECT_EQ(r.singular.points[0], RationalPoint(0, 0, 1));
    EXPECT_TRUE(r.eliminant.has_value());
    EXPECT_NE(r.witness.find("(0:0:1)"), std::string::npos);
    EXPECT_TRUE(is_smooth(C("x+2*y")).smooth);
}

TEST(Smoothness, IrrationalSingularitiesStillDetected) {
    // node at (sqrt2 : 0 : 1) and its conjugate: (x^2-2z^2)^2 + y^2 z^2 singular, no rational singular point
    const auto r = is_smooth(C("(x^2-2*z^2)^2 + y^2*z^2"));
    EXPECT_FALSE(r.smooth);
    for (const auto& p : r.singular.points) EXPECT_TRUE(p.lies_on(P("(x^2-2*z^2)^2 + y^2*z^2")));
    EXPECT_FALSE(r.singular.exhaustive);
}

TEST(Smoothness, MultipleComponent) {
    const auto r = is_smooth(C("(x+y)^2*z"));
    EXPECT_FALSE(r.smooth);
    EXPECT_TRUE(r.singular.along_component);
}

TEST(SingularPoints, CoordinateTriangle) {
    const auto s = rational_singular_points(C("x*y*z"));
    ASSERT_EQ(s.points.size(), 3u);
    EXPECT_TRUE(s.exhaustive);
    std::vector<RationalPoint> want{RationalPoint(0, 0, 1), RationalPoint(0, 1, 0), RationalPoint(1, 0, 0)};
    EXPECT_EQ(s.points, want);
}

TEST(SingularPoints, ConicAndCusp) {
    const auto conic = rational_singular_points(C("x^2+y^2-z^2"));
    EXPECT_TRUE(conic.points.empty());
    EXPECT_TRUE(conic.exhaustive);
    const auto cusp = rational_singular_points(C("y^2*z-x^3"));
    ASSERT_EQ(cusp.points.size(), 1u);
    EXPECT_EQ(cusp.points[0], RationalPoint(0, 0, 1));
    EXPECT_TRUE(cusp.exhaustive);
}

TEST(SmoothnessVsFiniteFields, AgreesWithExhaustiveSearch) {
    std::mt19937_64 rng(101);
    int smooth_seen = 0, singular_seen = 0;
    for (int i = 0; i < 24; ++i) {
        const unsigned d = 3 + i % 2;
        QPoly f = oracle::random_form(V(), d, rng, 6, 3);
        if (i % 3 == 0) {
            // plant a singular point at (1 : -1 : 2) by taking a curve through it with zero gradient
            const QPoly a = P("x+y");
            const QPoly b = P("2*x-z");
            f = a * a * oracle::random_form(V(), d - 2, rng, 3, 3) + a * b * oracle::random_form(V(), d - 2, rng, 3, 3) +
                b * b * oracle::random_form(V(), d - 2, rng, 3, 3);
        }
        if (f.is_zero()) continue;
        const PlaneCurve c(f);
        const auto r = is_smooth(c);
        if (r.smooth) {
            ++smooth_seen;
            int good = 0;
            for (std::uint64_t p : {101ULL, 103ULL, 107ULL, 109ULL, 113ULL, 127ULL}) {
                const PrimeField fp(p);
                std::vector<FpPoly> parts;
                for (const auto& d1 : c.partials()) parts.push_back(reduce_mod(d1, fp));
                if (!forms_have_no_common_zero(parts)) continue;
                ++good;
                EXPECT_TRUE(oracle::fp_singular_points(f, p).empty()) << to_string(f) << " p=" << p;
                if (good == 3) break;
            }
            EXPECT_EQ(good, 3);
        } else if (!r.singular.points.empty()) {
            ++singular_seen;
            for (std::uint64_t p : {101ULL, 103ULL, 107ULL}) {
                EXPECT_FALSE(oracle::fp_singular_points(f, p).empty()) << to_string(f) << " p=" << p;
            }
        }
    }
    EXPECT_GE(smooth_seen, 5);
    EXPECT_GE(singular_seen, 5);
}

TEST(Fulton, HandExamples) {
    EXPECT_EQ(fulton_multiplicity(P("x"), P("y"), RationalPoint(0, 0, 1)), Multiplicity::finite(1));
    EXPECT_EQ(fulton_multiplicity(P("y*z-x^2"), P("y*z+x^2"), RationalPoint(0, 0, 1)), Multiplicity::finite(2));
    EXPECT_EQ(fulton_multiplicity(P("y^2*z-x^3"), P("y"), RationalPoint(0, 0, 1)), Multiplicity::finite(3));
    EXPECT_EQ(fulton_multiplicity(P("x*y"), P("x*z"), RationalPoint(0, 0, 1)), Multiplicity::infinity());
    EXPECT_EQ(fulton_multiplicity(P("x"), P("y"), RationalPoint(1, 1, 1)), Multiplicity::finite(0));
    // shared component away from the point does not matter
    EXPECT_EQ(fulton_multiplicity(P("(x-z)*y"), P("(x-z)*(y*z-x^2)"), RationalPoint(0, 0, 1)), Multiplicity::finite(2));
}

TEST(Fulton, MatchesJetAlgebraOracle) {
    std::mt19937_64 rng(2024);
    int kept = 0;
    for (int trial = 0; trial < 600 && kept < 120; ++trial) {
        QPoly f = random_germ(rng, trial % 3);
        QPoly g = random_germ(rng, (trial / 3) % 3);
        if (f.is_zero() || g.is_zero()) continue;
        const auto ref = oracle::local_algebra_dimension(f, g, 0, 1);
        if (!ref || *ref > 8) continue;
        EXPECT_EQ(local_intersection_number(f, g, 0, 1), Multiplicity::finite(*ref)) << to_string(f) << " , " << to_string(g);
        ++kept;
    }
    EXPECT_GE(kept, 100);
}

TEST(Fulton, SymmetryAdditivityInvariance) {
    std::mt19937_64 rng(77);
    for (int i = 0; i < 40; ++i) {
        QPoly f = random_germ(rng, i % 3);
        QPoly g = random_germ(rng, 0);
        QPoly h = random_germ(rng, 0);
        if (f.is_zero() || g.is_zero() || h.is_zero()) continue;
        if (!gcd_poly(f, g * h).is_constant()) continue;
        const auto fg = local_intersection_number(f, g, 0, 1);
        EXPECT_EQ(fg, local_intersection_number(g, f, 0, 1));
        const auto fh = local_intersection_number(f, h, 0, 1);
        const auto fgh = local_intersection_number(f, g * h, 0, 1);
        EXPECT_EQ(fgh.value, fg.value + fh.value);
        // linear change fixing the origin: x -> 2x + y, y -> x - y
        std::vector<QPoly> images{P("2*x+y"), P("x-y"), P("z")};
        EXPECT_EQ(local_intersection_number(f.compose(images), g.compose(images), 0, 1), fg);
    }
}

TEST(Profile, SimpleCases) {
    std::mt19937_64 rng(1);
    const auto lines = multiplicity_profile(C("x"), C("y"), rng);
    EXPECT_EQ(lines.multiplicities, std::vector<unsigned>{1});
    EXPECT_EQ(lines.total(), 1u);
    const auto tangent = multiplicity_profile(C("y"), C("y*z-x^2"), rng);
    EXPECT_EQ(tangent.multiplicities, std::vector<unsigned>{2});
    EXPECT_EQ(fulton_multiplicity(P("y"), P("y*z-x^2"), RationalPoint(0, 0, 1)), Multiplicity::finite(2));
    EXPECT_THROW(multiplicity_profile(C("x*y"), C("x*z"), rng), CommonComponentError);
}

TEST(Profile, BezoutOnRandomPairs) {
    std::mt19937_64 rng(4242);
    int done = 0;
    for (int i = 0; i < 60 && done < 12; ++i) {
        const unsigned d1 = 1 + i % 4;
        const unsigned d2 = 2 + (i * 7) % 4;
        PlaneCurve a(oracle::random_form(V(), d1, rng, 5, 3));
        PlaneCurve b(oracle::random_form(V(), d2, rng, 5, 3));
        if (!gcd_poly(a.poly(), b.poly()).is_constant()) continue;
        const auto p = multiplicity_profile(a, b, rng);
        EXPECT_EQ(p.total(), d1 * d2);
        EXPECT_EQ(p.degree_product, d1 * d2);
        ++done;
    }
    EXPECT_EQ(done, 12);
}

TEST(Profile, TangencyAtRationalPointsMatchesFulton) {
    std::mt19937_64 rng(8);
    // conic tangent to a cubic at (0:0:1), transverse elsewhere
    const PlaneCurve a = C("y*z-x^2");
    const PlaneCurve b = C("y*z^2-x^2*z+x^3+y^3");
    const auto p = multiplicity_profile(a, b, rng);
    EXPECT_EQ(p.total(), 6u);
    EXPECT_EQ(p.max(), fulton_multiplicity(a, b, RationalPoint(0, 0, 1)).value);
}

TEST(Tritangent, Cases) {
    EXPECT_FALSE(is_tritangent(C("x+2*y+3*z"), C("x^6+y^6+z^6")));
    EXPECT_EQ(line_profile(C("x+2*y+3*z"), C("x^6+y^6+z^6")).multiplicities, std::vector<unsigned>(6, 1));
    const auto sextic = C("(x*(x-z)*(x-2*z))^2 + y*(x^5+y^5+z^5)");
    EXPECT_TRUE(is_tritangent(C("y"), sextic));
    std::mt19937_64 rng(3);
    EXPECT_EQ(multiplicity_profile(C("y"), sextic, rng).multiplicities, (std::vector<unsigned>{2, 2, 2}));
    const auto six = C("(x-z)*(x-2*z)*(x-3*z)*(x-4*z)*(x-5*z)*(x-6*z) + y*z^5");
    EXPECT_FALSE(is_tritangent(C("y"), six));
    EXPECT_THROW(is_tritangent(C("y"), C("y*(x^5+z^5)")), CommonComponentError);
}

TEST(Node, OrdinaryWorseAndTransverse) {
    const auto sextic = C("y*z^5 - x^2*z^4 + x^6");  // locally y = x^2 - x^6
    const auto conic2 = C("y*z - 2*x^2");             // locally y = 2x^2
    const auto node = certify_node_on_double_cover(conic2, sextic, RationalPoint(0, 0, 1));
    EXPECT_EQ(node.verdict, NodeVerdict::OrdinaryNode);
    EXPECT_EQ(*node.tangency, 1);
    EXPECT_EQ(node.tangent_cone, "(y, z^2+x^2)");
    EXPECT_EQ(node.contact, Multiplicity::finite(2));

    const auto worse = certify_node_on_double_cover(C("y*z - x^2"), sextic, RationalPoint(0, 0, 1));
    EXPECT_EQ(worse.verdict, NodeVerdict::WorseSingularity);
    EXPECT_GT(worse.contact.value, 2u);

    const auto transverse = certify_node_on_double_cover(C("x"), sextic, RationalPoint(0, 0, 1));
    EXPECT_EQ(transverse.verdict, NodeVerdict::SmoothPreimage);
    EXPECT_EQ(transverse.contact, Multiplicity::finite(1));

    EXPECT_THROW(certify_node_on_double_cover(C("x-z"), sextic, RationalPoint(0, 0, 1)), PreconditionError);
    EXPECT_THROW(certify_node_on_double_cover(C("y^2*z-x^3"), C("y*z^5-x^6"), RationalPoint(0, 0, 1)),
                 PreconditionError);
}

TEST(Node, VerdictMatchesContactOnRandomTangencies) {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 30; ++i) {
        // both curves tangent to y = 0 at the origin of the chart z = 1
        const Rational a2(static_cast<long>(rng() % 5) - 2);
        const Rational b2 = (i % 3 == 0) ? a2 : Rational(static_cast<long>(rng() % 5) - 2);
        QPoly s = P("y*z^5") - P("x^2*z^4").scaled(a2) + oracle::random_form(V(), 3, rng, 3, 3) * P("x^3");
        QPoly c = P("y*z^2") - P("x^2*z").scaled(b2) + P("x^3").scaled(Rational(static_cast<long>(rng() % 3)));
        if (s.total_degree() != 6) continue;
        const PlaneCurve sextic(s), curve(c);
        const auto cert = certify_node_on_double_cover(curve, sextic, RationalPoint(0, 0, 1));
        EXPECT_EQ(cert.verdict == NodeVerdict::OrdinaryNode, cert.contact == Multiplicity::finite(2));
        EXPECT_EQ(cert.verdict == NodeVerdict::OrdinaryNode, a2 != b2);
    }
}
