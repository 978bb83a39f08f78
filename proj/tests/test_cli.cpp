#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "prymfib/cli/commands.hpp"

using namespace prymfib;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    EXPECT_TRUE(in) << path;
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string sample(const std::string& name) { return std::string(PRYMFIB_SOURCE_DIR) + "/samples/" + name; }
std::string golden(const std::string& name) { return std::string(PRYMFIB_SOURCE_DIR) + "/tests/golden/" + name; }

InputDocument parse(const std::string& text) { return parse_input_document(text, "test"); }

std::string value(const CommandOutput& out, const std::string& key) {
    const std::string* v = out.report.find(key);
    EXPECT_NE(v, nullptr) << key;
    return v ? *v : "";
}

// Runs the tool and returns its exit status; stdout goes to `captured`.
int run_tool(const std::string& args, std::string* captured = nullptr) {
    const std::string out_path = ::testing::TempDir() + "prymfib_cli_out.txt";
    const std::string cmd = std::string(PRYMFIB_CLI_PATH) + " " + args + " > " + out_path + " 2>&1";
    const int status = std::system(cmd.c_str());
    if (captured) *captured = read_file(out_path);
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

const char* kCoefficients = R"([cubic]
a00 = "x"
a01 = "0"
a02 = "0"
a11 = "y"
a12 = "0"
a22 = "z"
b0 = "0"
b1 = "0"
b2 = "0"
c = "x^3+y^3+z^3"
)";

void expect_input_error(const std::string& text, std::size_t line, std::size_t column) {
    try {
        parse(text);
        ADD_FAILURE() << "no error for:\n" << text;
    } catch (const InputError& e) {
        EXPECT_EQ(e.line(), line) << e.what();
        EXPECT_EQ(e.column(), column) << e.what();
    }
}

}  // namespace

TEST(InputDocument, ThreeCubicForms) {
    const auto a = parse(kCoefficients);
    EXPECT_EQ(a.cubic.equation(),
              parse_polynomial("x*t0^2+y*t1^2+z*t2^2+x^3+y^3+z^3", fourfold_variables()));
    const auto b = parse("[cubic]\nequation = \"x*t0^2+y*t1^2+z*t2^2+x^3+y^3+z^3\"\n");
    EXPECT_EQ(a.cubic, b.cubic);
    const auto c = parse(R"([cubic]
g00 = "2*x"
g01 = "0"
g02 = "0"
g03 = "0"
g11 = "2*y"
g12 = "0"
g13 = "0"
g22 = "2*z"
g23 = "0"
g33 = "2*x^3+2*y^3+2*z^3"
)");
    EXPECT_EQ(a.cubic, c.cubic);
    EXPECT_FALSE(a.hyperplane.has_value());
    EXPECT_EQ(a.seed, 0u);
    EXPECT_EQ(a.primes, default_probe_primes());
}

TEST(InputDocument, OptionalSections) {
    const auto d = parse(std::string(kCoefficients) + R"(
[hyperplane]
l1 = "2*t1-t2"   # t0 = 2 t1 - t2 + x
l0 = "x"
[lines]
line = "x+y"
line = "z"
[options]
primes = "13, 17"
seed = 42
)");
    ASSERT_TRUE(d.hyperplane.has_value());
    EXPECT_EQ(d.hyperplane->l1[0], 2);
    EXPECT_EQ(d.hyperplane->l1[1], -1);
    EXPECT_EQ(d.hyperplane->l0, parse_polynomial("x", plane_variables()));
    ASSERT_EQ(d.lines.size(), 2u);
    EXPECT_EQ(d.lines[1], PlaneCurve::parse("z"));
    EXPECT_EQ(d.primes, (std::vector<std::uint64_t>{13, 17}));
    EXPECT_EQ(d.seed, 42u);
}

TEST(InputDocument, ErrorPositions) {
    // value starts after the opening quote in column 13; the parser stops at offset 2
    expect_input_error("[cubic]\nequation = \"x^^3\"\n", 2, 15);
    expect_input_error("[cubic]\nequation = \"x*t1^2+y*t2^2+\"\n", 2, 27);
    expect_input_error("[cubes]\n", 1, 2);
    expect_input_error("a00 = \"x\"\n", 1, 1);
    expect_input_error("[cubic]\n  a00 \"x\"\n", 2, 3);
    expect_input_error("[cubic]\nc = \"x^3\n", 2, 5);
    expect_input_error("[cubic]\nc = \"x^3\"\nc = \"y^3\"\n", 3, 1);
    expect_input_error("[cubic]\nfoo = \"x\"\nc = \"x^3\"\n", 2, 1);
    expect_input_error("[options]\nseed = 1\n", 1, 1);
    expect_input_error(std::string(kCoefficients) + "[options]\nseed = -3\n", 13, 8);
    expect_input_error(std::string(kCoefficients) + "[options]\nprimes = \"7,,11\"\n", 13, 13);
    expect_input_error(std::string(kCoefficients) + "[hyperplane]\nl1 = \"t1^2\"\n", 13, 7);
    expect_input_error(std::string(kCoefficients) + "[lines]\nline = \"x^2\"\n", 13, 9);
}

TEST(InputDocument, ValidationErrors) {
    // wrong degree for a00 is reported at the first coefficient
    std::string bad = kCoefficients;
    bad.replace(bad.find("a00 = \"x\""), 9, "a00 = \"x^2\"");
    EXPECT_THROW(parse(bad), InputError);
    // missing coefficient
    std::string missing = kCoefficients;
    missing.erase(missing.find("c = "));
    EXPECT_THROW(parse(missing), InputError);
    // mixing forms
    EXPECT_THROW(parse(std::string(kCoefficients) + "equation = \"x^3\"\n"), InputError);
    // terms cubic in the fibre variables
    EXPECT_THROW(parse("[cubic]\nequation = \"t0^3\"\n"), InputError);
    EXPECT_THROW(parse("# nothing\n"), InputError);
}

TEST(Builtins, SamplesMatchBuiltinDocuments) {
    ASSERT_EQ(builtin_examples().size(), 3u);
    for (const auto& e : builtin_examples()) {
        EXPECT_EQ(read_file(sample(e.id + ".txt")), e.document) << e.id;
        EXPECT_NO_THROW(builtin_document(e.id)) << e.id;
    }
    EXPECT_THROW(find_builtin("nope"), PreconditionError);
}

TEST(Discriminant, TangentPair) {
    const auto out = run_discriminant(builtin_document("tangent-pair"));
    EXPECT_EQ(value(out, "dh.factored"), "x*y*(x^3+y^3+z^3)");
    EXPECT_EQ(value(out, "dh.degree"), "5");
    EXPECT_EQ(value(out, "d6.degree"), "6");
    EXPECT_EQ(value(out, "gcd.degree"), "0");
    EXPECT_NE(out.human.find("D_H = x*y*(x^3+y^3+z^3)"), std::string::npos);
}

TEST(Discriminant, SmoothQuinticDegree) {
    const auto out = run_discriminant(builtin_document("smooth-quintic"));
    EXPECT_EQ(value(out, "dh.degree"), "5");
    EXPECT_EQ(out.report.find("condition.iii.D_H_smooth"), nullptr);
}

TEST(Discriminant, ZeroMatrixIsDegenerate) {
    EXPECT_THROW(run_discriminant(parse(read_file(sample("zero-matrix.txt")))), DegenerateError);
}

TEST(Check, BuiltinExamples) {
    const auto tp = run_example("tangent-pair");
    EXPECT_EQ(value(tp, "condition.iv"), "pass");
    EXPECT_EQ(value(tp, "profile"), "2×15");
    EXPECT_EQ(value(tp, "profile.total"), "30");
    const auto ft = run_example("first-type-line");
    EXPECT_EQ(value(ft, "condition.iii.L_first_type"), "pass");
    EXPECT_EQ(value(ft, "line_type.rank"), "3");
    const auto sq = run_example("smooth-quintic");
    EXPECT_EQ(value(sq, "condition.iii.D_H_smooth"), "pass");
    for (const auto* out : {&tp, &ft, &sq}) EXPECT_EQ(out->exit_code, kExitCheckFailed);
}

TEST(Check, GeneralCubicPasses) {
    const auto out = run_check(parse(read_file(sample("general-cubic.txt"))));
    EXPECT_EQ(value(out, "overall"), "pass");
    EXPECT_EQ(value(out, "condition.ii"), "pass");
    EXPECT_EQ(out.exit_code, kExitOk);
}

TEST(Check, NeedsHyperplane) { EXPECT_THROW(run_check(parse(kCoefficients)), PreconditionError); }

TEST(Check, DeterministicAndSeedEchoed) {
    const auto doc = builtin_document("tangent-pair");
    const auto a = run_check(doc).report.render();
    EXPECT_EQ(a, run_check(doc).report.render());
    EXPECT_NE(a.find("\nseed = 0\n"), std::string::npos);
    auto seeded = doc;
    seeded.seed = 17;
    const auto b = run_check(seeded);
    EXPECT_EQ(value(b, "seed"), "17");
    EXPECT_EQ(value(b, "profile"), "2×15");
    // timing lines only on request
    EXPECT_EQ(a.find(".seconds"), std::string::npos);
    RunSettings t;
    t.timing = true;
    EXPECT_NE(run_check(doc, t).report.render().find(".seconds = "), std::string::npos);
}

TEST(Check, ExitCodeMapping) {
    EXPECT_EQ(detail::exit_code_for(Verdict::Pass), kExitOk);
    EXPECT_EQ(detail::exit_code_for(Verdict::ProbabilisticPass), kExitOk);
    EXPECT_EQ(detail::exit_code_for(Verdict::Skipped), kExitOk);
    EXPECT_EQ(detail::exit_code_for(Verdict::Fail), kExitCheckFailed);
    EXPECT_EQ(detail::exit_code_for(Verdict::Inconclusive), kExitInconclusive);
}

TEST(Report, RenderingIsLineOriented) {
    Report r;
    r.add("a", "one\ntwo");
    r.add("b", 3);
    EXPECT_EQ(r.render(), "#report\na = one two\nb = 3\n#end\n");
}

TEST(Golden, Reports) {
    EXPECT_EQ(run_example("tangent-pair").report.render(), read_file(golden("tangent-pair.report")));
    EXPECT_EQ(run_dimensions(5).report.render(), read_file(golden("dimensions-k5.report")));
    EXPECT_EQ(run_strata(4, 3).report.render(), read_file(golden("strata-4-3.report")));
}

TEST(Dimensions, QuinticRowAndExclusion) {
    const auto out = run_dimensions(5);
    EXPECT_EQ(value(out, "chain.dims"), "5 / 11 / 26");
    EXPECT_EQ(value(out, "chain.fibres"), "Prym ⊂ Pic^0(C^ν) ⊂ CPic^0(C)");
    EXPECT_EQ(value(out, "mukai_vector"), "(0, 5H, -10)");
    EXPECT_NE(out.human.find("Prym ⊂ Pic^0(C^ν) ⊂ CPic^0(C)"), std::string::npos);
    try {
        run_dimensions(6);
        ADD_FAILURE();
    } catch (const PreconditionError& e) {
        EXPECT_NE(std::string(e.what()).find("k = 6 is excluded"), std::string::npos);
    }
}

TEST(Strata, BinomialCounts) {
    const auto out = run_strata(4, 3);
    EXPECT_EQ(value(out, "stratum.0.orbits"), "1");
    EXPECT_EQ(value(out, "stratum.1.orbits"), "3");
    EXPECT_EQ(value(out, "stratum.2.orbits"), "3");
    EXPECT_EQ(value(out, "stratum.3.orbits"), "1");
    EXPECT_EQ(value(out, "orbits.total"), "8");
    EXPECT_THROW(run_strata(2, 3), PreconditionError);
}

TEST(AnalyzeCurve, ConicsAndCommonComponent) {
    const auto out = run_analyze_curves("x^2+y^2-z^2", "x*y-z^2", 0);
    EXPECT_EQ(value(out, "first.smooth"), "true");
    EXPECT_EQ(value(out, "profile.total"), "4");
    EXPECT_EQ(out.exit_code, kExitOk);
    const auto node = run_analyze_curves("y^2*z-x^3-x^2*z", "y", 3);
    EXPECT_EQ(value(node, "first.smooth"), "false");
    EXPECT_EQ(value(node, "profile"), "1×1,2×1");
    EXPECT_EQ(value(node, "seed"), "3");
    const auto common = run_analyze_curves("x*y", "x*z", 0);
    EXPECT_EQ(value(common, "common_component"), "x");
    EXPECT_EQ(common.exit_code, kExitCheckFailed);
    EXPECT_THROW(run_analyze_curves("x^2+", "y", 0), InputError);
}

TEST(Tool, ExitCodes) {
    std::string text;
    EXPECT_EQ(run_tool("check --input " + sample("general-cubic.txt") + " --format report", &text), 0);
    EXPECT_NE(text.find("overall = pass"), std::string::npos);
    EXPECT_EQ(run_tool("example tangent-pair", &text), 1);
    EXPECT_NE(text.find("2×15"), std::string::npos);
    EXPECT_EQ(run_tool("discriminant --input " + sample("zero-matrix.txt"), &text), 1);
    EXPECT_NE(text.find("degenerate"), std::string::npos);
    EXPECT_EQ(run_tool("dimensions --k 6", &text), 2);
    EXPECT_NE(text.find("k = 6 is excluded"), std::string::npos);
    EXPECT_EQ(run_tool("check --input /nonexistent/file.txt", &text), 2);
    EXPECT_EQ(run_tool("check --input " + sample("general-cubic.txt") + " --primes 9"), 2);
    EXPECT_EQ(run_tool("strata --pa 4 --delta 3", &text), 0);
    EXPECT_NE(text.find("(k[[u,v]]/(uv))^2"), std::string::npos);
    EXPECT_EQ(run_tool("no-such-verb"), 2);
}

TEST(Tool, ByteIdenticalReports) {
    std::string a, b;
    run_tool("example tangent-pair --format report", &a);
    run_tool("example tangent-pair --format report", &b);
    EXPECT_EQ(a, b);
    EXPECT_EQ(a, read_file(golden("tangent-pair.report")));
}
