#pragma once

// Command pipelines behind the prymfib tool. Each returns a structured
// report, a human-readable rendering and an exit code.

#include <cstdio>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "prymfib/cli/builtins.hpp"
#include "prymfib/cli/input.hpp"
#include "prymfib/cubic.hpp"
#include "prymfib/numerics.hpp"

namespace prymfib {

inline constexpr const char* kToolVersion = "0.1.0";

enum ExitCode : int { kExitOk = 0, kExitCheckFailed = 1, kExitInputError = 2, kExitInconclusive = 3 };

/// Ordered key = value block.
class Report {
public:
    void add(std::string key, std::string value) {
        for (auto& ch : value) {
            if (ch == '\n' || ch == '\r') ch = ' ';
        }
        entries_.emplace_back(std::move(key), std::move(value));
    }
    void add(std::string key, long long value) { add(std::move(key), std::to_string(value)); }

    const std::vector<std::pair<std::string, std::string>>& entries() const { return entries_; }

    const std::string* find(const std::string& key) const {
        for (const auto& [k, v] : entries_) {
            if (k == key) return &v;
        }
        return nullptr;
    }

    std::string render() const {
        std::string out = "#report\n";
        for (const auto& [k, v] : entries_) out += k + " = " + v + "\n";
        return out + "#end\n";
    }

private:
    std::vector<std::pair<std::string, std::string>> entries_;
};

struct CommandOutput {
    Report report;
    std::string human;
    int exit_code = kExitOk;
};

struct RunSettings {
    /// include wall-clock seconds; off by default so reports are byte-stable
    bool timing = false;
    std::string input_name;
};

namespace detail {

inline Report report_header(const std::string& command) {
    Report r;
    r.add("tool", "prymfib");
    r.add("version", kToolVersion);
    r.add("command", command);
    return r;
}

inline std::string slug(const std::string& name) {
    std::string out;
    for (char ch : name) out += (ch == ' ' || ch == '=') ? '_' : ch;
    return out;
}

inline std::string primes_text(const std::vector<std::uint64_t>& primes) {
    std::string out;
    for (auto p : primes) out += (out.empty() ? "" : ",") + std::to_string(p);
    return out;
}

inline std::string seconds_text(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", s);
    return buf;
}

inline std::string pad(std::string s, std::size_t width) {
    // width counts code points so that "⊂" and friends align
    std::size_t n = 0;
    for (unsigned char ch : s) n += (ch & 0xC0) != 0x80;
    if (n < width) s.append(width - n, ' ');
    return s;
}

inline void add_curve(Report& r, std::ostringstream& h, const std::string& key, const std::string& label,
                      const QPoly& f) {
    r.add(key, to_string(f));
    r.add(key + ".factored", factored_string(f));
    r.add(key + ".degree", f.total_degree());
    h << label << " = " << factored_string(f) << "   (degree " << f.total_degree() << ")\n";
}

inline int exit_code_for(Verdict v) {
    switch (v) {
        case Verdict::Fail: return kExitCheckFailed;
        case Verdict::Inconclusive: return kExitInconclusive;
        default: return kExitOk;
    }
}

}  // namespace detail

/// D6 and, when a hyperplane is given, D_H.
inline CommandOutput run_discriminant(const InputDocument& doc, const RunSettings& settings = {}) {
    CommandOutput out;
    out.report = detail::report_header("discriminant");
    out.report.add("input", settings.input_name.empty() ? doc.source : settings.input_name);
    std::ostringstream h;
    const PlaneCurve d6 = discriminant_sextic(doc.cubic);
    detail::add_curve(out.report, h, "d6", "D6 ", d6.poly());
    if (doc.hyperplane) {
        out.report.add("hyperplane", doc.hyperplane->to_string());
        const PlaneCurve dh = discriminant_quintic(doc.cubic, *doc.hyperplane);
        detail::add_curve(out.report, h, "dh", "D_H", dh.poly());
        const QPoly g = gcd_poly(d6.poly(), dh.poly());
        out.report.add("gcd.degree", g.total_degree());
        h << "gcd(D6, D_H) has degree " << g.total_degree() << "\n";
    }
    out.human = h.str();
    return out;
}

/// Generality conditions (i)-(iv) for X and its hyperplane section.
inline CommandOutput run_check(const InputDocument& doc, const RunSettings& settings = {},
                               const std::string& command = "check") {
    if (!doc.hyperplane) throw PreconditionError("check needs a [hyperplane] section");
    GeneralityOptions opt;
    opt.lines = doc.lines;
    opt.primes = doc.primes;
    opt.seed = doc.seed;
    const GeneralityReport rep = check_generality(doc.cubic, *doc.hyperplane, opt);

    CommandOutput out;
    Report& r = out.report;
    r = detail::report_header(command);
    const std::string input = settings.input_name.empty() ? doc.source : settings.input_name;
    r.add("input", input);
    r.add("seed", std::to_string(doc.seed));
    r.add("primes", detail::primes_text(doc.primes));
    r.add("hyperplane", doc.hyperplane->to_string());
    std::ostringstream h;
    h << "input " << input << ", seed " << doc.seed << ", primes " << detail::primes_text(doc.primes) << "\n";
    h << "hyperplane " << doc.hyperplane->to_string() << "\n";
    if (rep.sextic) detail::add_curve(r, h, "d6", "D6 ", *rep.sextic);
    if (rep.quintic) detail::add_curve(r, h, "dh", "D_H", *rep.quintic);
    if (rep.line_type) {
        r.add("line_type.first", rep.line_type->first_type ? "true" : "false");
        r.add("line_type.rank", static_cast<long long>(rep.line_type->rank));
        r.add("line_type.witness", rep.line_type->witness_text());
    }
    if (rep.profile) {
        r.add("profile", rep.profile->summary());
        r.add("profile.total", static_cast<long long>(rep.profile->total()));
        r.add("profile.expected_total", static_cast<long long>(rep.profile->degree_product));
        r.add("profile.resolved", rep.profile->resolved ? "true" : "false");
        h << "intersection profile D_H . D6: " << rep.profile->summary() << " (total " << rep.profile->total()
          << ")\n";
    }
    for (const auto& c : rep.conditions) {
        const std::string base = "condition." + c.id;
        r.add(base, to_string(c.verdict()));
        r.add(base + ".title", c.title);
        h << "\n(" << c.id << ") " << c.title << ": " << to_string(c.verdict()) << "\n";
        for (const auto& chk : c.checks) {
            const std::string key = base + "." + detail::slug(chk.name);
            r.add(key, to_string(chk.verdict));
            if (!chk.witness.empty()) r.add(key + ".witness", chk.witness);
            if (settings.timing) r.add(key + ".seconds", detail::seconds_text(chk.seconds));
            h << "  " << detail::pad(chk.name, 28) << detail::pad(to_string(chk.verdict), 20);
            if (settings.timing) h << detail::seconds_text(chk.seconds) << " s  ";
            h << chk.witness << "\n";
        }
    }
    const Verdict overall = rep.overall();
    out.exit_code = detail::exit_code_for(overall);
    r.add("overall", to_string(overall));
    r.add("exit_code", out.exit_code);
    h << "\noverall: " << to_string(overall) << "\n";
    out.human = h.str();
    return out;
}

/// Built-in example through the check pipeline; empty overrides keep the document's values.
inline CommandOutput run_example(const std::string& id, const RunSettings& settings = {},
                                 const std::vector<std::uint64_t>& primes = {},
                                 std::optional<std::uint64_t> seed = std::nullopt) {
    InputDocument doc = builtin_document(id);
    if (!primes.empty()) doc.primes = primes;
    if (seed) doc.seed = *seed;
    RunSettings s = settings;
    s.input_name = id;
    auto out = run_check(doc, s, "example");
    out.human = id + ": " + find_builtin(id).summary + "\n" + out.human;
    return out;
}

/// Dimension tower over |kH|.
inline CommandOutput run_dimensions(std::int64_t k) {
    const auto t = dimension_tower(k);
    const auto mukai = mukai_chi(k, t.nodes);
    const auto split = component_splitting_genus_check(k);
    const auto budget = moduli_tangent_budget(k);
    CommandOutput out;
    Report& r = out.report;
    r = detail::report_header("dimensions");
    r.add("k", t.k);
    r.add("dim_linear_system", t.dim_linear_system);
    r.add("dim_severi", t.dim_severi);
    r.add("dim_prym_base", t.dim_prym_base);
    r.add("arithmetic_genus", t.arithmetic_genus);
    r.add("nodes", t.nodes);
    r.add("normalization_genus", t.normalization_genus);
    r.add("plane_curve_genus", t.plane_curve_genus);
    r.add("prym_dim", t.prym_dim);
    r.add("moduli_dim", t.moduli_dim);
    r.add("mukai_vector", mukai.to_string());
    r.add("mukai_chi", mukai.chi);
    r.add("splitting", split.to_string());
    r.add("tangent_budget", std::to_string(budget.moduli_tangent) + " = " + std::to_string(budget.image_dim) + " + " +
                                std::to_string(budget.fibre_tangent));
    r.add("chain.fibres", "Prym ⊂ Pic^0(C^ν) ⊂ CPic^0(C)");
    r.add("chain.bases", "𝒱 ⊂ V ⊂ |kH|");
    r.add("chain.dims", std::to_string(t.dim_prym_base) + " / " + std::to_string(t.dim_severi) + " / " +
                            std::to_string(t.dim_linear_system));

    std::ostringstream h;
    using detail::pad;
    h << "k = " << k << ", curves in |" << k << "H| on a degree-2 K3 surface, " << t.nodes << " nodes\n\n";
    h << pad("fibre", 14) << pad("dim", 6) << pad("base", 8) << "dim\n";
    h << pad("Prym", 14) << pad(std::to_string(t.prym_dim), 6) << pad("𝒱", 8) << t.dim_prym_base << "\n";
    h << pad("Pic^0(C^ν)", 14) << pad(std::to_string(t.normalization_genus), 6) << pad("V", 8) << t.dim_severi << "\n";
    h << pad("CPic^0(C)", 14) << pad(std::to_string(t.arithmetic_genus), 6) << pad("|kH|", 8) << t.dim_linear_system
      << "\n\n";
    h << "chain  Prym ⊂ Pic^0(C^ν) ⊂ CPic^0(C)  over  𝒱 ⊂ V ⊂ |kH|:  " << t.dim_prym_base << " / " << t.dim_severi
      << " / " << t.dim_linear_system << "\n";
    h << "genus of the plane curve " << t.plane_curve_genus << ", moduli space dimension " << t.moduli_dim << "\n";
    h << "Mukai vector " << mukai.to_string() << "\n";
    h << "splitting: " << split.to_string() << "\n";
    out.human = h.str();
    return out;
}

/// Orbit strata of the compactified Jacobian of a δ-nodal curve.
inline CommandOutput run_strata(std::int64_t pa, std::int64_t delta) {
    const NodalCurveModel c{pa, delta};
    const auto strata = stratify(c);
    const auto res = resolution_model(c);
    CommandOutput out;
    Report& r = out.report;
    r = detail::report_header("strata");
    r.add("arithmetic_genus", pa);
    r.add("nodes", delta);
    r.add("geometric_genus", c.geometric_genus());
    std::ostringstream h;
    using detail::pad;
    h << "p_a = " << pa << ", δ = " << delta << "\n\n";
    h << pad("m", 5) << pad("orbits", 22) << pad("dim", 6) << pad("codim", 7) << pad("tangent", 9) << "local ring\n";
    mpz_class total = 0;
    for (const auto& s : strata) {
        const std::string base = "stratum." + std::to_string(s.m);
        r.add(base + ".orbits", s.orbit_count.get_str());
        r.add(base + ".dim", s.orbit_dim);
        r.add(base + ".codim", s.codim);
        r.add(base + ".tangent_dim", s.tangent_dim);
        r.add(base + ".local_ring", s.local_ring());
        total += s.orbit_count;
        h << pad(std::to_string(s.m), 5) << pad(s.orbit_count.get_str(), 22) << pad(std::to_string(s.orbit_dim), 6)
          << pad(std::to_string(s.codim), 7) << pad(std::to_string(s.tangent_dim), 9) << s.local_ring() << "\n";
    }
    r.add("orbits.total", total.get_str());
    r.add("resolution", res.descriptor());
    h << "\ntotal orbits " << total.get_str() << "\nresolution: " << res.descriptor() << "\n";
    out.human = h.str();
    return out;
}

/// Smoothness of two plane curves and their intersection profile.
inline CommandOutput run_analyze_curves(const std::string& first, const std::string& second, std::uint64_t seed) {
    auto parse_curve = [](const std::string& text, const char* which) {
        try {
            return PlaneCurve::parse(text);
        } catch (const ParseError& e) {
            throw InputError(1, e.position() + 1, std::string(which) + " curve: " + e.bare_message());
        } catch (const PreconditionError& e) {
            throw InputError(1, 1, std::string(which) + " curve: " + e.what());
        }
    };
    const PlaneCurve a = parse_curve(first, "first");
    const PlaneCurve b = parse_curve(second, "second");
    CommandOutput out;
    Report& r = out.report;
    r = detail::report_header("analyze-curve");
    r.add("seed", std::to_string(seed));
    std::ostringstream h;
    h << "seed " << seed << "\n";
    bool failed = false, inconclusive = false;
    for (const auto& [key, c] : {std::pair{"first", &a}, std::pair{"second", &b}}) {
        const auto s = is_smooth(*c);
        r.add(std::string(key), to_string(c->poly()));
        r.add(std::string(key) + ".degree", c->degree());
        r.add(std::string(key) + ".smooth", s.smooth ? "true" : "false");
        if (!s.smooth) r.add(std::string(key) + ".witness", s.witness);
        h << key << ": " << factored_string(c->poly()) << " (degree " << c->degree() << ") "
          << (s.smooth ? "smooth" : "singular: " + s.witness) << "\n";
    }
    const QPoly g = gcd_poly(a.poly(), b.poly());
    if (!g.is_constant()) {
        r.add("common_component", factored_string(g));
        h << "common component " << factored_string(g) << "\n";
        failed = true;
    } else {
        std::mt19937_64 rng(seed);
        try {
            const auto p = multiplicity_profile(a, b, rng);
            r.add("profile", p.summary());
            r.add("profile.points", static_cast<long long>(p.points()));
            r.add("profile.total", static_cast<long long>(p.total()));
            r.add("profile.expected_total", static_cast<long long>(p.degree_product));
            r.add("profile.resolved", p.resolved ? "true" : "false");
            h << "intersection profile " << p.summary() << ", " << p.points() << " points, total " << p.total()
              << " of " << p.degree_product << (p.resolved ? "" : " (fibres not separated)") << "\n";
        } catch (const GenericityError& e) {
            r.add("profile", "inconclusive");
            r.add("profile.witness", e.what());
            h << "profile inconclusive: " << e.what() << "\n";
            inconclusive = true;
        }
    }
    out.exit_code = failed ? kExitCheckFailed : inconclusive ? kExitInconclusive : kExitOk;
    r.add("exit_code", out.exit_code);
    out.human = h.str();
    return out;
}

}  // namespace prymfib
