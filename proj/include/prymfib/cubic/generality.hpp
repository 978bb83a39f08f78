#pragma once

// The four generality conditions on (X, P, H):
//   (i)   X and D6 smooth
//   (ii)  no tritangent of D6 among the supplied lines
//   (iii) Y, C_H and D_H smooth
//   (iv)  D6 and D_H meet with multiplicity at most 2 everywhere

#include <chrono>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "prymfib/cubic/smoothness_probe.hpp"

namespace prymfib {

enum class Verdict { Pass, ProbabilisticPass, Inconclusive, Skipped, Fail };

inline std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::ProbabilisticPass: return "probabilistic-pass";
        case Verdict::Inconclusive: return "inconclusive";
        case Verdict::Skipped: return "skipped";
        case Verdict::Fail: return "fail";
    }
    return "?";
}

inline Verdict from_probe(ProbeVerdict v) {
    switch (v) {
        case ProbeVerdict::Pass: return Verdict::Pass;
        case ProbeVerdict::Fail: return Verdict::Fail;
        case ProbeVerdict::Inconclusive: return Verdict::Inconclusive;
    }
    return Verdict::Inconclusive;
}

struct CheckRecord {
    std::string name;
    Verdict verdict = Verdict::Skipped;
    std::string witness;
    double seconds = 0;
};

struct ConditionReport {
    std::string id;
    std::string title;
    std::vector<CheckRecord> checks;

    /// Fail dominates, then inconclusive, then probabilistic; all-skipped is skipped.
    Verdict verdict() const {
        bool any_fail = false, any_inconclusive = false, any_prob = false, any_pass = false;
        for (const auto& c : checks) {
            any_fail |= c.verdict == Verdict::Fail;
            any_inconclusive |= c.verdict == Verdict::Inconclusive;
            any_prob |= c.verdict == Verdict::ProbabilisticPass;
            any_pass |= c.verdict == Verdict::Pass;
        }
        if (any_fail) return Verdict::Fail;
        if (any_inconclusive) return Verdict::Inconclusive;
        if (any_prob) return Verdict::ProbabilisticPass;
        return any_pass ? Verdict::Pass : Verdict::Skipped;
    }

    const CheckRecord* find(const std::string& name) const {
        for (const auto& c : checks) {
            if (c.name == name) return &c;
        }
        return nullptr;
    }
};

struct GeneralityOptions {
    std::vector<PlaneCurve> lines;
    std::vector<std::uint64_t> primes = default_probe_primes();
    std::uint64_t seed = 0;
    unsigned retry_budget = 8;
};

struct GeneralityReport {
    std::optional<QPoly> sextic;
    std::optional<QPoly> quintic;
    std::optional<MultiplicityProfile> profile;
    std::optional<LineTypeResult> line_type;
    std::vector<ConditionReport> conditions;

    const ConditionReport& condition(const std::string& id) const {
        for (const auto& c : conditions) {
            if (c.id == id) return c;
        }
        throw PreconditionError("no condition " + id);
    }

    /// Fail if any condition fails; Inconclusive if only probes were inconclusive.
    Verdict overall() const {
        ConditionReport all;
        for (const auto& c : conditions) all.checks.push_back({c.id, c.verdict(), "", 0});
        return all.verdict();
    }
};

namespace detail {

template <class Fn>
CheckRecord timed_check(std::string name, Fn&& fn) {
    const auto start = std::chrono::steady_clock::now();
    CheckRecord r{std::move(name), Verdict::Skipped, "", 0};
    try {
        fn(r);
    } catch (const DegenerateError& e) {
        r.verdict = Verdict::Fail;
        r.witness = e.what();
    } catch (const CommonComponentError& e) {
        r.verdict = Verdict::Fail;
        r.witness = e.what();
    } catch (const GenericityError& e) {
        r.verdict = Verdict::Inconclusive;
        r.witness = e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

inline void fill_smoothness(CheckRecord& r, const PlaneCurve& c) {
    const auto s = is_smooth(c);
    r.verdict = s.smooth ? Verdict::Pass : Verdict::Fail;
    r.witness = s.smooth ? "partials have no common zero (full-rank Macaulay matrix)" : s.witness;
}

inline void fill_probe(CheckRecord& r, const SmoothnessProbe& p) {
    r.verdict = from_probe(p.verdict);
    r.witness = p.witness;
}

}  // namespace detail

/// Runs every condition; each check is reported independently.
inline GeneralityReport check_generality(const GramCubic& X, const HyperplaneSpec& H,
                                         const GeneralityOptions& options = {}) {
    GeneralityReport rep;
    std::optional<PlaneCurve> d6, dh;
    try {
        d6 = discriminant_sextic(X);
        rep.sextic = d6->poly();
    } catch (const DegenerateError&) {
    }
    try {
        dh = discriminant_quintic(X, H);
        rep.quintic = dh->poly();
    } catch (const DegenerateError&) {
    }
    auto require = [](const std::optional<PlaneCurve>& c, const char* what) -> const PlaneCurve& {
        if (!c) throw DegenerateError(std::string(what) + " vanishes identically (degenerate bundle)");
        return *c;
    };

    ConditionReport c1{"i", "X and D6 smooth", {}};
    c1.checks.push_back(detail::timed_check("X smooth", [&](CheckRecord& r) {
        if (X.equation().is_zero()) throw DegenerateError("the cubic equation vanishes identically");
        detail::fill_probe(r, fourfold_smoothness_probe(X, options.primes));
    }));
    c1.checks.push_back(detail::timed_check("D6 smooth", [&](CheckRecord& r) {
        detail::fill_smoothness(r, require(d6, "D6"));
    }));
    rep.conditions.push_back(std::move(c1));

    ConditionReport c2{"ii", "no tritangent of D6 among the supplied lines", {}};
    if (options.lines.empty()) {
        c2.checks.push_back({"tritangent lines", Verdict::Skipped, "no lines supplied", 0});
    }
    for (const auto& line : options.lines) {
        c2.checks.push_back(detail::timed_check("line " + to_string(line.poly()), [&](CheckRecord& r) {
            const auto prof = line_profile(line, require(d6, "D6"));
            const bool tri = prof.multiplicities == std::vector<unsigned>{2, 2, 2};
            r.verdict = tri ? Verdict::Fail : Verdict::Pass;
            r.witness = (tri ? "tritangent, contact " : "not tritangent, contact ") + prof.summary();
        }));
    }
    rep.conditions.push_back(std::move(c2));

    ConditionReport c3{"iii", "Y, C_H and D_H smooth", {}};
    c3.checks.push_back(detail::timed_check("Y smooth", [&](CheckRecord& r) {
        const QPoly y = hyperplane_section_equation(X, H);
        if (y.is_zero()) throw DegenerateError("the hyperplane section vanishes identically");
        detail::fill_probe(r, hypersurface_smoothness_probe(y, options.primes));
    }));
    c3.checks.push_back(detail::timed_check("D_H smooth", [&](CheckRecord& r) {
        detail::fill_smoothness(r, require(dh, "D_H"));
    }));
    c3.checks.push_back(detail::timed_check("L first type", [&](CheckRecord& r) {
        rep.line_type = line_first_type(X, H);
        r.verdict = rep.line_type->first_type ? Verdict::Pass : Verdict::Fail;
        r.witness = "rank " + std::to_string(rep.line_type->rank) + ": " + rep.line_type->witness_text();
    }));
    {
        const Verdict dh_v = c3.checks[1].verdict;
        const Verdict lt_v = c3.checks[2].verdict;
        CheckRecord ch{"C_H smooth", Verdict::Fail, "", 0};
        if (dh_v == Verdict::Pass && lt_v == Verdict::Pass) {
            ch.verdict = Verdict::Pass;
            ch.witness = "D_H smooth and L of the first type";
        } else {
            ch.witness = dh_v != Verdict::Pass ? "D_H not smooth" : "L of the second type";
        }
        c3.checks.push_back(std::move(ch));
    }
    rep.conditions.push_back(std::move(c3));

    ConditionReport c4{"iv", "D6 and D_H meet with multiplicity at most 2", {}};
    c4.checks.push_back(detail::timed_check("no common component", [&](CheckRecord& r) {
        const QPoly g = gcd_poly(require(d6, "D6").poly(), require(dh, "D_H").poly());
        r.verdict = g.is_constant() ? Verdict::Pass : Verdict::Fail;
        r.witness = "gcd " + to_string(g);
    }));
    if (c4.checks.front().verdict == Verdict::Pass) {
        c4.checks.push_back(detail::timed_check("multiplicities at most 2", [&](CheckRecord& r) {
            std::mt19937_64 rng(options.seed);
            rep.profile = multiplicity_profile(*dh, *d6, rng, options.retry_budget);
            const bool ok = rep.profile->max() <= 2;
            r.verdict = !ok ? Verdict::Fail : rep.profile->resolved ? Verdict::Pass : Verdict::ProbabilisticPass;
            r.witness = "profile " + rep.profile->summary() + " total " + std::to_string(rep.profile->total());
        }));
    } else {
        c4.checks.push_back({"multiplicities at most 2", Verdict::Fail, "no finite intersection", 0});
    }
    rep.conditions.push_back(std::move(c4));
    return rep;
}

}  // namespace prymfib
