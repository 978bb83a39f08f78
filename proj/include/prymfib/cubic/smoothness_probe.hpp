#pragma once

// Smoothness of a cubic hypersurface via reduction modulo small primes.
// A reduction with no singular point over the algebraic closure of F_p
// certifies smoothness over Q; an F_p singular point whose centered lift is
// singular over Q certifies failure.

#include <optional>
#include <string>
#include <vector>

#include "prymfib/cubic/discriminant.hpp"

namespace prymfib {

enum class ProbeVerdict { Pass, Fail, Inconclusive };

inline std::string to_string(ProbeVerdict v) {
    switch (v) {
        case ProbeVerdict::Pass: return "pass";
        case ProbeVerdict::Fail: return "fail";
        case ProbeVerdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

struct SmoothnessProbe {
    ProbeVerdict verdict = ProbeVerdict::Inconclusive;
    std::vector<std::uint64_t> primes_tried;
    /// Prime whose reduction is smooth, when the verdict is Pass.
    std::optional<std::uint64_t> certificate_prime;
    /// Rational singular point, when the verdict is Fail.
    std::optional<std::vector<Rational>> singular_point;
    /// Number of F_p singular points seen per prime tried.
    std::vector<std::size_t> fp_singular_counts;
    std::string witness;
};

inline const std::vector<std::uint64_t>& default_probe_primes() {
    static const std::vector<std::uint64_t> primes{7, 11};
    return primes;
}

namespace detail {

// Throws BadPrimeError unless p is a prime at which the reduction keeps the
// meaning of the Jacobian criterion.
inline std::vector<FpPoly> reduce_for_probe(const QPoly& f, std::uint64_t p) {
    if (p == 2 || p == 3) {
        throw BadPrimeError("prime " + std::to_string(p) + " divides 2 or the degree 3");
    }
    if (!is_prime_u64(p)) throw BadPrimeError(std::to_string(p) + " is not a prime");
    const PrimeField fp(p);
    const FpPoly fr = reduce_mod(f, fp);
    if (fr.is_zero()) throw BadPrimeError("prime " + std::to_string(p) + " divides the content of the equation");
    std::vector<FpPoly> partials;
    for (std::size_t v = 0; v < fr.vars().size(); ++v) partials.push_back(fr.derivative(v));
    return partials;
}

inline std::vector<long> centered(const std::vector<std::uint64_t>& pt, std::uint64_t p) {
    std::vector<long> out;
    for (auto c : pt) {
        const long v = static_cast<long>(c);
        out.push_back(2 * c > p ? v - static_cast<long>(p) : v);
    }
    return out;
}

// Calls visit(point) for each point of P^{n-1}(F_p), first nonzero coordinate 1.
template <class Visit>
void for_each_projective_point(std::size_t n, std::uint64_t p, Visit&& visit) {
    std::vector<std::uint64_t> pt(n, 0);
    for (std::size_t lead = 0; lead < n; ++lead) {
        std::fill(pt.begin(), pt.end(), 0);
        pt[lead] = 1;
        const std::size_t free = n - lead - 1;
        for (;;) {
            if (!visit(pt)) return;
            std::size_t k = 0;
            while (k < free) {
                auto& c = pt[lead + 1 + k];
                if (++c < p) break;
                c = 0;
                ++k;
            }
            if (k == free) break;
        }
    }
}

}  // namespace detail

/// Probes smoothness of the hypersurface f = 0 (a cubic form) at each prime in turn.
inline SmoothnessProbe hypersurface_smoothness_probe(const QPoly& f,
                                                     const std::vector<std::uint64_t>& primes = default_probe_primes()) {
    if (f.is_zero() || !f.is_homogeneous() || f.total_degree() != 3) {
        throw PreconditionError("smoothness probe needs a nonzero cubic form");
    }
    const std::size_t n = f.vars().size();
    std::vector<QPoly> exact;
    for (std::size_t v = 0; v < n; ++v) exact.push_back(f.derivative(v));
    SmoothnessProbe out;
    for (std::uint64_t p : primes) {
        const auto partials = detail::reduce_for_probe(f, p);
        out.primes_tried.push_back(p);
        if (forms_have_no_common_zero(partials)) {
            out.verdict = ProbeVerdict::Pass;
            out.certificate_prime = p;
            out.fp_singular_counts.push_back(0);
            out.witness = "reduction mod " + std::to_string(p) + " is smooth (Macaulay matrix of the partials has full rank)";
            return out;
        }
        std::size_t count = 0;
        std::optional<std::vector<Rational>> lifted;
        detail::for_each_projective_point(n, p, [&](const std::vector<std::uint64_t>& pt) {
            for (const auto& d : partials) {
                if (d.evaluate(pt) != 0) return true;
            }
            ++count;
            if (!lifted) {
                const auto lift = detail::centered(pt, p);
                std::vector<Rational> q(lift.begin(), lift.end());
                bool singular = true;
                for (const auto& d : exact) singular = singular && sgn(d.evaluate(q)) == 0;
                if (singular) lifted = q;
            }
            return true;
        });
        out.fp_singular_counts.push_back(count);
        if (lifted) {
            out.verdict = ProbeVerdict::Fail;
            out.singular_point = lifted;
            std::string pt;
            for (const auto& c : *lifted) pt += (pt.empty() ? "" : ":") + c.get_str();
            out.witness = "singular point (" + pt + ") found mod " + std::to_string(p) + " and verified over Q";
            return out;
        }
    }
    std::string tried;
    for (std::size_t i = 0; i < out.primes_tried.size(); ++i) {
        if (!tried.empty()) tried += ", ";
        tried += std::to_string(out.primes_tried[i]) + " (" + std::to_string(out.fp_singular_counts[i]) +
                 " singular F_p-points)";
    }
    out.witness = "reductions singular at every prime tried: " + tried;
    return out;
}

/// The fourfold X in six variables.
inline SmoothnessProbe fourfold_smoothness_probe(const GramCubic& X,
                                                 const std::vector<std::uint64_t>& primes = default_probe_primes()) {
    return hypersurface_smoothness_probe(X.equation(), primes);
}

/// The threefold Y = X ∩ H in five variables.
inline SmoothnessProbe section_smoothness_probe(const GramCubic& X, const HyperplaneSpec& H,
                                                const std::vector<std::uint64_t>& primes = default_probe_primes()) {
    return hypersurface_smoothness_probe(hyperplane_section_equation(X, H), primes);
}

}  // namespace prymfib
