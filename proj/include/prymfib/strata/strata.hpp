#pragma once

// Orbit stratification of the compactified Jacobian of an integral nodal
// curve: a sheaf failing to be locally free at m of the δ nodes lies in one
// of C(δ, m) orbits of codimension m.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "prymfib/numerics/tower.hpp"

namespace prymfib {

inline constexpr std::int64_t kMaxStrataNodes = 64;

struct NodalCurveModel {
    std::int64_t arithmetic_genus = 0;
    std::int64_t nodes = 0;

    std::int64_t geometric_genus() const { return arithmetic_genus - nodes; }

    void validate() const {
        if (nodes < 0) throw PreconditionError("node count must be nonnegative");
        if (nodes > arithmetic_genus) {
            throw PreconditionError("node count " + std::to_string(nodes) + " exceeds the arithmetic genus " +
                                    std::to_string(arithmetic_genus));
        }
    }
};

struct Stratum {
    /// nodes at which the sheaf is not locally free
    std::int64_t m = 0;
    mpz_class orbit_count;
    std::int64_t orbit_dim = 0;
    std::int64_t codim = 0;
    std::int64_t tangent_dim = 0;

    bool smooth() const { return m == 0; }

    /// Completed local ring: m node factors and p_a - m power series variables.
    std::string local_ring() const {
        std::string s;
        if (m > 0) s = "(k[[u,v]]/(uv))^" + std::to_string(m);
        const std::int64_t free = orbit_dim;
        if (free > 0) {
            s += (s.empty() ? "" : " ⊗ ") + std::string(free == 1 ? "k[[w1" : "k[[w1..w" + std::to_string(free)) + "]]";
        }
        return s.empty() ? "k" : s;
    }
};

inline mpz_class binomial(std::int64_t n, std::int64_t k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

/// Strata m = 0..δ.
inline std::vector<Stratum> stratify(const NodalCurveModel& c) {
    c.validate();
    if (c.nodes > kMaxStrataNodes) throw PreconditionError("node count is capped at " + std::to_string(kMaxStrataNodes));
    std::vector<Stratum> out;
    for (std::int64_t m = 0; m <= c.nodes; ++m) {
        Stratum s;
        s.m = m;
        s.orbit_count = binomial(c.nodes, m);
        s.orbit_dim = c.arithmetic_genus - m;
        s.codim = m;
        s.tangent_dim = c.arithmetic_genus + m;
        out.push_back(std::move(s));
    }
    return out;
}

/// Tangent space at a sheaf in a stratum m: normalization Jacobian (g),
/// two directions per non-locally-free node (2m), one per remaining node (δ - m).
struct TangentDecomposition {
    std::int64_t normalization = 0;
    std::int64_t resolution_fibre = 0;
    std::int64_t remaining_nodes = 0;

    std::int64_t total() const { return normalization + resolution_fibre + remaining_nodes; }
};

inline TangentDecomposition tangent_decomposition(const NodalCurveModel& c, std::int64_t m) {
    c.validate();
    if (m < 0 || m > c.nodes) throw PreconditionError("stratum index out of range 0.." + std::to_string(c.nodes));
    return {c.geometric_genus(), 2 * m, c.nodes - m};
}

/// The resolution of the compactified Jacobian as a (P^1)^δ-fibration over
/// Pic^0 of the normalization; the sections at 0 and ∞ of each factor are
/// glued after translation by O(x_i - y_i).
struct ResolutionModel {
    std::int64_t fibre_factors = 0;
    std::int64_t base_dim = 0;
    std::int64_t total_dim = 0;

    std::string descriptor() const {
        return "(P^1)^" + std::to_string(fibre_factors) + " over Pic^0 of the normalization (dim " +
               std::to_string(base_dim) + "); sections s0 and s_inf glued by translation by O(x_i - y_i)";
    }
};

inline ResolutionModel resolution_model(const NodalCurveModel& c) {
    c.validate();
    ResolutionModel r{c.nodes, c.geometric_genus(), c.arithmetic_genus};
    detail::check_identity(r.fibre_factors + r.base_dim == r.total_dim, "δ + g = p_a");
    return r;
}

/// Tangent count of the moduli space at a sheaf of the deepest stratum:
/// 2 p_a = dim T + (p_a + δ), forcing dim T = p_a - δ, the dimension of V.
struct TangentBudget {
    std::int64_t moduli_tangent = 0;
    std::int64_t image_dim = 0;
    std::int64_t fibre_tangent = 0;
    /// dim T read off with the coefficient 2δ instead of δ; never the right value for δ > 0
    std::int64_t literal_two_delta_reading = 0;

    bool consistent() const { return moduli_tangent == image_dim + fibre_tangent; }
};

inline TangentBudget moduli_tangent_budget(const NodalCurveModel& c) {
    c.validate();
    TangentBudget b;
    b.moduli_tangent = 2 * c.arithmetic_genus;
    b.image_dim = c.arithmetic_genus - c.nodes;
    b.fibre_tangent = tangent_decomposition(c, c.nodes).total();
    b.literal_two_delta_reading = b.moduli_tangent - c.arithmetic_genus - 2 * c.nodes;
    detail::check_identity(b.consistent(), "2 p_a = dim T + p_a + δ");
    return b;
}

inline TangentBudget moduli_tangent_budget(std::int64_t k) {
    const auto t = dimension_tower(k);
    const auto b = moduli_tangent_budget(NodalCurveModel{t.arithmetic_genus, t.nodes});
    detail::check_identity(b.image_dim == t.dim_severi, "dim T equals dim V");
    return b;
}

}  // namespace prymfib
