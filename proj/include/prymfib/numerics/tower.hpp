#pragma once

// Dimension and genus bookkeeping for the tower of fibrations attached to
// δ-nodal curves in |k H| on a degree-2 K3 surface:
//   Prym ⊂ Pic^0(normalization) ⊂ compactified Pic^0(C)
// over the bases 𝒱 ⊂ V ⊂ |k H|.

#include <cstdint>
#include <optional>
#include <string>

#include "prymfib/poly/error.hpp"

namespace prymfib {

inline constexpr std::int64_t kMaxTowerK = 1000000;

namespace detail {

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r)) throw PreconditionError("integer overflow");
    return r;
}

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_add_overflow(a, b, &r)) throw PreconditionError("integer overflow");
    return r;
}

inline void check_identity(bool ok, const std::string& what) {
    if (!ok) throw Error("numerical identity violated: " + what);
}

}  // namespace detail

struct DimensionTower {
    std::int64_t k = 0;
    /// dim |k H| = k^2 + 1
    std::int64_t dim_linear_system = 0;
    /// arithmetic genus of curves in |k H|
    std::int64_t arithmetic_genus = 0;
    /// number of nodes, 3k
    std::int64_t nodes = 0;
    /// dim V, the Severi variety of 3k-nodal curves
    std::int64_t dim_severi = 0;
    /// dim 𝒱, the base of the Prym fibration
    std::int64_t dim_prym_base = 0;
    std::int64_t normalization_genus = 0;
    /// genus (k-1)(k-2)/2 of a plane curve of degree k
    std::int64_t plane_curve_genus = 0;
    std::int64_t prym_dim = 0;
    /// 2 p_a, dimension of the moduli space of sheaves
    std::int64_t moduli_dim = 0;
};

/// Tower at k >= 4, k != 6.
inline DimensionTower dimension_tower(std::int64_t k) {
    if (k == 6) {
        throw PreconditionError(
            "k = 6 is excluded: the preimage of a plane sextic could split into two components in |3H|, "
            "whose genus k^2/4+1 = 10 equals the genus (k^2-3k)/2+1 of the plane curve");
    }
    if (k < 4) throw PreconditionError("k must be at least 4 for a nonempty tower, got " + std::to_string(k));
    if (k > kMaxTowerK) throw PreconditionError("k is capped at " + std::to_string(kMaxTowerK));
    using detail::checked_add;
    using detail::checked_mul;
    DimensionTower t;
    t.k = k;
    const std::int64_t k2 = checked_mul(k, k);
    t.dim_linear_system = checked_add(k2, 1);
    t.arithmetic_genus = checked_add(k2, 1);
    t.nodes = checked_mul(3, k);
    t.dim_severi = k2 - 3 * k + 1;
    const std::int64_t twice_base = k2 - 3 * k;
    detail::check_identity(twice_base % 2 == 0, "k(k-3) is even");
    t.dim_prym_base = twice_base / 2;
    t.normalization_genus = t.arithmetic_genus - t.nodes;
    t.plane_curve_genus = (k - 1) * (k - 2) / 2;
    t.prym_dim = t.normalization_genus - t.plane_curve_genus;
    t.moduli_dim = checked_mul(2, t.arithmetic_genus);

    // fibre dimension equals base dimension at each level
    detail::check_identity(t.prym_dim == t.dim_prym_base, "Prym dimension equals dim of its base");
    detail::check_identity(t.normalization_genus == t.dim_severi, "normalization genus equals dim V");
    detail::check_identity(t.arithmetic_genus == t.dim_linear_system, "arithmetic genus equals dim |kH|");
    // V has the expected codimension δ in |kH|
    detail::check_identity(t.dim_linear_system - t.dim_severi == t.nodes, "codim of V equals the node count");
    return t;
}

/// Mukai vector (0, k H, χ) of a degree-d sheaf on curves in |k H|.
struct MukaiVector {
    std::int64_t rank = 0;
    std::int64_t curve_multiple = 0;
    std::int64_t chi = 0;

    std::string to_string() const {
        return "(" + std::to_string(rank) + ", " + std::to_string(curve_multiple) + "H, " + std::to_string(chi) + ")";
    }
};

/// χ = 1 - p_a + d with p_a = k^2 + 1.
inline MukaiVector mukai_chi(std::int64_t k, std::int64_t d) {
    const std::int64_t pa = detail::checked_add(detail::checked_mul(k, k), 1);
    return {0, k, detail::checked_add(1 - pa, d)};
}

struct RiemannRochRecord {
    std::int64_t genus = 0;
    std::int64_t degree = 0;
    /// h^0 - h^1 = deg + 1 - g
    std::int64_t chi = 0;
    std::int64_t h0_lower_bound = 0;
    /// dim |D| = χ - 1 when h^1 = 0.
    std::int64_t dim_linear_system_if_nonspecial = 0;
};

inline RiemannRochRecord riemann_roch_curve(std::int64_t g, std::int64_t deg) {
    if (g < 0) throw PreconditionError("genus must be nonnegative");
    RiemannRochRecord r;
    r.genus = g;
    r.degree = deg;
    r.chi = detail::checked_add(deg, 1 - g);
    r.h0_lower_bound = r.chi > 0 ? r.chi : 0;
    r.dim_linear_system_if_nonspecial = r.chi - 1;
    return r;
}

/// Could the preimage of a degree-k plane curve split as two curves of class
/// (k/2) H, each isomorphic to the plane curve?
struct SplittingCheck {
    std::int64_t k = 0;
    bool class_divisible = false;
    /// (k^2 - 3k)/2 + 1
    std::optional<std::int64_t> component_genus;
    /// k^2/4 + 1, the arithmetic genus of a curve in |(k/2) H|
    std::optional<std::int64_t> half_class_genus;

    bool splitting_excluded() const { return !class_divisible || *component_genus != *half_class_genus; }

    std::string to_string() const {
        if (!class_divisible) return "k odd: class not divisible, splitting impossible";
        return "genus " + std::to_string(*component_genus) + " vs " + std::to_string(*half_class_genus) +
               (splitting_excluded() ? ": splitting excluded" : ": splitting not excluded");
    }
};

inline SplittingCheck component_splitting_genus_check(std::int64_t k) {
    if (k < 1) throw PreconditionError("k must be positive");
    if (k > kMaxTowerK) throw PreconditionError("k is capped at " + std::to_string(kMaxTowerK));
    SplittingCheck s;
    s.k = k;
    s.class_divisible = k % 2 == 0;
    if (s.class_divisible) {
        s.component_genus = (k * k - 3 * k) / 2 + 1;
        s.half_class_genus = k * k / 4 + 1;
    }
    return s;
}

/// Rank over Z/2 of the 2-torsion of a Jacobian of genus g.
inline std::int64_t two_torsion_rank(std::int64_t g) {
    if (g < 0) throw PreconditionError("genus must be nonnegative");
    return detail::checked_mul(2, g);
}

}  // namespace prymfib
