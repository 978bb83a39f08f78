#pragma once

// Cubic fourfolds containing the plane {x = y = z = 0}, written as a quadratic
// form in (t0, t1, t2, s) over the polynomial ring of the base plane.

#include <array>
#include <string>

#include "prymfib/curves/plane_curve.hpp"

namespace prymfib {

/// Coordinates (x, y, z, t0, t1, t2) of the ambient five-dimensional space.
inline const Variables& fourfold_variables() {
    static const Variables vars{"x", "y", "z", "t0", "t1", "t2"};
    return vars;
}

namespace detail {

inline QPoly plane_zero() { return QPoly(plane_variables()); }

}  // namespace detail

/// Coefficients of F = sum_{i<=j} a_ij t_i t_j + sum_i b_i t_i + c, forms in
/// (x, y, z) of degree 1, 2 and 3. Zero entries are allowed.
struct GramCoefficients {
    using Row = std::array<QPoly, 3>;
    // symmetric, a[i][j] == a[j][i]
    std::array<Row, 3> a{Row{detail::plane_zero(), detail::plane_zero(), detail::plane_zero()},
                         Row{detail::plane_zero(), detail::plane_zero(), detail::plane_zero()},
                         Row{detail::plane_zero(), detail::plane_zero(), detail::plane_zero()}};
    Row b{detail::plane_zero(), detail::plane_zero(), detail::plane_zero()};
    QPoly c = detail::plane_zero();

    static GramCoefficients zero() { return {}; }
};

class GramCubic {
public:
    const GramCoefficients& coefficients() const noexcept { return k_; }
    const QPoly& a(std::size_t i, std::size_t j) const { return k_.a.at(i).at(j); }
    const QPoly& b(std::size_t i) const { return k_.b.at(i); }
    const QPoly& c() const noexcept { return k_.c; }

    /// The 4x4 symmetric Gram matrix [[2a00,a01,a02,b0],...,[b0,b1,b2,2c]].
    PolyMatrix<RationalField> gram_matrix() const {
        PolyMatrix<RationalField> m(4, 4, k_.c);
        for (std::size_t i = 0; i < 3; ++i) {
            for (std::size_t j = 0; j < 3; ++j) m.set(i, j, i == j ? k_.a[i][i].scaled(2) : k_.a[i][j]);
            m.set(i, 3, k_.b[i]);
            m.set(3, i, k_.b[i]);
        }
        m.set(3, 3, k_.c.scaled(2));
        return m;
    }

    /// The cubic form in fourfold_variables().
    QPoly equation() const {
        const Variables& v = fourfold_variables();
        QPoly f(v);
        auto lift = [&](const QPoly& p) { return p.rebase(v); };
        auto t = [&](std::size_t i) { return QPoly::variable(v, 3 + i); };
        for (std::size_t i = 0; i < 3; ++i) {
            for (std::size_t j = i; j < 3; ++j) f += lift(k_.a[i][j]) * t(i) * t(j);
            f += lift(k_.b[i]) * t(i);
        }
        return f + lift(k_.c);
    }

    /// q(t0, t1, t2, s) evaluated with the given images; images[3] stands for s.
    template <class Images>
    QPoly quadratic_form(const Images& u) const {
        QPoly q = u[0].zero_like();
        auto lift = [&](const QPoly& p) { return p.rebase(u[0].vars()); };
        for (std::size_t i = 0; i < 3; ++i) {
            for (std::size_t j = i; j < 3; ++j) q += lift(k_.a[i][j]) * u[i] * u[j];
            q += lift(k_.b[i]) * u[i] * u[3];
        }
        return q + lift(k_.c) * u[3] * u[3];
    }

    bool operator==(const GramCubic& o) const { return equation() == o.equation(); }

private:
    explicit GramCubic(GramCoefficients k) : k_(std::move(k)) {}
    GramCoefficients k_;

    friend GramCubic build_cubic(GramCoefficients k);
};

namespace detail {

inline QPoly checked_coefficient(const QPoly& p, int degree, const std::string& name) {
    if (p.vars() != plane_variables()) {
        throw PreconditionError("coefficient " + name + " must be a polynomial in x, y, z");
    }
    if (p.is_zero()) return p;
    if (!p.is_homogeneous() || p.total_degree() != degree) {
        throw PreconditionError("coefficient " + name + " must be zero or a form of degree " +
                                std::to_string(degree) + ", got " + to_string(p));
    }
    return p;
}

inline std::string coefficient_name(char letter, std::size_t i, std::size_t j = 9) {
    std::string s(1, letter);
    s += std::to_string(i);
    if (j != 9) s += std::to_string(j);
    return s;
}

}  // namespace detail

/// Validates degrees and assembles the cubic.
inline GramCubic build_cubic(GramCoefficients k) {
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = i; j < 3; ++j) {
            if (k.a[i][j].is_zero()) k.a[i][j] = k.a[j][i];
            if (j > i && !(k.a[i][j] == k.a[j][i]) && !k.a[j][i].is_zero()) {
                throw PreconditionError("asymmetric coefficients " + detail::coefficient_name('a', i, j));
            }
            k.a[i][j] = detail::checked_coefficient(k.a[i][j], 1, detail::coefficient_name('a', i, j));
            k.a[j][i] = k.a[i][j];
        }
        k.b[i] = detail::checked_coefficient(k.b[i], 2, detail::coefficient_name('b', i));
    }
    k.c = detail::checked_coefficient(k.c, 3, "c");
    return GramCubic(std::move(k));
}

/// From the entries of a Gram matrix as displayed: diagonal entries are 2a_ii and 2c.
inline GramCubic cubic_from_gram_matrix(const PolyMatrix<RationalField>& m) {
    if (m.rows() != 4 || m.cols() != 4) throw PreconditionError("Gram matrix must be 4x4");
    if (!m.is_symmetric()) throw PreconditionError("Gram matrix must be symmetric");
    GramCoefficients k = GramCoefficients::zero();
    const Rational half(1, 2);
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) k.a[i][j] = i == j ? m(i, i).scaled(half) : m(i, j);
        k.b[i] = m(i, 3);
    }
    k.c = m(3, 3).scaled(half);
    return build_cubic(std::move(k));
}

/// Reads the coefficients off a cubic form in fourfold_variables() that
/// vanishes on the plane {x = y = z = 0}.
inline GramCubic cubic_from_equation(const QPoly& f) {
    const QPoly F = f.rebase(fourfold_variables());
    if (!F.is_zero() && (!F.is_homogeneous() || F.total_degree() != 3)) {
        throw PreconditionError("the fourfold equation must be a cubic form");
    }
    GramCoefficients k = GramCoefficients::zero();
    const Variables& pv = plane_variables();
    for (const auto& [e, coef] : F.terms()) {
        const unsigned tdeg = e[3] + e[4] + e[5];
        if (tdeg == 3) throw PreconditionError("the cubic does not contain the plane x = y = z = 0");
        Exponents base{e[0], e[1], e[2]};
        const QPoly mono = QPoly::monomial(pv, base, coef);
        if (tdeg == 0) {
            k.c += mono;
        } else if (tdeg == 1) {
            for (std::size_t i = 0; i < 3; ++i) {
                if (e[3 + i] == 1) k.b[i] += mono;
            }
        } else {
            std::array<std::size_t, 2> idx{};
            std::size_t n = 0;
            for (std::size_t i = 0; i < 3; ++i) {
                for (unsigned r = 0; r < e[3 + i]; ++r) idx[n++] = i;
            }
            k.a[idx[0]][idx[1]] += mono;
            if (idx[0] != idx[1]) k.a[idx[1]][idx[0]] += mono;
        }
    }
    return build_cubic(std::move(k));
}

/// Applies the linear change of coordinates v_i -> sum_j m[i][j] v_j on
/// (x, y, z, t0, t1, t2) and reads the result back. The image must still
/// contain the plane {x = y = z = 0}.
inline GramCubic apply_linear_change(const GramCubic& X, const std::array<std::array<Rational, 6>, 6>& m) {
    const Variables& v = fourfold_variables();
    std::vector<QPoly> images;
    for (std::size_t i = 0; i < 6; ++i) {
        QPoly img(v);
        for (std::size_t j = 0; j < 6; ++j) img += QPoly::variable(v, j).scaled(m[i][j]);
        images.push_back(img);
    }
    return cubic_from_equation(X.equation().compose(images));
}

}  // namespace prymfib
