#pragma once

// Truncated univariate power series and implicit-function jets.

#include <algorithm>
#include <vector>

#include "prymfib/poly/algebra.hpp"

namespace prymfib {

/// c_0 + c_1 t + ... + c_N t^N + O(t^(N+1)).
template <CoefficientField Field>
class JetSeries {
public:
    using value_type = typename Field::value_type;

    JetSeries(unsigned order, Field field = Field{})
        : field_(std::move(field)), coeffs_(order + 1, field_.zero()) {}
    JetSeries(std::vector<value_type> coeffs, Field field) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) throw PreconditionError("jet needs at least the constant coefficient");
    }

    static JetSeries constant(unsigned order, const value_type& c, Field field = Field{}) {
        JetSeries s(order, field);
        s.coeffs_[0] = c;
        return s;
    }
    static JetSeries identity(unsigned order, Field field = Field{}) {
        JetSeries s(order, field);
        if (order >= 1) s.coeffs_[1] = s.field_.one();
        return s;
    }

    unsigned order() const noexcept { return static_cast<unsigned>(coeffs_.size() - 1); }
    const Field& field() const noexcept { return field_; }
    const std::vector<value_type>& coefficients() const noexcept { return coeffs_; }
    const value_type& operator[](std::size_t k) const { return coeffs_.at(k); }
    void set(std::size_t k, value_type v) { coeffs_.at(k) = std::move(v); }

    JetSeries truncated(unsigned order) const {
        std::vector<value_type> c(coeffs_.begin(), coeffs_.begin() + std::min<std::size_t>(order + 1, coeffs_.size()));
        return JetSeries(std::move(c), field_);
    }

    friend JetSeries operator+(const JetSeries& a, const JetSeries& b) {
        const unsigned n = std::min(a.order(), b.order());
        JetSeries r(n, a.field_);
        for (unsigned k = 0; k <= n; ++k) r.coeffs_[k] = a.field_.add(a.coeffs_[k], b.coeffs_[k]);
        return r;
    }
    friend JetSeries operator-(const JetSeries& a, const JetSeries& b) {
        const unsigned n = std::min(a.order(), b.order());
        JetSeries r(n, a.field_);
        for (unsigned k = 0; k <= n; ++k) r.coeffs_[k] = a.field_.sub(a.coeffs_[k], b.coeffs_[k]);
        return r;
    }
    friend JetSeries operator*(const JetSeries& a, const JetSeries& b) {
        const unsigned n = std::min(a.order(), b.order());
        JetSeries r(n, a.field_);
        const auto& f = a.field_;
        for (unsigned i = 0; i <= n; ++i) {
            if (f.is_zero(a.coeffs_[i])) continue;
            for (unsigned j = 0; i + j <= n; ++j) {
                r.coeffs_[i + j] = f.add(r.coeffs_[i + j], f.mul(a.coeffs_[i], b.coeffs_[j]));
            }
        }
        return r;
    }
    JetSeries scaled(const value_type& s) const {
        JetSeries r = *this;
        for (auto& c : r.coeffs_) c = field_.mul(c, s);
        return r;
    }

    bool operator==(const JetSeries& o) const {
        if (coeffs_.size() != o.coeffs_.size()) return false;
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            if (!field_.equal(coeffs_[k], o.coeffs_[k])) return false;
        }
        return true;
    }

private:
    Field field_;
    std::vector<value_type> coeffs_;
};

/// f(t, y(t)) as a series, for f depending only on the variables xvar, yvar.
template <CoefficientField Field>
JetSeries<Field> substitute_series(const Polynomial<Field>& f, std::size_t xvar, std::size_t yvar,
                                   const JetSeries<Field>& y) {
    const unsigned n = y.order();
    const auto& field = f.field();
    for (std::size_t v : f.support()) {
        if (v != xvar && v != yvar) throw PreconditionError("series substitution needs a bivariate polynomial");
    }
    // Horner in y over the series coefficients p_j(t).
    const auto cy = coefficients_in(f, yvar);
    JetSeries<Field> acc(n, field);
    for (std::size_t j = cy.size(); j-- > 0;) {
        JetSeries<Field> pj(n, field);
        for (const auto& [e, c] : cy[j].terms()) {
            if (e[xvar] <= n) pj.set(e[xvar], field.add(pj[e[xvar]], c));
        }
        acc = acc * y + pj;
    }
    return acc;
}

/// The branch y(x) = c_1 x + ... + c_N x^N of f(x, y) = 0 through the origin.
/// Requires f(0,0) = 0 and df/dy(0,0) != 0.
template <CoefficientField Field>
JetSeries<Field> implicit_jet(const Polynomial<Field>& f, std::size_t xvar, std::size_t yvar, unsigned order) {
    const auto& field = f.field();
    std::vector<typename Field::value_type> origin(f.vars().size(), field.zero());
    if (!field.is_zero(f.evaluate(origin))) throw PreconditionError("implicit_jet: the origin is not on the curve");
    const auto fy0 = f.derivative(yvar).evaluate(origin);
    if (field.is_zero(fy0)) throw PreconditionError("implicit_jet: df/dy vanishes at the origin");
    JetSeries<Field> y(order, field);
    for (unsigned k = 1; k <= order; ++k) {
        const auto residual = substitute_series(f, xvar, yvar, y.truncated(order))[k];
        y.set(k, field.neg(field.div(residual, fy0)));
    }
    return y;
}

template <CoefficientField Field>
JetSeries<Field> implicit_jet(const Polynomial<Field>& f, std::string_view xvar, std::string_view yvar,
                              unsigned order) {
    return implicit_jet(f, f.vars().index_of(xvar), f.vars().index_of(yvar), order);
}

}  // namespace prymfib
