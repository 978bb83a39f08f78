#pragma once

// Sparse multivariate polynomials over an exact coefficient field.
//
// A polynomial is a map from exponent vectors to nonzero coefficients, kept
// in graded reverse lexicographic order (largest term first). Every
// polynomial carries its variable context; binary operations require equal
// contexts and equal fields.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "prymfib/poly/error.hpp"
#include "prymfib/poly/field.hpp"

namespace prymfib {

using Exponent = std::uint32_t;
using Exponents = std::vector<Exponent>;

/// Largest exponent any single variable may carry.
inline constexpr Exponent kMaxExponent = 1U << 20;

inline std::uint64_t exponent_sum(const Exponents& e) {
    return std::accumulate(e.begin(), e.end(), std::uint64_t{0});
}

/// Strict "a comes before b" for graded reverse lexicographic order with
/// x_0 > x_1 > ... > x_{n-1}.
struct GrevlexGreater {
    bool operator()(const Exponents& a, const Exponents& b) const {
        const auto da = exponent_sum(a);
        const auto db = exponent_sum(b);
        if (da != db) return da > db;
        for (std::size_t i = a.size(); i-- > 0;) {
            if (a[i] != b[i]) return a[i] < b[i];
        }
        return false;
    }
};

inline Exponent checked_exponent_add(Exponent a, Exponent b) {
    const std::uint64_t s = std::uint64_t{a} + b;
    if (s > kMaxExponent) throw PreconditionError("exponent overflow (limit " + std::to_string(kMaxExponent) + ")");
    return static_cast<Exponent>(s);
}

/// Ordered list of variable names shared by a family of polynomials.
class Variables {
public:
    Variables() : names_(std::make_shared<const std::vector<std::string>>()) {}
    Variables(std::initializer_list<std::string> names) : Variables(std::vector<std::string>(names)) {}
    explicit Variables(std::vector<std::string> names) {
        for (std::size_t i = 0; i < names.size(); ++i) {
            if (!is_identifier(names[i])) throw PreconditionError("invalid variable name '" + names[i] + "'");
            for (std::size_t j = 0; j < i; ++j) {
                if (names[i] == names[j]) throw PreconditionError("duplicate variable name '" + names[i] + "'");
            }
        }
        names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
    }

    std::size_t size() const noexcept { return names_->size(); }
    const std::string& operator[](std::size_t i) const { return (*names_)[i]; }
    const std::vector<std::string>& names() const noexcept { return *names_; }

    std::optional<std::size_t> find(std::string_view name) const {
        for (std::size_t i = 0; i < names_->size(); ++i) {
            if ((*names_)[i] == name) return i;
        }
        return std::nullopt;
    }
    std::size_t index_of(std::string_view name) const {
        if (auto i = find(name)) return *i;
        throw PreconditionError("unknown variable '" + std::string(name) + "'");
    }

    bool operator==(const Variables& other) const {
        return names_ == other.names_ || *names_ == *other.names_;
    }

    static bool is_identifier(std::string_view s) {
        if (s.empty()) return false;
        auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; };
        if (!alpha(s.front())) return false;
        return std::all_of(s.begin(), s.end(), [&](char c) { return alpha(c) || (c >= '0' && c <= '9'); });
    }

private:
    std::shared_ptr<const std::vector<std::string>> names_;
};

template <CoefficientField Field>
class Polynomial {
public:
    using field_type = Field;
    using coeff_type = typename Field::value_type;
    using term_map = std::map<Exponents, coeff_type, GrevlexGreater>;

    /// Marker returned by total_degree() for the zero polynomial.
    static constexpr int kZeroDegree = std::numeric_limits<int>::min();

    explicit Polynomial(Variables vars, Field field = Field{}) : vars_(std::move(vars)), field_(std::move(field)) {}

    static Polynomial constant(Variables vars, const coeff_type& c, Field field = Field{}) {
        Polynomial p(std::move(vars), std::move(field));
        p.add_term(Exponents(p.vars_.size(), 0), c);
        return p;
    }
    static Polynomial variable(Variables vars, std::size_t index, Field field = Field{}) {
        if (index >= vars.size()) throw PreconditionError("variable index out of range");
        Polynomial p(std::move(vars), std::move(field));
        Exponents e(p.vars_.size(), 0);
        e[index] = 1;
        p.add_term(std::move(e), p.field_.one());
        return p;
    }
    static Polynomial variable(Variables vars, std::string_view name, Field field = Field{}) {
        const auto i = vars.index_of(name);
        return variable(std::move(vars), i, std::move(field));
    }
    static Polynomial monomial(Variables vars, Exponents e, const coeff_type& c, Field field = Field{}) {
        if (e.size() != vars.size()) throw PreconditionError("exponent vector length does not match context");
        Polynomial p(std::move(vars), std::move(field));
        p.add_term(std::move(e), c);
        return p;
    }

    Polynomial zero_like() const { return Polynomial(vars_, field_); }
    Polynomial constant_like(const coeff_type& c) const { return constant(vars_, c, field_); }
    Polynomial constant_like(long long c) const { return constant(vars_, field_.from_int(c), field_); }
    Polynomial variable_like(std::size_t index) const { return variable(vars_, index, field_); }

    const Variables& vars() const noexcept { return vars_; }
    const Field& field() const noexcept { return field_; }
    const term_map& terms() const noexcept { return terms_; }
    std::size_t term_count() const noexcept { return terms_.size(); }

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && exponent_sum(terms_.begin()->first) == 0);
    }

    int total_degree() const {
        if (terms_.empty()) return kZeroDegree;
        return static_cast<int>(exponent_sum(terms_.begin()->first));
    }
    unsigned degree_in(std::size_t var) const {
        Exponent d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
        return d;
    }
    bool depends_on(std::size_t var) const { return degree_in(var) > 0; }

    /// Indices of the variables that actually occur.
    std::vector<std::size_t> support() const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            if (depends_on(i)) out.push_back(i);
        }
        return out;
    }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        const auto d = exponent_sum(terms_.begin()->first);
        return std::all_of(terms_.begin(), terms_.end(), [&](const auto& t) { return exponent_sum(t.first) == d; });
    }

    coeff_type coefficient(const Exponents& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? field_.zero() : it->second;
    }
    coeff_type constant_term() const { return coefficient(Exponents(vars_.size(), 0)); }

    /// Leading term in grevlex order. Precondition: nonzero.
    const Exponents& leading_exponents() const {
        require_nonzero("leading_exponents");
        return terms_.begin()->first;
    }
    const coeff_type& leading_coefficient() const {
        require_nonzero("leading_coefficient");
        return terms_.begin()->second;
    }

    /// Adds c*x^e in place; zero coefficients are never stored.
    void add_term(Exponents e, const coeff_type& c) {
        if (e.size() != vars_.size()) throw PreconditionError("exponent vector length does not match context");
        for (auto v : e) {
            if (v > kMaxExponent) throw PreconditionError("exponent overflow (limit " + std::to_string(kMaxExponent) + ")");
        }
        if (field_.is_zero(c)) return;
        auto [it, inserted] = terms_.try_emplace(std::move(e), c);
        if (!inserted) {
            it->second = field_.add(it->second, c);
            if (field_.is_zero(it->second)) terms_.erase(it);
        }
    }

    Polynomial operator-() const {
        Polynomial r(vars_, field_);
        for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, field_.neg(c));
        return r;
    }

    Polynomial& operator+=(const Polynomial& o) {
        require_compatible(o);
        for (const auto& [e, c] : o.terms_) accumulate(e, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        require_compatible(o);
        for (const auto& [e, c] : o.terms_) accumulate(e, field_.neg(c));
        return *this;
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.require_compatible(b);
        Polynomial r(a.vars_, a.field_);
        if (a.is_zero() || b.is_zero()) return r;
        const std::size_t n = a.vars_.size();
        Exponents e(n);
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                for (std::size_t i = 0; i < n; ++i) e[i] = checked_exponent_add(ea[i], eb[i]);
                r.accumulate(e, a.field_.mul(ca, cb));
            }
        }
        return r;
    }

    Polynomial scaled(const coeff_type& s) const {
        Polynomial r(vars_, field_);
        if (field_.is_zero(s)) return r;
        for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, field_.mul(c, s));
        return r;
    }

    Polynomial pow(unsigned n) const {
        Polynomial result = constant_like(field_.one());
        Polynomial base = *this;
        while (n != 0) {
            if (n & 1U) result = result * base;
            n >>= 1U;
            if (n != 0) base = base * base;
        }
        return result;
    }

    /// Formal partial derivative.
    Polynomial derivative(std::size_t var) const {
        if (var >= vars_.size()) throw PreconditionError("variable index out of range");
        Polynomial r(vars_, field_);
        for (const auto& [e, c] : terms_) {
            if (e[var] == 0) continue;
            Exponents d = e;
            --d[var];
            r.accumulate(d, field_.mul(c, field_.from_int(e[var])));
        }
        return r;
    }
    Polynomial derivative(std::string_view name) const { return derivative(vars_.index_of(name)); }

    coeff_type evaluate(std::span<const coeff_type> point) const {
        if (point.size() != vars_.size()) throw PreconditionError("evaluation point has wrong dimension");
        coeff_type sum = field_.zero();
        for (const auto& [e, c] : terms_) {
            coeff_type t = c;
            for (std::size_t i = 0; i < e.size(); ++i) {
                for (Exponent k = 0; k < e[i]; ++k) t = field_.mul(t, point[i]);
            }
            sum = field_.add(sum, t);
        }
        return sum;
    }

    /// Simultaneous substitution x_i -> images[i]. All images share the
    /// target context (which may differ from this polynomial's).
    Polynomial compose(std::span<const Polynomial> images) const {
        if (images.size() != vars_.size()) throw PreconditionError("compose needs one image per variable");
        if (images.empty()) return *this;
        const Polynomial& proto = images.front();
        for (const auto& im : images) proto.require_compatible(im);
        std::vector<std::vector<Polynomial>> powers(vars_.size());
        auto power = [&](std::size_t i, Exponent k) -> const Polynomial& {
            auto& cache = powers[i];
            if (cache.empty()) cache.push_back(proto.constant_like(field_.one()));
            while (cache.size() <= k) cache.push_back(cache.back() * images[i]);
            return cache[k];
        };
        Polynomial r = proto.zero_like();
        for (const auto& [e, c] : terms_) {
            Polynomial t = proto.constant_like(c);
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] != 0) t = t * power(i, e[i]);
            }
            r += t;
        }
        return r;
    }

    /// Replaces one variable by a polynomial in the same context.
    Polynomial substitute(std::size_t var, const Polynomial& value) const {
        std::vector<Polynomial> images;
        images.reserve(vars_.size());
        for (std::size_t i = 0; i < vars_.size(); ++i) images.push_back(i == var ? value : variable_like(i));
        return compose(images);
    }

    /// Moves the polynomial into another context, matching variables by name.
    /// Variables absent from the target must not occur.
    Polynomial rebase(const Variables& target) const {
        std::vector<std::optional<std::size_t>> map(vars_.size());
        for (std::size_t i = 0; i < vars_.size(); ++i) map[i] = target.find(vars_[i]);
        Polynomial r(target, field_);
        for (const auto& [e, c] : terms_) {
            Exponents ne(target.size(), 0);
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                if (!map[i]) throw PreconditionError("variable '" + vars_[i] + "' does not exist in target context");
                ne[*map[i]] = e[i];
            }
            r.terms_.emplace(std::move(ne), c);
        }
        return r;
    }

    /// Applies `fn` to every coefficient, producing a polynomial over `target`.
    template <CoefficientField G, class Fn>
    Polynomial<G> map_coefficients(G target, Fn fn) const {
        Polynomial<G> r(vars_, target);
        for (const auto& [e, c] : terms_) r.add_term(e, fn(c));
        return r;
    }

    bool operator==(const Polynomial& o) const {
        if (!(vars_ == o.vars_) || !(field_ == o.field_) || terms_.size() != o.terms_.size()) return false;
        auto it = o.terms_.begin();
        for (const auto& [e, c] : terms_) {
            if (e != it->first || !field_.equal(c, it->second)) return false;
            ++it;
        }
        return true;
    }

    void require_compatible(const Polynomial& o) const {
        if (!(vars_ == o.vars_)) throw PreconditionError("polynomials live in different variable contexts");
        if (!(field_ == o.field_)) throw PreconditionError("polynomials live over different fields");
    }

private:
    void accumulate(const Exponents& e, const coeff_type& c) {
        if (field_.is_zero(c)) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second = field_.add(it->second, c);
            if (field_.is_zero(it->second)) terms_.erase(it);
        }
    }
    void require_nonzero(const char* what) const {
        if (terms_.empty()) throw PreconditionError(std::string(what) + " of the zero polynomial");
    }

    Variables vars_;
    Field field_;
    term_map terms_;
};

using QPoly = Polynomial<RationalField>;
using FpPoly = Polynomial<PrimeField>;

/// Reduction of a rational polynomial modulo p.
inline FpPoly reduce_mod(const QPoly& f, const PrimeField& fp) {
    return f.map_coefficients(fp, [&](const Rational& c) { return fp.from_rational(c); });
}

/// Canonical compact text: terms in descending grevlex order, explicit "*",
/// "^" for powers, no spaces. Accepted back by parse_polynomial.
template <CoefficientField Field>
std::string to_string(const Polynomial<Field>& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        std::string coeff = p.field().format(c);
        bool negative = !coeff.empty() && coeff.front() == '-';
        if (negative) coeff.erase(0, 1);
        if (negative) {
            out += "-";
        } else if (!first) {
            out += "+";
        }
        first = false;
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += p.vars()[i];
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty()) {
            out += coeff;
        } else if (coeff == "1") {
            out += mono;
        } else {
            out += coeff + "*" + mono;
        }
    }
    return out;
}

}  // namespace prymfib
