#pragma once

// Text form of polynomials.
//
//   expr    := sign? product (('+' | '-') sign? product)*
//   product := power ('*' power)*
//   power   := atom ('^' uint)?
//   atom    := uint ('/' uint)? | identifier | '(' expr ')'
//
// Whitespace between tokens is ignored. Positions in errors are byte offsets.

#include <cctype>
#include <string>
#include <string_view>

#include "prymfib/poly/polynomial.hpp"

namespace prymfib {

/// Largest exponent literal the parser accepts.
inline constexpr unsigned long kMaxExponentLiteral = 65535;

namespace detail {

template <CoefficientField Field>
class PolyParser {
public:
    PolyParser(std::string_view text, const Variables& vars, const Field& field)
        : text_(text), vars_(vars), field_(field) {}

    Polynomial<Field> run() {
        skip_ws();
        if (pos_ == text_.size()) throw ParseError("empty polynomial", pos_);
        Polynomial<Field> p = expr();
        skip_ws();
        if (pos_ != text_.size()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
        return p;
    }

private:
    using Poly = Polynomial<Field>;

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    [[noreturn]] void unexpected() {
        skip_ws();
        if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
        throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    }

    Poly signed_product() {
        bool negate = false;
        for (;;) {
            if (accept('-')) {
                negate = !negate;
            } else if (accept('+')) {
            } else {
                break;
            }
        }
        Poly p = product();
        return negate ? -p : p;
    }

    Poly expr() {
        Poly acc = signed_product();
        for (;;) {
            if (accept('+')) {
                acc += signed_product();
            } else if (accept('-')) {
                acc -= signed_product();
            } else {
                return acc;
            }
        }
    }

    Poly product() {
        Poly acc = power();
        while (accept('*')) acc = checked([&] { return acc * power(); });
        return acc;
    }

    Poly power() {
        Poly base = atom();
        if (!accept('^')) return base;
        skip_ws();
        const std::size_t at = pos_;
        std::string digits = read_digits();
        if (digits.empty()) unexpected();
        if (digits.size() > 5 || std::stoul(digits) > kMaxExponentLiteral) {
            throw ParseError("exponent overflow (limit " + std::to_string(kMaxExponentLiteral) + ")", at);
        }
        const auto n = static_cast<unsigned>(std::stoul(digits));
        try {
            return base.pow(n);
        } catch (const PreconditionError&) {
            throw ParseError("exponent overflow", at);
        }
    }

    Poly atom() {
        skip_ws();
        if (pos_ >= text_.size()) unexpected();
        const std::size_t at = pos_;
        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num = read_digits();
            Integer den = 1;
            if (accept('/')) {
                skip_ws();
                const std::size_t dat = pos_;
                std::string d = read_digits();
                if (d.empty()) unexpected();
                den = Integer(d);
                if (den == 0) throw ParseError("zero denominator", dat);
            }
            Rational q(Integer(num), den);
            q.canonicalize();
            try {
                return Poly::constant(vars_, field_.from_rational(q), field_);
            } catch (const BadPrimeError&) {
                throw ParseError("denominator not invertible in " + field_name(), at);
            }
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t end = pos_;
            while (end < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_')) {
                ++end;
            }
            std::string_view name = text_.substr(pos_, end - pos_);
            auto idx = vars_.find(name);
            if (!idx) throw ParseError("unknown variable '" + std::string(name) + "'", at);
            pos_ = end;
            return Poly::variable(vars_, *idx, field_);
        }
        if (c == '(') {
            ++pos_;
            Poly inner = expr();
            if (!accept(')')) unexpected();
            return inner;
        }
        unexpected();
    }

    std::string read_digits() {
        std::size_t end = pos_;
        while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end]))) ++end;
        std::string out(text_.substr(pos_, end - pos_));
        pos_ = end;
        return out;
    }

    template <class Fn>
    Poly checked(Fn fn) {
        const std::size_t at = pos_;
        try {
            return fn();
        } catch (const PreconditionError&) {
            throw ParseError("exponent overflow", at);
        }
    }

    std::string field_name() const {
        if constexpr (requires { field_.name(); }) {
            return field_.name();
        } else {
            return "the coefficient field";
        }
    }

    std::string_view text_;
    const Variables& vars_;
    const Field& field_;
    std::size_t pos_ = 0;
};

}  // namespace detail

template <CoefficientField Field>
Polynomial<Field> parse_polynomial(std::string_view text, const Variables& vars, const Field& field) {
    return detail::PolyParser<Field>(text, vars, field).run();
}

inline QPoly parse_polynomial(std::string_view text, const Variables& vars) {
    return parse_polynomial(text, vars, RationalField{});
}

}  // namespace prymfib
