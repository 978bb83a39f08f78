#pragma once

// Input documents: flat key = value text with sections [cubic], [hyperplane],
// [lines] and [options]. Polynomial values are quoted strings.
//
//   [cubic]            a00 .. a22, b0 .. b2, c         (coefficients)
//                   or equation = "..."               (cubic in x,y,z,t0,t1,t2)
//                   or g00 .. g33 (upper triangle)     (Gram matrix as displayed)
//   [hyperplane]       l1 = "<linear form in t1,t2>", l0 = "<linear form in x,y,z>"
//   [lines]            line = "<linear form>"        (repeatable)
//   [options]          primes = "7, 11", seed = 0

#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "prymfib/cubic.hpp"

namespace prymfib {

/// Input error carrying a 1-based line and column.
class InputError : public Error {
public:
    InputError(std::size_t line, std::size_t column, const std::string& msg)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
          line_(line),
          column_(column) {}
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

struct InputValue {
    std::string text;
    std::size_t line = 0;
    /// column of the first character of `text`
    std::size_t column = 0;
};

struct InputDocument {
    std::string source;
    GramCubic cubic = build_cubic({});
    std::optional<HyperplaneSpec> hyperplane;
    std::vector<PlaneCurve> lines;
    std::vector<std::uint64_t> primes = default_probe_primes();
    std::uint64_t seed = 0;
};

namespace detail {

inline std::string trim(const std::string& s, std::size_t* lead = nullptr) {
    std::size_t b = 0;
    while (b < s.size() && (s[b] == ' ' || s[b] == '\t' || s[b] == '\r')) ++b;
    std::size_t e = s.size();
    while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r')) --e;
    if (lead) *lead = b;
    return s.substr(b, e - b);
}

using SectionMap = std::map<std::string, std::vector<std::pair<std::string, InputValue>>>;

inline SectionMap read_sections(const std::string& text) {
    static const char* known[] = {"cubic", "hyperplane", "lines", "options"};
    SectionMap out;
    std::string section;
    std::istringstream in(text);
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::size_t lead = 0;
        // strip comments outside quotes
        bool quoted = false;
        for (std::size_t i = 0; i < raw.size(); ++i) {
            if (raw[i] == '"') quoted = !quoted;
            if (raw[i] == '#' && !quoted) {
                raw.resize(i);
                break;
            }
        }
        const std::string line = trim(raw, &lead);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') throw InputError(lineno, lead + 1, "unterminated section header");
            section = trim(line.substr(1, line.size() - 2));
            bool ok = false;
            for (const char* k : known) ok = ok || section == k;
            if (!ok) throw InputError(lineno, lead + 2, "unknown section [" + section + "]");
            out[section];
            continue;
        }
        if (section.empty()) throw InputError(lineno, lead + 1, "entry outside of any section");
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw InputError(lineno, lead + 1, "expected key = value");
        const std::string key = trim(line.substr(0, eq));
        if (key.empty()) throw InputError(lineno, lead + 1, "missing key");
        std::size_t vlead = 0;
        std::string value = trim(line.substr(eq + 1), &vlead);
        std::size_t column = lead + eq + 1 + vlead + 1;
        if (!value.empty() && value.front() == '"') {
            if (value.size() < 2 || value.back() != '"') throw InputError(lineno, column, "unterminated string");
            value = value.substr(1, value.size() - 2);
            ++column;
        }
        for (const auto& [k, v] : out[section]) {
            if (k == key && key != "line") throw InputError(lineno, lead + 1, "duplicate key " + key);
        }
        out[section].push_back({key, InputValue{value, lineno, column}});
    }
    return out;
}

inline QPoly parse_value(const InputValue& v, const Variables& vars) {
    try {
        return parse_polynomial(v.text, vars);
    } catch (const ParseError& e) {
        throw InputError(v.line, v.column + e.position(), e.bare_message());
    }
}

inline std::uint64_t parse_unsigned(const InputValue& v) {
    std::size_t used = 0;
    unsigned long long x = 0;
    try {
        x = std::stoull(v.text, &used);
    } catch (const std::exception&) {
        throw InputError(v.line, v.column, "expected a nonnegative integer, got '" + v.text + "'");
    }
    if (used != v.text.size() || v.text.front() == '-') {
        throw InputError(v.line, v.column, "expected a nonnegative integer, got '" + v.text + "'");
    }
    return x;
}

inline std::vector<std::uint64_t> parse_prime_list(const InputValue& v) {
    std::vector<std::uint64_t> out;
    std::size_t start = 0;
    while (start <= v.text.size()) {
        auto comma = v.text.find(',', start);
        if (comma == std::string::npos) comma = v.text.size();
        std::size_t lead = 0;
        const std::string item = trim(v.text.substr(start, comma - start), &lead);
        if (item.empty()) throw InputError(v.line, v.column + start, "empty entry in prime list");
        out.push_back(parse_unsigned({item, v.line, v.column + start + lead}));
        start = comma + 1;
    }
    return out;
}

template <class Fn>
auto at_value(const InputValue& v, Fn&& fn) {
    try {
        return fn();
    } catch (const InputError&) {
        throw;
    } catch (const Error& e) {
        throw InputError(v.line, v.column, e.what());
    }
}

inline GramCubic read_cubic(const std::vector<std::pair<std::string, InputValue>>& entries) {
    static const char* coeff_keys[] = {"a00", "a01", "a02", "a11", "a12", "a22", "b0", "b1", "b2", "c"};
    static const char* gram_keys[] = {"g00", "g01", "g02", "g03", "g11", "g12", "g13", "g22", "g23", "g33"};
    std::map<std::string, InputValue> kv;
    for (const auto& [k, v] : entries) kv[k] = v;
    auto has = [&](const char* k) { return kv.count(k) != 0; };
    bool any_coeff = false, any_gram = false;
    for (const char* k : coeff_keys) any_coeff = any_coeff || has(k);
    for (const char* k : gram_keys) any_gram = any_gram || has(k);
    const bool eq = has("equation");
    const InputValue first = entries.empty() ? InputValue{} : entries.front().second;
    if (int(any_coeff) + int(any_gram) + int(eq) != 1) {
        throw InputError(first.line, 1,
                         "[cubic] needs exactly one of: coefficients a00..c, equation, or Gram entries g00..g33");
    }
    for (const auto& [k, v] : kv) {
        bool known = k == "equation";
        for (const char* c : coeff_keys) known = known || k == c;
        for (const char* c : gram_keys) known = known || k == c;
        if (!known) throw InputError(v.line, 1, "unknown key '" + k + "' in [cubic]");
    }
    if (eq) {
        const auto& v = kv["equation"];
        return at_value(v, [&] { return cubic_from_equation(parse_value(v, fourfold_variables())); });
    }
    const char* const* keys = any_coeff ? coeff_keys : gram_keys;
    std::vector<QPoly> vals;
    for (int i = 0; i < 10; ++i) {
        if (!has(keys[i])) throw InputError(first.line, 1, std::string("[cubic] is missing ") + keys[i]);
        vals.push_back(parse_value(kv[keys[i]], plane_variables()));
    }
    const InputValue& where = kv[keys[0]];
    if (any_coeff) {
        GramCoefficients k;
        k.a[0][0] = vals[0];
        k.a[0][1] = k.a[1][0] = vals[1];
        k.a[0][2] = k.a[2][0] = vals[2];
        k.a[1][1] = vals[3];
        k.a[1][2] = k.a[2][1] = vals[4];
        k.a[2][2] = vals[5];
        k.b = {vals[6], vals[7], vals[8]};
        k.c = vals[9];
        return at_value(where, [&] { return build_cubic(k); });
    }
    PolyMatrix<RationalField> m(4, 4, vals[0]);
    std::size_t n = 0;
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = i; j < 4; ++j) {
            m.set(i, j, vals[n]);
            m.set(j, i, vals[n]);
            ++n;
        }
    }
    return at_value(where, [&] { return cubic_from_gram_matrix(m); });
}

inline HyperplaneSpec read_hyperplane(const std::vector<std::pair<std::string, InputValue>>& entries) {
    HyperplaneSpec H;
    for (const auto& [k, v] : entries) {
        if (k == "l1") {
            const Variables tv{"t1", "t2"};
            const QPoly l1 = parse_value(v, tv);
            for (const auto& [e, c] : l1.terms()) {
                if (e[0] + e[1] != 1) throw InputError(v.line, v.column, "l1 must be a linear form in t1, t2");
            }
            H.l1 = {l1.coefficient({1, 0}), l1.coefficient({0, 1})};
        } else if (k == "l0") {
            H.l0 = parse_value(v, plane_variables());
            at_value(v, [&] {
                H.validate();
                return 0;
            });
        } else {
            throw InputError(v.line, 1, "unknown key '" + k + "' in [hyperplane]");
        }
    }
    return H;
}

}  // namespace detail

/// Parses an input document; all errors are InputError with a position.
inline InputDocument parse_input_document(const std::string& text, std::string source = "<input>") {
    const auto sections = detail::read_sections(text);
    InputDocument doc;
    doc.source = std::move(source);
    const auto cubic = sections.find("cubic");
    if (cubic == sections.end() || cubic->second.empty()) throw InputError(1, 1, "missing [cubic] section");
    doc.cubic = detail::read_cubic(cubic->second);
    if (const auto h = sections.find("hyperplane"); h != sections.end()) doc.hyperplane = detail::read_hyperplane(h->second);
    if (const auto l = sections.find("lines"); l != sections.end()) {
        for (const auto& [k, v] : l->second) {
            if (k != "line") throw InputError(v.line, 1, "unknown key '" + k + "' in [lines]");
            const QPoly p = detail::parse_value(v, plane_variables());
            doc.lines.push_back(detail::at_value(v, [&] { return PlaneCurve(p, 1); }));
        }
    }
    if (const auto o = sections.find("options"); o != sections.end()) {
        for (const auto& [k, v] : o->second) {
            if (k == "primes") {
                doc.primes = detail::parse_prime_list(v);
            } else if (k == "seed") {
                doc.seed = detail::parse_unsigned(v);
            } else {
                throw InputError(v.line, 1, "unknown key '" + k + "' in [options]");
            }
        }
    }
    return doc;
}

}  // namespace prymfib
