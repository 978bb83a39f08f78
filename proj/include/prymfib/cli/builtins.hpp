#pragma once

// Worked examples shipped as input documents.

#include <string>
#include <vector>

#include "prymfib/cli/input.hpp"

namespace prymfib {

struct BuiltinExample {
    std::string id;
    std::string summary;
    std::string document;
};

inline const std::vector<BuiltinExample>& builtin_examples() {
    static const std::vector<BuiltinExample> all{
        {"smooth-quintic", "smooth quintic D_H; the free first row is filled with fixed forms",
         R"doc([cubic]
# Gram matrix of q in (t0, t1, t2, s), upper triangle; diagonal entries are 2*a_ii and 2*c
g00 = "2*y"
g01 = "z"
g02 = "x+y"
g03 = "x*z"
g11 = "x+y+z"
g12 = "x"
g13 = "0"
g22 = "x"
g23 = "z^2"
g33 = "x^3+y^3+z^3"

[hyperplane]
# t0 = l1(t1, t2) + l0(x, y, z)
l1 = "0"
l0 = "0"
)doc"},
        {"first-type-line", "the line L of the hyperplane section is of the first type",
         R"doc([cubic]
equation = "x*t1^2+y*t2^2+z*t1*t2"

[hyperplane]
l1 = "0"
l0 = "0"
)doc"},
        {"tangent-pair", "D_H = x*y*(x^3+y^3+z^3) meets D6 with fifteen tangencies",
         R"doc([cubic]
g00 = "0"
g01 = "z-2*y"
g02 = "z-2*x"
g03 = "(x-y)*(x-2*y)"
g11 = "x"
g12 = "0"
g13 = "0"
g22 = "y"
g23 = "0"
g33 = "x^3+y^3+z^3"

[hyperplane]
l1 = "0"
l0 = "0"
)doc"},
    };
    return all;
}

inline const BuiltinExample& find_builtin(const std::string& id) {
    for (const auto& e : builtin_examples()) {
        if (e.id == id) return e;
    }
    std::string known;
    for (const auto& e : builtin_examples()) known += (known.empty() ? "" : ", ") + e.id;
    throw PreconditionError("unknown example '" + id + "' (known: " + known + ")");
}

inline InputDocument builtin_document(const std::string& id) {
    const auto& e = find_builtin(id);
    return parse_input_document(e.document, e.id);
}

}  // namespace prymfib
