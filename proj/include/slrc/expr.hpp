#pragma once

#include <string>
#include <vector>

#include "slrc/code.hpp"

namespace slrc {

/// Result of evaluating a code expression: the top-level tensor factors in
/// order, and their Kronecker product (equal to factors[0] when there is
/// only one).
struct BuiltCode {
    std::vector<LinearCode> factors;
    LinearCode code;
};

/// Grammar:
///   product := term (("x" | "⊗") term)*
///   term    := "P(" q ")" | "D(" q "," n ")" | "R(" q "," n "," k ")"
///            | "B(" q "," n "," d ")"
///            | "punct(" product ";" i1 ("," i)* ")"     -- 1-based positions
///            | "(" product ")"
/// Parse failures raise Error(parse_error) with a caret diagnostic;
/// construction failures raise the constructor's own error.
BuiltCode parse_code_expr(const std::string& text);

} // namespace slrc
