#pragma once

/// Parser and printer for differential operator expressions.
///
/// Grammar (whitespace insignificant):
///   expr     := term (('+'|'-') term)*
///   term     := factor ('*' factor)*
///   factor   := base ('^' uint)?
///   base     := 'D' | 'z' | rational | '(' expr ')'
///   rational := int ('/' uint)?
///
/// The product is the noncommutative operator product; parsing normalizes
/// with D*a = a*D + a'. Failures raise SyntaxError with a byte position.

#include <string>

#include "lgl/diff_op.hpp"

namespace lgl {

DiffOp parse_operator(const std::string& text);

// Canonical text form, highest power of D first; valid parser input for
// operators with polynomial coefficients (round-trips through the grammar).
std::string print_operator(const DiffOp& op);

// Scalar rational-function expressions (no D): the same grammar with '/'
// allowed between factors, e.g. "1/z + 1/(z-1) - 2/(z-2)".
RatFunc parse_rational_function(const std::string& text);

}  // namespace lgl
