#pragma once

#include <array>
#include <string_view>

#include "nijenhuis2d/operator.hpp"
#include "nijenhuis2d/polynomial.hpp"
#include "nijenhuis2d/rational_function.hpp"

namespace nijenhuis2d {

// Grammar (whitespace ignored):
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*
//   unary  := ('-' | '+') unary | power
//   power  := atom ('^' integer)?
//   atom   := integer | 'x' | 'y' | '(' expr ')'
// '^' binds tighter than unary minus, so -x^2 is -(x^2). Juxtaposition is not
// multiplication: "2x" is a syntax error.
//
// All failures throw InputError subclasses carrying the byte span.

// Division must be exact; otherwise NonPolynomialDivision.
BivariatePolynomial parse_poly(std::string_view text);
RationalFunction2 parse_rational(std::string_view text);
// Entries in row-major order; errors are rethrown as EntryInputError.
OperatorField2 parse_operator(const std::array<std::string_view, 4>& entries);

inline constexpr unsigned kMaxExponent = 1024;

}  // namespace nijenhuis2d
