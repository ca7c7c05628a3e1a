#pragma once

#include <string>

#include "idexp/poly.hpp"

namespace idexp {

// Polynomial grammar: integer literals, declared variable names, '^' with a
// nonnegative integer exponent, '*', '+', '-', parentheses; whitespace is
// insignificant. Unknown identifiers are input errors.
Poly parse_poly(const std::string& text, const Field& field, const VarSplitPtr& split);

// "num/den" or "num" with positive denominator; used for weights.
Rat parse_rational(const std::string& text);

}  // namespace idexp
