#pragma once

// Text form of rational functions in lambda:
//   integers, p/q, the variable l, the field generator g, + - * / ^ and
//   parentheses. Exponents are non-negative integer literals.

#include "orbcol/ratfunc.hpp"

#include <string_view>

namespace orbcol {

/// `g` is accepted only over a quadratic field. Division by the zero
/// polynomial is a ParseError at the offending operator.
RatFunc parse_expr(std::string_view text, const Field& field = Field());

/// Same, but the result must be a polynomial.
Poly parse_poly(std::string_view text, const Field& field = Field());

}  // namespace orbcol
