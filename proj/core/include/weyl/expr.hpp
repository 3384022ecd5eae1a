#pragma once

#include "weyl/diffop.hpp"

#include <string>
#include <vector>

namespace weyl {

/// Parse an operator expression over {x, D, i, integer/rational literals,
/// +, -, *, ^, parentheses}. Multiplication is explicit and composes left to
/// right; ^ binds tighter than * and takes nonnegative integer exponents.
/// Err::SyntaxError carries line:column; Err::NonIntegerExponent rejects
/// fractional or negative exponents.
PolyDiffOp parse_operator(const std::string& text);

/// Parse a commutative polynomial over the given variables (plus i and
/// rational literals), same grammar.
MPoly parse_poly(const std::string& text, const std::vector<std::string>& vars);

/// Parse a constant of Q(i).
GaussRat parse_gaussrat(const std::string& text);

} // namespace weyl
