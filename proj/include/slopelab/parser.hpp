#pragma once

#include <string>

#include "slopelab/knots.hpp"

namespace slopelab {

/// Parse the knot-expression grammar
///   expr := "unknot" | "torus(" int "," int ")" | "mirror(" expr ")"
///         | "sum(" expr ("," expr)+ ")" | "wh(" int "," int "," expr ")"
/// Whitespace-insensitive; integers are signed decimal.  Errors carry the
/// byte offset and what was expected.
KnotExprPtr parse_knot_expr(const std::string& text);

} // namespace slopelab
