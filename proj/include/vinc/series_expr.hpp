#pragma once

#include <string_view>

#include "vinc/series.hpp"

namespace vinc {

// Evaluate an expression over the atoms B, C, z and nonnegative integer
// literals with + - * ^ and parentheses, to the given truncation order.
// Multiplication is always explicit ("z^2*B*C^3"). Exponents are nonnegative
// integers. Throws std::invalid_argument on malformed input.
ZSeries parse_series_expr(std::string_view text, int order);

}  // namespace vinc
