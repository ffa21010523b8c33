#pragma once

#include <string>

namespace bayesmosaic {

inline constexpr int kDefaultPrecision = 4;
inline constexpr int kMaxPrecision = 12;

// Fixed-point text with `digits` decimals, rounding half away from zero.
// Display only; arithmetic never goes through this.
std::string format_fixed(double value, int digits = kDefaultPrecision);

// Compact deterministic decimal for SVG coordinates: at most 9 decimals,
// trailing zeros removed, no exponent, "-0" normalized to "0".
std::string format_coord(double value);

// Shortest fixed notation with at least 2 decimals that reproduces `value`
// to 1e-12; used in human-readable violation messages ("1.10").
std::string format_readable(double value);

}  // namespace bayesmosaic
