#include "bayesmosaic/format.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace bayesmosaic {

namespace {

std::string to_fixed_chars(double value, int digits) {
  std::array<char, 400> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value,
                                 std::chars_format::fixed, digits);
  if (ec != std::errc{}) throw std::runtime_error("number formatting overflow");
  return std::string(buf.data(), end);
}

}  // namespace

std::string format_fixed(double value, int digits) {
  digits = std::clamp(digits, 0, kMaxPrecision);
  if (!std::isfinite(value)) return std::isnan(value) ? "nan" : (value > 0 ? "inf" : "-inf");

  // Decide rounding on the shortest round-trip decimal, so 0.125 -> 0.13 and
  // 0.2105263... -> 0.2105 regardless of binary representation error.
  const bool negative = std::signbit(value) && value != 0.0;
  const double magnitude = std::fabs(value);
  std::array<char, 400> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), magnitude,
                                 std::chars_format::fixed);
  if (ec != std::errc{}) throw std::runtime_error("number formatting overflow");
  std::string text(buf.data(), end);

  auto dot = text.find('.');
  std::string int_part = dot == std::string::npos ? text : text.substr(0, dot);
  std::string frac_part = dot == std::string::npos ? std::string{} : text.substr(dot + 1);

  bool round_up = frac_part.size() > static_cast<std::size_t>(digits) &&
                  frac_part[static_cast<std::size_t>(digits)] >= '5';
  frac_part.resize(static_cast<std::size_t>(digits), '0');

  std::string digits_all = int_part + frac_part;
  if (round_up) {
    int pos = static_cast<int>(digits_all.size()) - 1;
    while (pos >= 0) {
      if (digits_all[static_cast<std::size_t>(pos)] == '9') {
        digits_all[static_cast<std::size_t>(pos)] = '0';
        --pos;
      } else {
        ++digits_all[static_cast<std::size_t>(pos)];
        break;
      }
    }
    if (pos < 0) digits_all.insert(digits_all.begin(), '1');
  }
  const std::size_t int_len = digits_all.size() - static_cast<std::size_t>(digits);
  std::string out = digits_all.substr(0, int_len);
  if (digits > 0) out += "." + digits_all.substr(int_len);

  const bool all_zero = std::all_of(out.begin(), out.end(), [](char c) { return c == '0' || c == '.'; });
  if (negative && !all_zero) out.insert(out.begin(), '-');
  return out;
}

std::string format_coord(double value) {
  if (!std::isfinite(value)) throw std::invalid_argument("non-finite coordinate");
  std::string s = to_fixed_chars(value, 9);
  if (s.find('.') != std::string::npos) {
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
  }
  if (s == "-0") s = "0";
  return s;
}

std::string format_readable(double value) {
  if (!std::isfinite(value)) return format_fixed(value);
  for (int digits = 2; digits < kMaxPrecision; ++digits) {
    std::string s = to_fixed_chars(value, digits);
    if (std::fabs(std::stod(s) - value) <= 1e-12) return s;
  }
  return to_fixed_chars(value, kMaxPrecision);
}

}  // namespace bayesmosaic
