#include "bayesmosaic/format.hpp"

#include <gtest/gtest.h>

namespace bayesmosaic {
namespace {

TEST(FormatFixed, RoundsHalfAwayFromZero) {
  EXPECT_EQ(format_fixed(0.125, 2), "0.13");
  EXPECT_EQ(format_fixed(-0.125, 2), "-0.13");
  EXPECT_EQ(format_fixed(0.5, 0), "1");
  EXPECT_EQ(format_fixed(2.5, 0), "3");
  EXPECT_EQ(format_fixed(0.99995, 4), "1.0000");
}

TEST(FormatFixed, ExampleValues) {
  EXPECT_EQ(format_fixed(0.18 / 0.2), "0.9000");
  EXPECT_EQ(format_fixed(0.02 / 0.095), "0.2105");
  EXPECT_EQ(format_fixed(0.1 + 0.2, 12), "0.300000000000");
}

TEST(FormatFixed, NegativeZeroAndTinyValues) {
  EXPECT_EQ(format_fixed(-0.0), "0.0000");
  EXPECT_EQ(format_fixed(-1e-9), "0.0000");
  EXPECT_EQ(format_fixed(1e-300, 12), "0.000000000000");
}

TEST(FormatCoord, TrimsAndNormalizes) {
  EXPECT_EQ(format_coord(480.0), "480");
  EXPECT_EQ(format_coord(1.25), "1.25");
  EXPECT_EQ(format_coord(-0.0), "0");
  EXPECT_EQ(format_coord(1.0 / 3.0), "0.333333333");
  EXPECT_THROW((void)format_coord(std::numeric_limits<double>::infinity()), std::invalid_argument);
}

TEST(FormatReadable, ShortestWithTwoDecimals) {
  EXPECT_EQ(format_readable(0.9 + 0.2), "1.10");
  EXPECT_EQ(format_readable(1.0), "1.00");
  EXPECT_EQ(format_readable(0.123), "0.123");
}

}  // namespace
}  // namespace bayesmosaic
