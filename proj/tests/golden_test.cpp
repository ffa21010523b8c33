// Byte-level regression against checked-in renderings of the two bundled
// examples. Regenerate with BAYESMOSAIC_UPDATE_GOLDEN=1 after an intended change.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "bayesmosaic/examples.hpp"
#include "bayesmosaic/json_export.hpp"
#include "bayesmosaic/svg.hpp"

namespace bayesmosaic {
namespace {

const std::filesystem::path kGolden = BAYESMOSAIC_GOLDEN_DIR;

void compare_golden(const std::string& name, const std::string& actual) {
  const auto path = kGolden / name;
  if (std::getenv("BAYESMOSAIC_UPDATE_GOLDEN")) {
    std::filesystem::create_directories(kGolden);
    std::ofstream(path, std::ios::binary) << actual;
    return;
  }
  std::ifstream in(path, std::ios::binary);
  ASSERT_TRUE(in) << "missing golden file " << path;
  std::ostringstream expected;
  expected << in.rdbuf();
  EXPECT_EQ(actual, expected.str()) << "rendering drifted from " << path;
}

TEST(Golden, Example1Mosaic) {
  const auto lay = layout(examples::surveillance());
  compare_golden("example1_mosaic_B2.svg", render_mosaic(lay, highlight_condition(lay, OutcomeIndex{1})));
  compare_golden("example1_layout_B2.json", to_json(lay, highlight_condition(lay, OutcomeIndex{1})).dump(2) + "\n");
}

TEST(Golden, Example1Tree) {
  const auto tree = build_tree(examples::surveillance());
  compare_golden("example1_tree.svg", render_tree(tree));
  compare_golden("example1_tree.json", to_json(tree).dump(2) + "\n");
}

TEST(Golden, Example2Ratio) {
  const auto fig = ratio_figure(examples::four_by_four(), PriorIndex{3}, OutcomeIndex{2});
  compare_golden("example2_ratio_A4_B3.svg", render_ratio(fig));
  compare_golden("example2_ratio_A4_B3.json", to_json(fig).dump(2) + "\n");
}

TEST(Golden, Example2RowsOrientation) {
  const auto lay = layout(examples::four_by_four(), Orientation::kAAsRows);
  compare_golden("example2_mosaic_rows.svg", render_mosaic(lay, std::nullopt));
}

}  // namespace
}  // namespace bayesmosaic
