#include "bayesmosaic/svg.hpp"

#include <random>
#include <set>

#include <gtest/gtest.h>

#include "bayesmosaic/examples.hpp"
#include "support/oracle.hpp"
#include "support/svg_scan.hpp"

namespace bayesmosaic {
namespace {

using testing::count_highlighted;
using testing::scan_svg;
using testing::select;

RenderStyle no_gutter() {
  RenderStyle s;
  s.gutter = 0.0;
  s.min_render_extent = 0.0;
  return s;
}

TEST(RenderMosaic, Example1CloudyShading) {
  const auto lay = layout(examples::surveillance());
  const auto svg = render_mosaic(lay, highlight_condition(lay, OutcomeIndex{1}), no_gutter());
  const auto rects = select(scan_svg(svg), "rect", "tile");
  ASSERT_EQ(rects.size(), 6u);
  EXPECT_EQ(count_highlighted(rects), 2u);
  double shaded = 0.0;
  for (const auto& r : rects) {
    if (r.attrs.at("data-highlight") == "none") continue;
    EXPECT_EQ(r.attrs.at("data-b"), "1");
    EXPECT_EQ(r.attrs.at("fill"), RenderStyle{}.highlight_fill);
    shaded += r.num("width") * r.num("height");
  }
  EXPECT_NEAR(shaded / (480.0 * 480.0), 0.20, 1e-9);
}

TEST(RenderMosaic, Example2HasSixteenTiles) {
  const auto svg = render_mosaic(layout(examples::four_by_four()), std::nullopt);
  const auto rects = select(scan_svg(svg), "rect", "tile");
  EXPECT_EQ(rects.size(), 16u);
  EXPECT_EQ(count_highlighted(rects), 0u);
}

TEST(RenderMosaic, SingleCellFillsCanvas) {
  const auto lay = layout(make_model({{"A", 1.0}}, {"B"}, {{1.0}}));
  auto rects = select(scan_svg(render_mosaic(lay, std::nullopt, no_gutter())), "rect", "tile");
  ASSERT_EQ(rects.size(), 1u);
  EXPECT_EQ(rects[0].attrs.at("x"), "0");
  EXPECT_EQ(rects[0].attrs.at("y"), "0");
  EXPECT_EQ(rects[0].attrs.at("width"), "480");
  EXPECT_EQ(rects[0].attrs.at("height"), "480");

  // With the default 2 px gutter the rect is inset by 1 px on every side.
  rects = select(scan_svg(render_mosaic(lay, std::nullopt)), "rect", "tile");
  ASSERT_EQ(rects.size(), 1u);
  EXPECT_EQ(rects[0].attrs.at("x"), "1");
  EXPECT_EQ(rects[0].attrs.at("width"), "478");
}

TEST(RenderMosaic, TopBandIsFirstOutcome) {
  const auto lay = layout(examples::surveillance());
  const auto rects = select(scan_svg(render_mosaic(lay, std::nullopt, no_gutter())), "rect", "tile");
  for (const auto& r : rects)
    if (r.attrs.at("data-b") == "0") EXPECT_EQ(r.num("y"), 0.0);
}

TEST(RenderMosaic, Deterministic) {
  const auto lay = layout(examples::four_by_four());
  const auto h = highlight_condition(lay, OutcomeIndex{2});
  EXPECT_EQ(render_mosaic(lay, h), render_mosaic(lay, h));
}

TEST(RenderMosaic, GutterShrinksAboutTileCentres) {
  const auto lay = layout(examples::four_by_four());
  RenderStyle g = no_gutter();
  g.gutter = 4.0;
  const auto plain = select(scan_svg(render_mosaic(lay, std::nullopt, no_gutter())), "rect", "tile");
  const auto gapped = select(scan_svg(render_mosaic(lay, std::nullopt, g)), "rect", "tile");
  ASSERT_EQ(plain.size(), gapped.size());
  for (std::size_t i = 0; i < plain.size(); ++i) {
    EXPECT_NEAR(plain[i].num("x") + plain[i].num("width") / 2, gapped[i].num("x") + gapped[i].num("width") / 2, 1e-6);
    EXPECT_NEAR(plain[i].num("y") + plain[i].num("height") / 2, gapped[i].num("y") + gapped[i].num("height") / 2, 1e-6);
    EXPECT_NEAR(plain[i].num("width") - gapped[i].num("width"), 4.0, 1e-6);
  }
}

TEST(RenderMosaic, SkipsTilesBelowMinimumExtent) {
  const auto lay = layout(make_model({{"A1", 0.999}, {"A2", 0.001}}, {"B1", "B2"}, {{0.5, 0.5}, {0.0, 1.0}}));
  RenderStyle style;
  style.gutter = 0.0;
  style.min_render_extent = 1.0;  // A2 column is 0.48 px wide
  const auto rects = select(scan_svg(render_mosaic(lay, std::nullopt, style)), "rect", "tile");
  EXPECT_EQ(rects.size(), 2u);
  style.min_render_extent = 0.0;  // still skips the zero-height tile
  EXPECT_EQ(select(scan_svg(render_mosaic(lay, std::nullopt, style)), "rect", "tile").size(), 3u);
}

TEST(RenderMosaic, LabelsOnlyWhereTheyFit) {
  const auto lay = layout(examples::four_by_four());
  RenderStyle style;
  const auto elements = scan_svg(render_mosaic(lay, std::nullopt, style));
  const auto labels = select(elements, "text", "tile-label");
  const auto probs = select(elements, "text", "tile-prob");
  EXPECT_EQ(labels.size(), probs.size());
  EXPECT_GT(labels.size(), 0u);
  EXPECT_LT(labels.size(), 16u);  // the 24 px wide A4 column cannot hold "A4∩B1"

  style.label_mode = LabelMode::kNone;
  EXPECT_TRUE(select(scan_svg(render_mosaic(lay, std::nullopt, style)), "text").empty());
  style.label_mode = LabelMode::kLabels;
  const auto only_labels = scan_svg(render_mosaic(lay, std::nullopt, style));
  EXPECT_FALSE(select(only_labels, "text", "tile-label").empty());
  EXPECT_TRUE(select(only_labels, "text", "tile-prob").empty());
}

TEST(RenderMosaic, EscapesLabelText) {
  const auto lay = layout(make_model({{"x<y", 1.0}}, {"a&b"}, {{1.0}}));
  const auto svg = render_mosaic(lay, std::nullopt);
  EXPECT_NE(svg.find("x&lt;y∩a&amp;b"), std::string::npos);
  EXPECT_EQ(svg.find("x<y"), std::string::npos);
}

TEST(RenderMosaic, BadStyleIsConfigError) {
  const auto lay = layout(examples::surveillance());
  RenderStyle s;
  s.width = 0;
  EXPECT_THROW((void)render_mosaic(lay, std::nullopt, s), ConfigError);
  s = {};
  s.gutter = -1;
  EXPECT_THROW((void)render_mosaic(lay, std::nullopt, s), ConfigError);
  s = {};
  s.gutter = 480;
  EXPECT_THROW((void)render_mosaic(lay, std::nullopt, s), ConfigError);
  s = {};
  s.highlight_fill = "blue";
  EXPECT_THROW((void)render_mosaic(lay, std::nullopt, s), ConfigError);
  s = {};
  s.min_render_extent = -0.5;
  EXPECT_THROW((void)render_mosaic(lay, std::nullopt, s), ConfigError);
}

TEST(RenderMosaic, GeometryRoundTripsThroughSvg) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const auto model = testing::random_model(rng);
    for (double gutter : {0.0, 2.0}) {
      RenderStyle style = no_gutter();
      style.gutter = gutter;
      style.width = 300 + 20.0 * (trial % 7);
      style.height = 200 + 15.0 * (trial % 5);
      const auto lay = layout(model, trial % 2 ? Orientation::kAAsRows : Orientation::kAAsColumns);
      const auto rects = select(scan_svg(render_mosaic(lay, std::nullopt, style)), "rect", "tile");
      const double bound = gutter == 0.0 ? 1e-9 : gutter * (1.0 / style.width + 1.0 / style.height) + 1e-9;
      for (const auto& r : rects) {
        const Tile& t = lay.tile({PriorIndex{std::stoul(r.attrs.at("data-a"))}, OutcomeIndex{std::stoul(r.attrs.at("data-b"))}});
        const double recovered = (r.num("width") + gutter) / style.width * (r.num("height") + gutter) / style.height;
        EXPECT_NEAR(recovered, t.area, 1e-9);
        const double shrunk = r.num("width") / style.width * r.num("height") / style.height;
        EXPECT_LE(t.area - shrunk, bound);
        EXPECT_GE(t.area - shrunk, -1e-9);
      }
    }
  }
}

TEST(RenderMosaic, HighlightedRectsEqualHighlightSet) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 100; ++trial) {
    const auto model = testing::random_model(rng);
    const auto lay = layout(model);
    const OutcomeIndex b{std::uniform_int_distribution<std::size_t>(0, model.outcome_count() - 1)(rng)};
    const auto spec = highlight_condition(lay, b);
    const auto rects = select(scan_svg(render_mosaic(lay, spec, no_gutter())), "rect", "tile");
    std::set<std::pair<std::size_t, std::size_t>> shaded, expected;
    for (const auto& r : rects) {
      const auto cell = std::make_pair(std::stoul(r.attrs.at("data-a")), std::stoul(r.attrs.at("data-b")));
      if (r.attrs.at("data-highlight") != "none") shaded.insert(cell);
    }
    for (const auto& c : spec.denominator) {
      const Tile& t = lay.tile(c);
      if (t.width > 0 && t.height > 0) expected.insert({c.a.value, c.b.value});
    }
    EXPECT_EQ(shaded, expected);
  }
}

TEST(RenderRatio, Example1Annotation) {
  const auto fig = ratio_figure(examples::surveillance(), PriorIndex{0}, OutcomeIndex{1});
  const auto elements = scan_svg(render_ratio(fig));
  const auto query = select(elements, "text", "query");
  ASSERT_EQ(query.size(), 1u);
  EXPECT_EQ(query[0].text, "P(A1|B2) = 0.9000");
  EXPECT_EQ(select(elements, "text", "areas")[0].text, "= 0.1800 / 0.2000");
  EXPECT_EQ(select(elements, "line", "fraction-bar").size(), 1u);
}

TEST(RenderRatio, Example2PanelStructure) {
  const auto fig = ratio_figure(examples::four_by_four(), PriorIndex{3}, OutcomeIndex{2});
  const auto svg = render_ratio(fig);
  const auto elements = scan_svg(svg);
  const auto num = select(elements, "rect", "tile", "numerator");
  const auto den = select(elements, "rect", "tile", "denominator");
  ASSERT_EQ(num.size(), 16u);
  ASSERT_EQ(den.size(), 16u);
  EXPECT_EQ(count_highlighted(num), 1u);
  EXPECT_EQ(count_highlighted(den), 4u);
  EXPECT_EQ(select(elements, "text", "query")[0].text, "P(A4|B3) = 0.2105");
  EXPECT_EQ(svg, render_ratio(fig));
  // Numerator panel sits above the bar, denominator below it.
  const auto groups = select(elements, "g", "mosaic");
  ASSERT_EQ(groups.size(), 2u);
  EXPECT_FALSE(groups[0].has("transform"));
  EXPECT_TRUE(groups[1].has("transform"));
}

TEST(RenderRatio, IndependenceAnnotationIsPrior) {
  const auto model = make_model({{"A1", 0.3}, {"A2", 0.7}}, {"B1", "B2"}, {{0.25, 0.75}, {0.25, 0.75}});
  const auto fig = ratio_figure(model, PriorIndex{1}, OutcomeIndex{0});
  EXPECT_EQ(select(scan_svg(render_ratio(fig)), "text", "query")[0].text, "P(A2|B1) = 0.7000");
}

TEST(RenderTree, EdgeCounts) {
  auto edges = [](const BayesModel& m) { return select(scan_svg(render_tree(build_tree(m))), "line", "edge").size(); };
  EXPECT_EQ(edges(examples::surveillance()), 8u);
  EXPECT_EQ(edges(examples::four_by_four()), 20u);
  EXPECT_EQ(edges(make_model({{"A", 1.0}}, {"B"}, {{1.0}})), 2u);
}

TEST(RenderTree, PrintsEdgeProbabilitiesAndLabels) {
  const auto tree = build_tree(examples::surveillance());
  const auto elements = scan_svg(render_tree(tree));
  const auto probs = select(elements, "text", "edge-prob");
  ASSERT_EQ(probs.size(), 8u);
  EXPECT_EQ(probs[0].text, "0.9000");
  EXPECT_EQ(probs[1].text, "0.1000");
  const auto labels = select(elements, "text", "node-label");
  ASSERT_EQ(labels.size(), 8u);
  EXPECT_EQ(labels[2].text, "B1  0.6300");
  EXPECT_EQ(render_tree(tree), render_tree(tree));
}

TEST(RenderTree, LeavesEvenlySpacedOnCanvas) {
  const auto elements = scan_svg(render_tree(build_tree(examples::surveillance())));
  const auto nodes = select(elements, "circle", "node");
  ASSERT_EQ(nodes.size(), 9u);
  const double step = nodes[4].num("cy") - nodes[3].num("cy");
  for (std::size_t i = 4; i < nodes.size(); ++i) EXPECT_NEAR(nodes[i].num("cy") - nodes[i - 1].num("cy"), step, 1e-6);
}

TEST(LabelMode, Parse) {
  EXPECT_EQ(parse_label_mode("none"), LabelMode::kNone);
  EXPECT_EQ(parse_label_mode(to_string(LabelMode::kLabels)), LabelMode::kLabels);
  EXPECT_THROW((void)parse_label_mode("all"), ConfigError);
}

}  // namespace
}  // namespace bayesmosaic
