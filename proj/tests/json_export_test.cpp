#include "bayesmosaic/json_export.hpp"

#include <gtest/gtest.h>

#include "bayesmosaic/examples.hpp"

namespace bayesmosaic {
namespace {

using nlohmann::json;

TEST(JsonExport, EnvelopeOnEveryDocument) {
  const auto model = examples::surveillance();
  const auto lay = layout(model);
  for (const json& doc : {to_json(validate_model(model)), to_json(posterior(model, OutcomeIndex{1})), to_json(lay),
                          to_json(ratio_figure(model, PriorIndex{0}, OutcomeIndex{1})), to_json(build_tree(model))}) {
    EXPECT_EQ(doc.at("schema"), kLayoutSchemaName);
    EXPECT_EQ(doc.at("version"), kLayoutSchemaVersion);
    EXPECT_TRUE(doc.at("kind").is_string());
  }
}

TEST(JsonExport, MosaicTileCounts) {
  EXPECT_EQ(to_json(layout(examples::surveillance())).at("tiles").size(), 6u);
  EXPECT_EQ(to_json(layout(examples::four_by_four())).at("tiles").size(), 16u);
  EXPECT_EQ(to_json(layout(make_model({{"A", 1.0}}, {"B"}, {{1.0}}))).at("tiles").size(), 1u);
}

TEST(JsonExport, MosaicCarriesGeometryAndHighlight) {
  const auto lay = layout(examples::surveillance());
  const json doc = to_json(lay, highlight_condition(lay, OutcomeIndex{1}));
  const json& t = doc.at("tiles").at(0);
  EXPECT_EQ(t.at("a_label"), "A1");
  EXPECT_EQ(t.at("b_label"), "B1");
  EXPECT_EQ(t.at("area").get<double>(), lay.tiles[0].area);
  EXPECT_EQ(t.at("y").get<double>(), lay.tiles[0].y);
  EXPECT_TRUE(doc.at("highlight").at("numerator").is_null());
  EXPECT_EQ(doc.at("highlight").at("denominator").size(), 2u);
  EXPECT_NEAR(doc.at("highlight").at("denominator_area").get<double>(), 0.20, 1e-12);
  EXPECT_TRUE(to_json(lay).at("highlight").is_null());
}

TEST(JsonExport, RatioDocument) {
  const json doc = to_json(ratio_figure(examples::four_by_four(), PriorIndex{3}, OutcomeIndex{2}));
  EXPECT_EQ(doc.at("query").at("a_label"), "A4");
  EXPECT_EQ(doc.at("query").at("b_label"), "B3");
  EXPECT_NEAR(doc.at("value").get<double>(), 4.0 / 19.0, 1e-12);
  EXPECT_EQ(doc.at("numerator").at("highlight").at("numerator"), (json{{"a", 3}, {"b", 2}}));
  EXPECT_EQ(doc.at("denominator").at("highlight").at("denominator").size(), 4u);
  EXPECT_EQ(doc.at("numerator").at("tiles"), doc.at("denominator").at("tiles"));
}

TEST(JsonExport, PosteriorKeepsFullPrecision) {
  const auto r = posterior(examples::four_by_four(), OutcomeIndex{2});
  const json doc = json::parse(to_json(r).dump());
  EXPECT_EQ(doc.at("posterior").at(3).get<double>(), r.posterior[3]);
  EXPECT_EQ(doc.at("denominator").get<double>(), r.denominator);
  EXPECT_EQ(doc.at("conditioned_on").at("label"), "B3");
}

TEST(JsonExport, ValidationDocument) {
  auto model = examples::surveillance();
  model.prior.probs[1] = 0.2;
  const json doc = to_json(validate_model(model));
  EXPECT_FALSE(doc.at("valid").get<bool>());
  ASSERT_EQ(doc.at("violations").size(), 1u);
  EXPECT_EQ(doc.at("violations")[0].at("where"), "prior");
  EXPECT_TRUE(doc.at("violations")[0].at("index").is_null());
}

TEST(JsonExport, TreeDocument) {
  const json doc = to_json(build_tree(examples::four_by_four()));
  EXPECT_EQ(doc.at("nodes").size(), 21u);
  EXPECT_EQ(doc.at("edges").size(), 20u);
  EXPECT_TRUE(doc.at("nodes")[0].at("parent").is_null());
}

}  // namespace
}  // namespace bayesmosaic
