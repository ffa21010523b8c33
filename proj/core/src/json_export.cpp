#include "bayesmosaic/json_export.hpp"

namespace bayesmosaic {

using nlohmann::json;

namespace {

json labels_json(const std::vector<EventLabel>& labels) {
  json out = json::array();
  for (const auto& l : labels) out.push_back(l.text);
  return out;
}

json cell_json(CellRef c) { return {{"a", c.a.value}, {"b", c.b.value}}; }

json highlight_json(const MosaicLayout& layout, const HighlightSpec& h) {
  json den = json::array();
  for (const CellRef& c : h.denominator) den.push_back(cell_json(c));
  return {{"numerator", h.numerator ? cell_json(*h.numerator) : json(nullptr)},
          {"denominator", std::move(den)},
          {"numerator_area", h.numerator ? json(layout.tile(*h.numerator).area) : json(nullptr)},
          {"denominator_area", highlighted_area(layout, h)}};
}

json mosaic_body(const MosaicLayout& layout, const std::optional<HighlightSpec>& highlight) {
  json tiles = json::array();
  for (const Tile& t : layout.tiles) {
    tiles.push_back({{"a", t.a_index},
                     {"b", t.b_index},
                     {"a_label", layout.prior_labels[t.a_index].text},
                     {"b_label", layout.outcome_labels[t.b_index].text},
                     {"x", t.x},
                     {"y", t.y},
                     {"width", t.width},
                     {"height", t.height},
                     {"area", t.area}});
  }
  return {{"orientation", to_string(layout.orientation)},
          {"prior_labels", labels_json(layout.prior_labels)},
          {"outcome_labels", labels_json(layout.outcome_labels)},
          {"column_edges", layout.column_edges},
          {"tiles", std::move(tiles)},
          {"highlight", highlight ? highlight_json(layout, *highlight) : json(nullptr)}};
}

}  // namespace

json envelope(std::string_view kind) {
  return {{"schema", kLayoutSchemaName}, {"version", kLayoutSchemaVersion}, {"kind", kind}};
}

json to_json(const ValidationReport& report) {
  json doc = envelope("validation");
  json violations = json::array();
  for (const Violation& v : report) {
    violations.push_back({{"where", v.where},
                          {"index", v.index ? json(*v.index) : json(nullptr)},
                          {"value", v.value ? json(*v.value) : json(nullptr)},
                          {"message", v.message}});
  }
  doc["valid"] = report.empty();
  doc["violations"] = std::move(violations);
  return doc;
}

json to_json(const PosteriorResult& r) {
  json doc = envelope("posterior");
  doc["conditioned_on"] = {{"label", r.conditioned_on.text}, {"index", r.conditioned_on.index}};
  doc["prior_labels"] = labels_json(r.prior_labels);
  doc["numerator_terms"] = r.numerator_terms;
  doc["denominator"] = r.denominator;
  doc["posterior"] = r.posterior;
  return doc;
}

json to_json(const MosaicLayout& layout, const std::optional<HighlightSpec>& highlight) {
  json doc = envelope("mosaic");
  doc.update(mosaic_body(layout, highlight));
  return doc;
}

json to_json(const RatioFigureModel& fig) {
  const auto& lay = fig.numerator.layout;
  json doc = envelope("ratio");
  doc["query"] = {{"a", fig.query.a.value},
                  {"b", fig.query.b.value},
                  {"a_label", lay.prior_labels.at(fig.query.a.value).text},
                  {"b_label", lay.outcome_labels.at(fig.query.b.value).text}};
  doc["value"] = fig.value;
  doc["numerator_area"] = fig.numerator_area;
  doc["denominator_area"] = fig.denominator_area;
  doc["numerator"] = mosaic_body(fig.numerator.layout, fig.numerator.highlight);
  doc["denominator"] = mosaic_body(fig.denominator.layout, fig.denominator.highlight);
  return doc;
}

json to_json(const TreeDiagram& tree) {
  json doc = envelope("tree");
  json nodes = json::array();
  for (const TreeNode& n : tree.nodes) {
    nodes.push_back({{"id", n.id},
                     {"level", static_cast<int>(n.level)},
                     {"parent", n.parent ? json(*n.parent) : json(nullptr)},
                     {"label", n.label},
                     {"a", n.a_index ? json(*n.a_index) : json(nullptr)},
                     {"b", n.b_index ? json(*n.b_index) : json(nullptr)},
                     {"edge_probability", n.edge_probability},
                     {"path_probability", n.path_probability},
                     {"x", n.x},
                     {"y", n.y}});
  }
  json edges = json::array();
  for (const TreeEdge& e : tree.edges) edges.push_back({{"from", e.from}, {"to", e.to}, {"probability", e.probability}});
  doc["prior_count"] = tree.prior_count;
  doc["outcome_count"] = tree.outcome_count;
  doc["nodes"] = std::move(nodes);
  doc["edges"] = std::move(edges);
  return doc;
}

}  // namespace bayesmosaic
