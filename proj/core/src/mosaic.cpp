#include "bayesmosaic/mosaic.hpp"

#include <algorithm>
#include <utility>

namespace bayesmosaic {

const Tile& MosaicLayout::tile(CellRef c) const {
  if (c.a.value >= prior_count() || c.b.value >= outcome_count())
    throw IndexError("tile (" + std::to_string(c.a.value) + ", " + std::to_string(c.b.value) +
                     ") out of range");
  return tiles[c.a.value * outcome_count() + c.b.value];
}

bool HighlightSpec::contains(CellRef c) const {
  return std::binary_search(denominator.begin(), denominator.end(), c);
}

MosaicLayout layout(const BayesModel& model, Orientation orientation) {
  require_valid(model);
  const std::size_t k = model.prior_count();
  const std::size_t m = model.outcome_count();

  MosaicLayout out;
  out.prior_labels = model.prior.labels;
  out.outcome_labels = model.conditional.outcome_labels;
  out.orientation = orientation;
  out.column_edges.reserve(k + 1);
  out.tiles.resize(k * m);

  double left = 0.0;
  out.column_edges.push_back(left);
  for (std::size_t i = 0; i < k; ++i) {
    const double width = model.prior.probs[i];
    const auto& row = model.conditional.rows[i];
    // Stack from the bottom with the last outcome, so outcome 0 ends on top.
    double bottom = 0.0;
    for (std::size_t jj = m; jj-- > 0;) {
      Tile& t = out.tiles[i * m + jj];
      t.a_index = i;
      t.b_index = jj;
      t.x = left;
      t.y = bottom;
      t.width = width;
      t.height = row[jj];
      t.area = t.width * t.height;
      bottom += row[jj];
    }
    left += width;
    out.column_edges.push_back(left);
  }

  if (orientation == Orientation::kAAsRows) {
    for (Tile& t : out.tiles) {
      std::swap(t.x, t.y);
      std::swap(t.width, t.height);
    }
  }
  return out;
}

HighlightSpec highlight_condition(const MosaicLayout& layout, OutcomeIndex b) {
  if (b.value >= layout.outcome_count())
    throw IndexError("outcome index " + std::to_string(b.value) + " out of range (layout has " +
                     std::to_string(layout.outcome_count()) + " outcomes)");
  HighlightSpec spec;
  spec.denominator.reserve(layout.prior_count());
  for (std::size_t i = 0; i < layout.prior_count(); ++i) spec.denominator.push_back({PriorIndex{i}, b});
  return spec;
}

HighlightSpec highlight_query(const MosaicLayout& layout, CellRef query) {
  if (query.a.value >= layout.prior_count())
    throw IndexError("prior index " + std::to_string(query.a.value) + " out of range (layout has " +
                     std::to_string(layout.prior_count()) + " prior events)");
  HighlightSpec spec = highlight_condition(layout, query.b);
  spec.numerator = query;
  return spec;
}

double highlighted_area(const MosaicLayout& layout, const HighlightSpec& highlight) {
  std::vector<double> areas;
  areas.reserve(highlight.denominator.size());
  for (const CellRef& c : highlight.denominator) areas.push_back(layout.tile(c).area);
  return canonical_sum(areas);
}

RatioFigureModel ratio_figure(const BayesModel& model, PriorIndex a, OutcomeIndex b,
                              Orientation orientation) {
  MosaicLayout base = layout(model, orientation);
  const CellRef query{a, b};
  HighlightSpec num = highlight_query(base, query);
  HighlightSpec den = highlight_condition(base, b);

  RatioFigureModel fig;
  fig.query = query;
  fig.numerator_area = base.tile(query).area;
  fig.denominator_area = highlighted_area(base, den);
  if (!(fig.denominator_area > 0.0))
    throw NullConditioningError(b.value, base.outcome_labels[b.value].text);
  fig.value = fig.numerator_area / fig.denominator_area;
  fig.numerator = {base, std::move(num)};
  fig.denominator = {std::move(base), std::move(den)};
  return fig;
}

std::string to_string(Orientation o) {
  return o == Orientation::kAAsRows ? "a_as_rows" : "a_as_columns";
}

Orientation parse_orientation(std::string_view text) {
  if (text == "a_as_columns" || text == "columns") return Orientation::kAAsColumns;
  if (text == "a_as_rows" || text == "rows") return Orientation::kAAsRows;
  throw ParseError("unknown orientation '" + std::string(text) +
                   "' (expected a_as_columns or a_as_rows)");
}

}  // namespace bayesmosaic
