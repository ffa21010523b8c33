#pragma once

// Area-proportional tiling of the unit square. Each prior event A_i gets a
// column of width P(A_i) (the smooth split); each column is cut into tiles of
// height P(B_j | A_i) (the jagged split), so tile area is P(A_i ∩ B_j).
//
// Coordinates have y growing upward from the bottom edge. Outcome j = 0 is the
// top band of every column. There are no gutters in model space.

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bayesmosaic/bayes.hpp"

namespace bayesmosaic {

enum class Orientation { kAAsColumns, kAAsRows };

struct CellRef {
  PriorIndex a;
  OutcomeIndex b;
  friend auto operator<=>(const CellRef&, const CellRef&) = default;
};

struct Tile {
  std::size_t a_index = 0;
  std::size_t b_index = 0;
  double x = 0.0;
  double y = 0.0;
  double width = 0.0;
  double height = 0.0;
  double area = 0.0;

  CellRef cell() const { return {PriorIndex{a_index}, OutcomeIndex{b_index}}; }
};

struct MosaicLayout {
  std::vector<EventLabel> prior_labels;
  std::vector<EventLabel> outcome_labels;
  std::vector<Tile> tiles;           // row-major: tiles[a * m + b]
  std::vector<double> column_edges;  // k + 1 cumulative split positions
  Orientation orientation = Orientation::kAAsColumns;

  std::size_t prior_count() const noexcept { return prior_labels.size(); }
  std::size_t outcome_count() const noexcept { return outcome_labels.size(); }
  const Tile& tile(CellRef c) const;
};

struct HighlightSpec {
  std::optional<CellRef> numerator;
  std::vector<CellRef> denominator;  // sorted by prior index

  bool contains(CellRef c) const;
};

struct HighlightedMosaic {
  MosaicLayout layout;
  HighlightSpec highlight;
};

// Two copies of the same mosaic stacked as a fraction: the numerator panel
// shades A_a ∩ B_b, the denominator panel shades all of B_b.
struct RatioFigureModel {
  HighlightedMosaic numerator;
  HighlightedMosaic denominator;
  CellRef query;
  double numerator_area = 0.0;
  double denominator_area = 0.0;
  double value = 0.0;
};

MosaicLayout layout(const BayesModel& model, Orientation orientation = Orientation::kAAsColumns);

/// Shades every tile of outcome b; no numerator.
HighlightSpec highlight_condition(const MosaicLayout& layout, OutcomeIndex b);

/// Adds the single tile (a, b) as numerator on top of highlight_condition(b).
HighlightSpec highlight_query(const MosaicLayout& layout, CellRef query);

/// Total area of the highlighted denominator tiles, summed order-independently.
double highlighted_area(const MosaicLayout& layout, const HighlightSpec& highlight);

RatioFigureModel ratio_figure(const BayesModel& model, PriorIndex a, OutcomeIndex b,
                              Orientation orientation = Orientation::kAAsColumns);

std::string to_string(Orientation o);
Orientation parse_orientation(std::string_view text);

}  // namespace bayesmosaic
