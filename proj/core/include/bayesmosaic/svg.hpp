#pragma once

// Deterministic SVG 1.1 output for mosaics, ratio figures and trees.
//
// Every mosaic tile becomes a <rect class="tile"> carrying data-a / data-b
// (cell indices) and data-highlight ("none", "condition" or "numerator").
// When a HighlightSpec has a numerator, only that tile is shaded; otherwise the
// whole denominator set is. Gutters shrink tiles about their centres and never
// move neighbours.

#include <optional>
#include <string>

#include "bayesmosaic/mosaic.hpp"
#include "bayesmosaic/tree.hpp"

namespace bayesmosaic {

enum class LabelMode { kNone, kLabels, kLabelsAndProbs };

struct RenderStyle {
  double width = 480.0;   // pixels, per mosaic panel
  double height = 480.0;
  double gutter = 2.0;    // visual gap between neighbouring tiles
  std::string base_fill = "#d9d9d9";
  std::string highlight_fill = "#3b78c2";
  std::string stroke = "#000000";
  double stroke_width = 1.0;
  double font_size = 12.0;
  LabelMode label_mode = LabelMode::kLabelsAndProbs;
  double min_render_extent = 0.5;  // tiles thinner than this (px) are not drawn
  int precision = 4;               // decimals for printed probabilities
};

/// Throws ConfigError describing the first bad field.
void validate_style(const RenderStyle& style);

std::string render_mosaic(const MosaicLayout& layout, const std::optional<HighlightSpec>& highlight,
                          const RenderStyle& style = {});

std::string render_ratio(const RatioFigureModel& figure, const RenderStyle& style = {});

std::string render_tree(const TreeDiagram& tree, const RenderStyle& style = {});

std::string to_string(LabelMode mode);
LabelMode parse_label_mode(std::string_view text);

}  // namespace bayesmosaic
