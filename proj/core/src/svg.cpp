#include "bayesmosaic/svg.hpp"

#include <algorithm>
#include <cmath>
#include <regex>
#include <sstream>

#include "bayesmosaic/format.hpp"

namespace bayesmosaic {

namespace {

// Approximate glyph advance as a fraction of the font size; used only to
// decide whether a label fits inside its tile.
constexpr double kGlyphAdvance = 0.6;
constexpr double kLineHeight = 1.2;
constexpr char kFontFamily[] = "sans-serif";

std::string escape(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

// Display width in glyphs; UTF-8 continuation bytes do not count.
std::size_t glyph_count(std::string_view text) {
  return static_cast<std::size_t>(std::count_if(text.begin(), text.end(), [](char c) {
    return (static_cast<unsigned char>(c) & 0xC0) != 0x80;
  }));
}

std::string c(double v) { return format_coord(v); }

void open_document(std::ostringstream& out, double width, double height, std::string_view title) {
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << c(width) << "\" height=\"";
  out << c(height) << "\" viewBox=\"0 0 " << c(width) << " ";
  out << c(height) << "\" font-family=\"" << kFontFamily << "\">\n";
  out << "<title>" << escape(title) << "</title>\n";
}

void close_document(std::ostringstream& out) { out << "</svg>\n"; }

void text_element(std::ostringstream& out, std::string_view cls, double x, double y, double font_size,
                  std::string_view anchor, std::string_view content) {
  out << "<text class=\"" << cls << "\" x=\"" << c(x) << "\" y=\"";
  out << c(y) << "\" font-size=\"" << c(font_size) << "\" text-anchor=\"" << anchor
      << "\" dominant-baseline=\"middle\">" << escape(content) << "</text>\n";
}

std::string_view highlight_kind(const std::optional<HighlightSpec>& highlight, CellRef cell) {
  if (!highlight) return "none";
  if (highlight->numerator) return *highlight->numerator == cell ? "numerator" : "none";
  return highlight->contains(cell) ? "condition" : "none";
}

void check_layout(const MosaicLayout& layout) {
  if (layout.tiles.size() != layout.prior_count() * layout.outcome_count())
    throw ConfigError("mosaic layout has " + std::to_string(layout.tiles.size()) + " tiles for a " +
                      std::to_string(layout.prior_count()) + "x" + std::to_string(layout.outcome_count()) +
                      " table");
}

// One mosaic panel as a <g>, offset by (dx, dy) in pixels.
void emit_mosaic_panel(std::ostringstream& out, const MosaicLayout& layout,
                       const std::optional<HighlightSpec>& highlight, const RenderStyle& style,
                       std::string_view panel, double dx, double dy) {
  out << "<g class=\"mosaic\" data-panel=\"" << panel << "\" data-orientation=\""
      << to_string(layout.orientation) << "\"";
  if (dx != 0.0 || dy != 0.0) out << " transform=\"translate(" << c(dx) << "," << c(dy) << ")\"";
  out << ">\n";

  const double W = style.width;
  const double H = style.height;
  const double g = style.gutter;
  std::ostringstream labels;

  for (const Tile& t : layout.tiles) {
    const double px = t.x * W + g / 2.0;
    const double py = (1.0 - (t.y + t.height)) * H + g / 2.0;
    const double pw = t.width * W - g;
    const double ph = t.height * H - g;
    if (pw <= 0.0 || ph <= 0.0 || pw < style.min_render_extent || ph < style.min_render_extent) continue;

    const CellRef cell = t.cell();
    const std::string_view kind = highlight_kind(highlight, cell);
    const std::string& fill = kind == "none" ? style.base_fill : style.highlight_fill;
    out << "<rect class=\"tile\" data-a=\"" << t.a_index << "\" data-b=\"" << t.b_index
        << "\" data-highlight=\"" << kind << "\" x=\"" << c(px) << "\" y=\"";
    out << c(py) << "\" width=\"";
    out << c(pw) << "\" height=\"";
    out << c(ph) << "\" fill=\"" << fill << "\" stroke=\"" << style.stroke << "\" stroke-width=\"";
    out << c(style.stroke_width) << "\"/>\n";

    if (style.label_mode == LabelMode::kNone) continue;
    const std::string name =
        layout.prior_labels[t.a_index].text + "∩" + layout.outcome_labels[t.b_index].text;
    const std::string prob = format_fixed(t.area, style.precision);
    const bool with_prob = style.label_mode == LabelMode::kLabelsAndProbs;
    const std::size_t glyphs = std::max(glyph_count(name), with_prob ? prob.size() : 0);
    const double box_w = kGlyphAdvance * style.font_size * static_cast<double>(glyphs);
    const double box_h = kLineHeight * style.font_size * (with_prob ? 2.0 : 1.0);
    if (box_w > pw || box_h > ph) continue;

    const double cx = px + pw / 2.0;
    const double cy = py + ph / 2.0;
    if (with_prob) {
      const double half = kLineHeight * style.font_size / 2.0;
      text_element(labels, "tile-label", cx, cy - half, style.font_size, "middle", name);
      text_element(labels, "tile-prob", cx, cy + half, style.font_size, "middle", prob);
    } else {
      text_element(labels, "tile-label", cx, cy, style.font_size, "middle", name);
    }
  }
  out << labels.str() << "</g>\n";
}

bool is_hex_colour(const std::string& s) {
  static const std::regex re("^#([0-9a-fA-F]{3}|[0-9a-fA-F]{6})$");
  return std::regex_match(s, re);
}

}  // namespace

void validate_style(const RenderStyle& style) {
  auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
  auto non_negative = [](double v) { return std::isfinite(v) && v >= 0.0; };
  if (!positive(style.width) || !positive(style.height))
    throw ConfigError("canvas dimensions must be positive (got " + format_readable(style.width) + "x" +
                      format_readable(style.height) + ")");
  if (!non_negative(style.gutter)) throw ConfigError("gutter must be >= 0");
  if (style.gutter >= std::min(style.width, style.height))
    throw ConfigError("gutter " + format_readable(style.gutter) + " leaves no room on the canvas");
  if (!non_negative(style.min_render_extent)) throw ConfigError("min_render_extent must be >= 0");
  if (!non_negative(style.stroke_width)) throw ConfigError("stroke_width must be >= 0");
  if (!positive(style.font_size)) throw ConfigError("font_size must be positive");
  if (style.precision < 0 || style.precision > kMaxPrecision)
    throw ConfigError("precision must be in [0, " + std::to_string(kMaxPrecision) + "]");
  for (const auto* colour : {&style.base_fill, &style.highlight_fill, &style.stroke})
    if (!is_hex_colour(*colour)) throw ConfigError("colour '" + *colour + "' is not a #rgb/#rrggbb hex string");
}

std::string render_mosaic(const MosaicLayout& layout, const std::optional<HighlightSpec>& highlight,
                          const RenderStyle& style) {
  validate_style(style);
  check_layout(layout);
  std::ostringstream out;
  std::string title = "Probability mosaic";
  if (highlight && !highlight->denominator.empty()) {
    const auto b = highlight->denominator.front().b.value;
    title += " shading " + layout.outcome_labels.at(b).text;
  }
  open_document(out, style.width, style.height, title);
  emit_mosaic_panel(out, layout, highlight, style, "single", 0.0, 0.0);
  close_document(out);
  return out.str();
}

std::string render_ratio(const RatioFigureModel& figure, const RenderStyle& style) {
  validate_style(style);
  check_layout(figure.numerator.layout);
  check_layout(figure.denominator.layout);

  const auto& lay = figure.numerator.layout;
  const std::string& a_text = lay.prior_labels.at(figure.query.a.value).text;
  const std::string& b_text = lay.outcome_labels.at(figure.query.b.value).text;
  const std::string query = "P(" + a_text + "|" + b_text + ") = " + format_fixed(figure.value, style.precision);
  const std::string areas = "= " + format_fixed(figure.numerator_area, style.precision) + " / " +
                            format_fixed(figure.denominator_area, style.precision);

  const double band = 4.0 * style.font_size;
  const double annotation_width =
      kGlyphAdvance * style.font_size * static_cast<double>(std::max(glyph_count(query), glyph_count(areas))) +
      2.0 * style.font_size;
  const double total_w = style.width + annotation_width;
  const double total_h = 2.0 * style.height + band;
  const double bar_y = style.height + band / 2.0;

  std::ostringstream out;
  open_document(out, total_w, total_h, "Ratio of probability mosaics for P(" + a_text + "|" + b_text + ")");
  emit_mosaic_panel(out, figure.numerator.layout, figure.numerator.highlight, style, "numerator", 0.0, 0.0);
  out << "<line class=\"fraction-bar\" x1=\"0\" y1=\"" << c(bar_y) << "\" x2=\"";
  out << c(style.width) << "\" y2=\"";
  out << c(bar_y) << "\" stroke=\"" << style.stroke << "\" stroke-width=\"2\"/>\n";
  const double text_x = style.width + style.font_size;
  out << "<g class=\"annotation\" data-a=\"" << figure.query.a.value << "\" data-b=\"" << figure.query.b.value
      << "\" data-value=\"" << format_fixed(figure.value, kMaxPrecision) << "\">\n";
  text_element(out, "query", text_x, bar_y - kLineHeight * style.font_size / 2.0, style.font_size, "start", query);
  text_element(out, "areas", text_x, bar_y + kLineHeight * style.font_size / 2.0, style.font_size, "start", areas);
  out << "</g>\n";
  emit_mosaic_panel(out, figure.denominator.layout, figure.denominator.highlight, style, "denominator", 0.0,
                    style.height + band);
  close_document(out);
  return out.str();
}

std::string render_tree(const TreeDiagram& tree, const RenderStyle& style) {
  validate_style(style);
  if (tree.nodes.size() != 1 + tree.prior_count + tree.prior_count * tree.outcome_count)
    throw ConfigError("tree node count does not match its partition sizes");

  const bool labels = style.label_mode != LabelMode::kNone;
  const bool probs = style.label_mode == LabelMode::kLabelsAndProbs;
  const double left = 2.0 * style.font_size;
  const double right = (probs ? 10.0 : 4.0) * style.font_size;
  const double top = 1.5 * style.font_size;
  const double bottom = 1.5 * style.font_size;
  const double span_x = std::max(style.width - left - right, 1.0);
  const double span_y = std::max(style.height - top - bottom, 1.0);
  auto px = [&](const TreeNode& n) { return left + n.x * span_x; };
  auto py = [&](const TreeNode& n) { return top + n.y * span_y; };

  std::ostringstream out;
  open_document(out, style.width, style.height,
                tree.root().label.empty() ? "Probability tree" : "Probability tree: " + tree.root().label);
  out << "<g class=\"tree\">\n";
  for (const TreeEdge& e : tree.edges) {
    const TreeNode& from = tree.nodes[e.from];
    const TreeNode& to = tree.nodes[e.to];
    out << "<line class=\"edge\" data-from=\"" << e.from << "\" data-to=\"" << e.to << "\"";
    if (to.a_index) out << " data-a=\"" << *to.a_index << "\"";
    if (to.b_index) out << " data-b=\"" << *to.b_index << "\"";
    out << " x1=\"" << c(px(from)) << "\" y1=\"";
    out << c(py(from)) << "\" x2=\"";
    out << c(px(to)) << "\" y2=\"";
    out << c(py(to)) << "\" stroke=\"" << style.stroke << "\" stroke-width=\"";
    out << c(style.stroke_width) << "\"/>\n";
  }
  for (const TreeNode& n : tree.nodes) {
    out << "<circle class=\"node\" data-id=\"" << n.id << "\" cx=\"" << c(px(n)) << "\" cy=\"";
    out << c(py(n)) << "\" r=\"3\" fill=\"" << style.stroke << "\"/>\n";
  }
  if (labels) {
    for (const TreeEdge& e : tree.edges) {
      const TreeNode& from = tree.nodes[e.from];
      const TreeNode& to = tree.nodes[e.to];
      const double mx = (px(from) + px(to)) / 2.0;
      const double my = (py(from) + py(to)) / 2.0 - style.font_size / 2.0;
      text_element(out, "edge-prob", mx, my, style.font_size, "middle", format_fixed(e.probability, style.precision));
    }
    for (const TreeNode& n : tree.nodes) {
      if (n.level == TreeLevel::kRoot) continue;
      std::string text = n.label;
      if (n.level == TreeLevel::kOutcome && probs) text += "  " + format_fixed(n.path_probability, style.precision);
      text_element(out, "node-label", px(n) + style.font_size / 2.0, py(n), style.font_size, "start", text);
    }
  }
  out << "</g>\n";
  close_document(out);
  return out.str();
}

std::string to_string(LabelMode mode) {
  switch (mode) {
    case LabelMode::kNone: return "none";
    case LabelMode::kLabels: return "labels";
    case LabelMode::kLabelsAndProbs: return "labels_and_probs";
  }
  return "labels_and_probs";
}

LabelMode parse_label_mode(std::string_view text) {
  if (text == "none") return LabelMode::kNone;
  if (text == "labels") return LabelMode::kLabels;
  if (text == "labels_and_probs" || text == "probs") return LabelMode::kLabelsAndProbs;
  throw ConfigError("unknown label mode '" + std::string(text) + "' (expected none, labels, labels_and_probs)");
}

}  // namespace bayesmosaic
