#pragma once

// JSON documents exchanged with the explorer UI and written by `export`.
// Every document is an envelope
//   { "schema": "bayesmosaic.layout", "version": 1, "kind": <kind>, ... }
// with kind one of "mosaic", "ratio", "tree", "posterior", "validation".
// Probabilities and coordinates are emitted at full double precision.

#include <optional>

#include <nlohmann/json.hpp>

#include "bayesmosaic/bayes.hpp"
#include "bayesmosaic/mosaic.hpp"
#include "bayesmosaic/tree.hpp"

namespace bayesmosaic {

inline constexpr int kLayoutSchemaVersion = 1;
inline constexpr char kLayoutSchemaName[] = "bayesmosaic.layout";

nlohmann::json envelope(std::string_view kind);

nlohmann::json to_json(const ValidationReport& report);
nlohmann::json to_json(const PosteriorResult& result);
nlohmann::json to_json(const MosaicLayout& layout, const std::optional<HighlightSpec>& highlight = std::nullopt);
nlohmann::json to_json(const RatioFigureModel& figure);
nlohmann::json to_json(const TreeDiagram& tree);

}  // namespace bayesmosaic
