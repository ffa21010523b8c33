#pragma once

// Model and style files.
//
// Model JSON (schema "bayesmosaic.model", version 1):
//   { "title": "...",
//     "prior": [ {"label": "A1", "p": 0.9}, ... ],
//     "conditional": [ {"given": "A1", "outcomes": [ {"label": "B1", "p": 0.7}, ... ]}, ... ] }
//
// Model CSV: two sections, each opened by its header line. Blank lines and
// lines starting with '#' are ignored.
//   label,p
//   A1,0.9
//   given,outcome,p
//   A1,B1,0.7

#include <filesystem>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "bayesmosaic/bayes.hpp"
#include "bayesmosaic/svg.hpp"

namespace bayesmosaic {

inline constexpr int kModelSchemaVersion = 1;
inline constexpr char kModelSchemaName[] = "bayesmosaic.model";

// A syntactically well-formed model plus every invariant it violates,
// including cross-row label mismatches the BayesModel itself cannot hold.
struct LoadedModel {
  BayesModel model;
  ValidationReport issues;

  bool valid() const noexcept { return issues.empty(); }
};

/// Throws ParseError for malformed JSON or a document of the wrong shape.
LoadedModel model_from_json(const nlohmann::json& doc);
LoadedModel parse_model_json(std::string_view text);
LoadedModel parse_model_csv(std::string_view text);

/// Reads a file; ".csv" or as_csv selects the CSV reader. Throws ParseError
/// (also for unreadable files, with no line information).
LoadedModel load_model_file(const std::filesystem::path& path, bool as_csv = false);

/// Like the loaders above, but throws ValidationError unless the model is valid.
BayesModel require_model(LoadedModel loaded);

nlohmann::json model_to_json(const BayesModel& model);

/// Unknown keys and ill-typed values are ParseErrors; the result is validated.
RenderStyle style_from_json(const nlohmann::json& doc, RenderStyle base = {});
RenderStyle load_style_file(const std::filesystem::path& path, RenderStyle base = {});

std::string read_text_file(const std::filesystem::path& path);

}  // namespace bayesmosaic
