#include "bayesmosaic/model_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

namespace bayesmosaic {

using nlohmann::json;

namespace {

std::pair<std::size_t, std::size_t> line_and_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  const std::size_t end = std::min(byte == 0 ? 0 : byte - 1, text.size());
  for (std::size_t i = 0; i < end; ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

const json& member(const json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) throw ParseError(path + ": expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(path + ": missing \"" + key + "\"");
  return *it;
}

std::string string_at(const json& obj, const char* key, const std::string& path) {
  const json& v = member(obj, key, path);
  if (!v.is_string()) throw ParseError(path + "/" + key + ": expected a string");
  return v.get<std::string>();
}

double number_at(const json& obj, const char* key, const std::string& path) {
  const json& v = member(obj, key, path);
  if (!v.is_number()) throw ParseError(path + "/" + key + ": expected a number");
  return v.get<double>();
}

const json& array_at(const json& obj, const char* key, const std::string& path) {
  const json& v = member(obj, key, path);
  if (!v.is_array()) throw ParseError(path + "/" + key + ": expected an array");
  return v;
}

std::vector<EventLabel> indexed(const std::vector<std::string>& texts) {
  std::vector<EventLabel> out;
  for (std::size_t i = 0; i < texts.size(); ++i) out.push_back({texts[i], i});
  return out;
}

// Rows are positional: each row's outcome labels must repeat the first row's.
void check_outcome_labels(const std::vector<std::vector<std::string>>& row_labels, ValidationReport& issues) {
  if (row_labels.empty()) return;
  const auto& reference = row_labels.front();
  for (std::size_t i = 1; i < row_labels.size(); ++i) {
    const auto& row = row_labels[i];
    if (row.size() != reference.size()) continue;  // reported by validate_model
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (row[j] != reference[j])
        issues.push_back({"conditional", i, std::nullopt,
                          "outcome " + std::to_string(j) + " is '" + row[j] + "' but row 0 has '" +
                              reference[j] + "'"});
    }
  }
}

LoadedModel finish(BayesModel model, const std::vector<std::vector<std::string>>& row_labels) {
  LoadedModel loaded;
  check_outcome_labels(row_labels, loaded.issues);
  auto report = validate_model(model);
  loaded.issues.insert(loaded.issues.end(), report.begin(), report.end());
  loaded.model = std::move(model);
  return loaded;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_csv(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto comma = line.find(',', start);
    out.push_back(trim(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

double parse_probability(std::string_view field, std::size_t line) {
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size() || field.empty())
    throw ParseError("expected a number, got '" + std::string(field) + "'", line);
  return value;
}

}  // namespace

LoadedModel model_from_json(const json& doc) {
  if (!doc.is_object()) throw ParseError("model document must be a JSON object");
  if (auto it = doc.find("version"); it != doc.end()) {
    if (!it->is_number_integer() || it->get<int>() != kModelSchemaVersion)
      throw ParseError("unsupported model schema version " + it->dump() + " (expected " +
                       std::to_string(kModelSchemaVersion) + ")");
  }
  if (auto it = doc.find("schema"); it != doc.end() && *it != kModelSchemaName)
    throw ParseError("unexpected schema " + it->dump() + " (expected \"" + kModelSchemaName + "\")");

  BayesModel model;
  if (auto it = doc.find("title"); it != doc.end()) {
    if (!it->is_string()) throw ParseError("/title: expected a string");
    model.title = it->get<std::string>();
  }

  std::vector<std::string> prior_texts;
  const json& prior = array_at(doc, "prior", "");
  for (std::size_t i = 0; i < prior.size(); ++i) {
    const std::string path = "/prior/" + std::to_string(i);
    prior_texts.push_back(string_at(prior[i], "label", path));
    model.prior.probs.push_back(number_at(prior[i], "p", path));
  }
  model.prior.labels = indexed(prior_texts);

  std::vector<std::string> given_texts;
  std::vector<std::vector<std::string>> row_labels;
  const json& cond = array_at(doc, "conditional", "");
  for (std::size_t i = 0; i < cond.size(); ++i) {
    const std::string path = "/conditional/" + std::to_string(i);
    given_texts.push_back(string_at(cond[i], "given", path));
    const json& outcomes = array_at(cond[i], "outcomes", path);
    std::vector<std::string> labels;
    std::vector<double> row;
    for (std::size_t j = 0; j < outcomes.size(); ++j) {
      const std::string opath = path + "/outcomes/" + std::to_string(j);
      labels.push_back(string_at(outcomes[j], "label", opath));
      row.push_back(number_at(outcomes[j], "p", opath));
    }
    model.conditional.rows.push_back(std::move(row));
    row_labels.push_back(std::move(labels));
  }
  model.conditional.given_labels = indexed(given_texts);
  model.conditional.outcome_labels = indexed(row_labels.empty() ? std::vector<std::string>{} : row_labels.front());
  return finish(std::move(model), row_labels);
}

LoadedModel parse_model_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    auto [line, column] = line_and_column(text, e.byte);
    std::string what = e.what();
    // Drop nlohmann's "[json.exception.parse_error.101] parse error at line 1, column 1: " prefix.
    if (auto pos = what.rfind(": "); pos != std::string::npos) what = what.substr(pos + 2);
    throw ParseError("malformed model JSON: " + what, line, column);
  }
  return model_from_json(doc);
}

LoadedModel parse_model_csv(std::string_view text) {
  enum class Section { kNone, kPrior, kConditional } section = Section::kNone;
  BayesModel model;
  std::vector<std::string> prior_texts;
  std::vector<std::string> outcome_texts;
  std::map<std::pair<std::string, std::string>, std::pair<double, std::size_t>> cells;
  bool saw_prior = false;
  bool saw_conditional = false;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    std::string_view raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    auto fields = split_csv(line);

    if (fields.size() == 2 && fields[0] == "label" && fields[1] == "p") {
      if (saw_prior) throw ParseError("duplicate prior section", line_no);
      section = Section::kPrior;
      saw_prior = true;
      continue;
    }
    if (fields.size() == 3 && fields[0] == "given" && fields[1] == "outcome" && fields[2] == "p") {
      if (saw_conditional) throw ParseError("duplicate conditional section", line_no);
      section = Section::kConditional;
      saw_conditional = true;
      continue;
    }

    switch (section) {
      case Section::kNone:
        throw ParseError("data before a 'label,p' or 'given,outcome,p' header", line_no);
      case Section::kPrior: {
        if (fields.size() != 2) throw ParseError("prior rows need 2 fields (label,p)", line_no);
        prior_texts.emplace_back(fields[0]);
        model.prior.probs.push_back(parse_probability(fields[1], line_no));
        break;
      }
      case Section::kConditional: {
        if (fields.size() != 3) throw ParseError("conditional rows need 3 fields (given,outcome,p)", line_no);
        std::string given(fields[0]);
        std::string outcome(fields[1]);
        if (std::find(outcome_texts.begin(), outcome_texts.end(), outcome) == outcome_texts.end())
          outcome_texts.push_back(outcome);
        auto [it, inserted] = cells.try_emplace({given, outcome}, parse_probability(fields[2], line_no), line_no);
        if (!inserted)
          throw ParseError("duplicate entry for (" + given + ", " + outcome + "), first seen on line " +
                               std::to_string(it->second.second),
                           line_no);
        break;
      }
    }
  }
  if (!saw_prior) throw ParseError("missing 'label,p' prior section");
  if (!saw_conditional) throw ParseError("missing 'given,outcome,p' conditional section");

  for (const auto& [key, value] : cells) {
    if (std::find(prior_texts.begin(), prior_texts.end(), key.first) == prior_texts.end())
      throw ParseError("conditional entry names unknown prior event '" + key.first + "'", value.second);
  }

  model.prior.labels = indexed(prior_texts);
  model.conditional.given_labels = model.prior.labels;
  model.conditional.outcome_labels = indexed(outcome_texts);
  for (const auto& given : prior_texts) {
    std::vector<double> row;
    for (const auto& outcome : outcome_texts) {
      auto it = cells.find({given, outcome});
      if (it == cells.end()) throw ParseError("missing conditional entry for (" + given + ", " + outcome + ")");
      row.push_back(it->second.first);
    }
    model.conditional.rows.push_back(std::move(row));
  }
  return finish(std::move(model), {});
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw ParseError("error while reading '" + path.string() + "'");
  return buf.str();
}

LoadedModel load_model_file(const std::filesystem::path& path, bool as_csv) {
  const std::string text = read_text_file(path);
  const bool csv = as_csv || path.extension() == ".csv";
  try {
    return csv ? parse_model_csv(text) : parse_model_json(text);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.detail(), e.line(), e.column());
  }
}

BayesModel require_model(LoadedModel loaded) {
  if (!loaded.valid()) throw ValidationError(std::move(loaded.issues));
  return std::move(loaded.model);
}

json model_to_json(const BayesModel& model) {
  json doc = {{"schema", kModelSchemaName}, {"version", kModelSchemaVersion}};
  if (!model.title.empty()) doc["title"] = model.title;
  json prior = json::array();
  for (std::size_t i = 0; i < model.prior.labels.size(); ++i)
    prior.push_back({{"label", model.prior.labels[i].text}, {"p", model.prior.probs.at(i)}});
  doc["prior"] = std::move(prior);

  json cond = json::array();
  for (std::size_t i = 0; i < model.conditional.rows.size(); ++i) {
    json outcomes = json::array();
    const auto& row = model.conditional.rows[i];
    for (std::size_t j = 0; j < row.size(); ++j)
      outcomes.push_back({{"label", model.conditional.outcome_labels.at(j).text}, {"p", row[j]}});
    cond.push_back({{"given", model.conditional.given_labels.at(i).text}, {"outcomes", std::move(outcomes)}});
  }
  doc["conditional"] = std::move(cond);
  return doc;
}

RenderStyle style_from_json(const json& doc, RenderStyle style) {
  if (!doc.is_object()) throw ParseError("style document must be a JSON object");
  auto num = [](const json& v, const std::string& key) {
    if (!v.is_number()) throw ParseError("style." + key + ": expected a number");
    return v.get<double>();
  };
  auto str = [](const json& v, const std::string& key) {
    if (!v.is_string()) throw ParseError("style." + key + ": expected a string");
    return v.get<std::string>();
  };
  for (const auto& [key, value] : doc.items()) {
    if (key == "width") style.width = num(value, key);
    else if (key == "height") style.height = num(value, key);
    else if (key == "gutter") style.gutter = num(value, key);
    else if (key == "base_fill") style.base_fill = str(value, key);
    else if (key == "highlight_fill") style.highlight_fill = str(value, key);
    else if (key == "stroke") style.stroke = str(value, key);
    else if (key == "stroke_width") style.stroke_width = num(value, key);
    else if (key == "font_size") style.font_size = num(value, key);
    else if (key == "min_render_extent") style.min_render_extent = num(value, key);
    else if (key == "label_mode") style.label_mode = parse_label_mode(str(value, key));
    else if (key == "precision") {
      if (!value.is_number_integer()) throw ParseError("style.precision: expected an integer");
      style.precision = value.get<int>();
    } else {
      throw ParseError("unknown style key '" + key + "'");
    }
  }
  validate_style(style);
  return style;
}

RenderStyle load_style_file(const std::filesystem::path& path, RenderStyle base) {
  const std::string text = read_text_file(path);
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    auto [line, column] = line_and_column(text, e.byte);
    throw ParseError(path.string() + ": malformed style JSON", line, column);
  }
  return style_from_json(doc, std::move(base));
}

}  // namespace bayesmosaic
