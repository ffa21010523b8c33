#include "service.hpp"

#include <algorithm>
#include <stdexcept>

#include <httplib.h>

#include "bayesmosaic/bayes.hpp"
#include "bayesmosaic/examples.hpp"
#include "bayesmosaic/json_export.hpp"
#include "bayesmosaic/model_io.hpp"
#include "bayesmosaic/mosaic.hpp"
#include "bayesmosaic/tree.hpp"

namespace bayesmosaic::service {

using nlohmann::json;

namespace {

constexpr std::size_t kMaxBody = 1 << 20;

ApiResponse error_response(int status, std::string message, std::optional<ValidationReport> report = {}) {
  json body = {{"error", std::move(message)}};
  if (report) body["violations"] = to_json(*report)["violations"];
  return {status, std::move(body)};
}

std::string require_string(const json& req, const char* key) {
  auto it = req.find(key);
  if (it == req.end() || !it->is_string()) throw ParseError(std::string("request needs a string \"") + key + "\"");
  return it->get<std::string>();
}

// Accepts {"model": {...}} or a bare model document.
LoadedModel request_model(const json& req) {
  if (auto it = req.find("model"); it != req.end()) return model_from_json(*it);
  if (req.contains("prior")) return model_from_json(req);
  throw ParseError("request needs a \"model\" object");
}

Orientation request_orientation(const json& req) {
  auto it = req.find("orientation");
  if (it == req.end() || it->is_null()) return Orientation::kAAsColumns;
  if (!it->is_string()) throw ParseError("\"orientation\" must be a string");
  return parse_orientation(it->get<std::string>());
}

bool wants_svg(const json& req) {
  auto it = req.find("svg");
  return it != req.end() && it->is_boolean() && it->get<bool>();
}

ApiResponse dispatch(std::string_view route, const json& req, const RenderStyle& style) {
  if (route == "validate") {
    LoadedModel loaded = request_model(req);
    return {200, to_json(loaded.issues)};
  }

  BayesModel model = require_model(request_model(req));

  if (route == "posterior") {
    const OutcomeIndex b = find_outcome(model, require_string(req, "given"));
    return {200, to_json(posterior(model, b))};
  }
  if (route == "layout") {
    const MosaicLayout lay = layout(model, request_orientation(req));
    std::optional<HighlightSpec> highlight;
    if (auto it = req.find("given"); it != req.end() && !it->is_null())
      highlight = highlight_condition(lay, find_outcome(model, require_string(req, "given")));
    json doc = to_json(lay, highlight);
    if (highlight) doc["marginal"] = highlighted_area(lay, *highlight);
    if (wants_svg(req)) doc["svg"] = render_mosaic(lay, highlight, style);
    return {200, std::move(doc)};
  }
  if (route == "ratio") {
    const OutcomeIndex b = find_outcome(model, require_string(req, "given"));
    const PriorIndex a = find_prior(model, require_string(req, "of"));
    const RatioFigureModel fig = ratio_figure(model, a, b, request_orientation(req));
    json doc = to_json(fig);
    if (wants_svg(req)) doc["svg"] = render_ratio(fig, style);
    return {200, std::move(doc)};
  }
  if (route == "tree") {
    const TreeDiagram tree = build_tree(model);
    json doc = to_json(tree);
    if (wants_svg(req)) doc["svg"] = render_tree(tree, style);
    return {200, std::move(doc)};
  }
  return error_response(404, "unknown endpoint /api/" + std::string(route));
}

std::vector<std::filesystem::path> model_files(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> files;
  if (dir.empty() || !std::filesystem::is_directory(dir)) return files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    const auto ext = entry.path().extension();
    if (entry.is_regular_file() && (ext == ".json" || ext == ".csv")) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  return files;
}

void send_json(httplib::Response& res, const ApiResponse& api) {
  res.status = api.status;
  res.set_content(api.body.dump(), "application/json");
}

}  // namespace

ApiResponse handle_post(std::string_view route, std::string_view body, const RenderStyle& style) {
  try {
    json req = json::parse(body.begin(), body.end());
    if (!req.is_object()) return error_response(400, "request body must be a JSON object");
    return dispatch(route, req, style);
  } catch (const json::parse_error& e) {
    return error_response(400, std::string("malformed JSON: ") + e.what());
  } catch (const ValidationError& e) {
    return error_response(400, e.what(), e.report());
  } catch (const NullConditioningError& e) {
    return error_response(422, e.what());
  } catch (const Error& e) {
    return error_response(400, e.what());
  } catch (const json::exception& e) {
    return error_response(400, e.what());
  } catch (const std::exception& e) {
    return error_response(500, e.what());
  }
}

json examples_document() {
  json list = json::array();
  list.push_back({{"name", "example1"}, {"model", model_to_json(examples::surveillance())}});
  list.push_back({{"name", "example2"}, {"model", model_to_json(examples::four_by_four())}});
  return {{"examples", std::move(list)}};
}

Server::Server(Options options) : options_(std::move(options)), server_(std::make_unique<httplib::Server>()) {
  validate_style(options_.style);
  auto& srv = *server_;
  srv.set_payload_max_length(kMaxBody);

  for (const char* route : {"validate", "posterior", "layout", "ratio", "tree"}) {
    const std::string name = route;
    srv.Post("/api/" + name, [this, name](const httplib::Request& req, httplib::Response& res) {
      send_json(res, handle_post(name, req.body, options_.style));
    });
  }
  srv.Get("/api/examples", [](const httplib::Request&, httplib::Response& res) {
    send_json(res, {200, examples_document()});
  });
  srv.Get("/api/models", [this](const httplib::Request&, httplib::Response& res) {
    json names = json::array();
    for (const auto& p : model_files(options_.model_dir)) names.push_back(p.filename().string());
    send_json(res, {200, {{"models", std::move(names)}}});
  });
  srv.Get(R"(/api/models/([^/]+))", [this](const httplib::Request& req, httplib::Response& res) {
    const std::string name = req.matches[1];
    for (const auto& p : model_files(options_.model_dir)) {
      if (p.filename().string() != name) continue;
      try {
        LoadedModel loaded = load_model_file(p);
        send_json(res, {200, {{"name", name}, {"model", model_to_json(loaded.model)},
                              {"validation", to_json(loaded.issues)}}});
      } catch (const Error& e) {
        send_json(res, error_response(400, e.what()));
      }
      return;
    }
    send_json(res, error_response(404, "no model named '" + name + "'"));
  });
  srv.Get("/healthz", [](const httplib::Request&, httplib::Response& res) {
    res.set_content(R"({"status":"ok"})", "application/json");
  });

  if (options_.ui_dir && std::filesystem::is_directory(*options_.ui_dir)) {
    srv.set_mount_point("/", options_.ui_dir->string());
  } else {
    srv.Get("/", [](const httplib::Request&, httplib::Response& res) {
      res.set_content("bayesmosaic service: UI assets not installed; API under /api\n", "text/plain");
    });
  }
}

Server::~Server() { stop(); }

int Server::bind() {
  const bool ok = options_.port == 0 ? (port_ = server_->bind_to_any_port(options_.host)) > 0
                                     : server_->bind_to_port(options_.host, options_.port);
  if (!ok) throw std::runtime_error("cannot bind " + options_.host + ":" + std::to_string(options_.port));
  if (options_.port != 0) port_ = options_.port;
  return port_;
}

void Server::run() {
  if (port_ < 0) throw std::logic_error("Server::run() before bind()");
  server_->listen_after_bind();
}

void Server::stop() {
  if (server_) server_->stop();
}

bool Server::running() const { return server_ && server_->is_running(); }

}  // namespace bayesmosaic::service
