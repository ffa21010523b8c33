#pragma once

// HTTP backend for the explorer UI. All /api routes are stateless: the model
// travels in every request body and handlers only call pure core functions.
//
//   POST /api/validate  {model}                        -> validation document
//   POST /api/posterior {model, given}                 -> posterior document
//   POST /api/layout    {model, orientation?, given?}  -> mosaic document
//   POST /api/ratio     {model, given, of, orientation?} -> ratio document
//   POST /api/tree      {model}                        -> tree document
//   GET  /api/examples                                 -> bundled models
//   GET  /api/models, /api/models/<file>               -> models in --model-dir
//   GET  /healthz
//
// Any POST body may set "svg": true to also receive the rendered figure.

#include <atomic>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "bayesmosaic/svg.hpp"

namespace httplib {
class Server;
}

namespace bayesmosaic::service {

struct ApiResponse {
  int status = 200;
  nlohmann::json body;
};

/// Routes one POST /api/<route> request. Never throws.
ApiResponse handle_post(std::string_view route, std::string_view body, const RenderStyle& style = {});

nlohmann::json examples_document();

struct Options {
  std::string host = "127.0.0.1";
  int port = 8080;  // 0 picks a free port
  std::filesystem::path model_dir;
  std::optional<std::filesystem::path> ui_dir;
  RenderStyle style;
};

class Server {
 public:
  explicit Server(Options options);
  ~Server();
  Server(const Server&) = delete;
  Server& operator=(const Server&) = delete;

  /// Binds the listening socket and returns the bound port. Throws on failure.
  int bind();
  /// Serves until stop() is called. bind() must have succeeded.
  void run();
  void stop();
  bool running() const;

 private:
  Options options_;
  std::unique_ptr<httplib::Server> server_;
  int port_ = -1;
};

}  // namespace bayesmosaic::service
