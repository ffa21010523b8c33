#include "cli.hpp"

#include <csignal>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <pthread.h>
#include <thread>
#include <unistd.h>

#include <CLI11.hpp>

#include "bayesmosaic/bayes.hpp"
#include "bayesmosaic/format.hpp"
#include "bayesmosaic/json_export.hpp"
#include "bayesmosaic/model_io.hpp"
#include "bayesmosaic/mosaic.hpp"
#include "bayesmosaic/svg.hpp"
#include "bayesmosaic/tree.hpp"
#include "service.hpp"

namespace bayesmosaic::cli {

namespace {

struct ModelArgs {
  std::string path;
  bool from_csv = false;
};

// Style flags override the --style file, which overrides $BAYESMOSAIC_STYLE.
struct StyleArgs {
  std::string style_file;
  std::optional<double> width, height, gutter, font_size, min_extent, stroke_width;
  std::optional<std::string> base_fill, highlight_fill, stroke, labels;
  std::optional<int> precision;
};

void add_model(CLI::App* cmd, ModelArgs& m) {
  cmd->add_option("model", m.path, "Model file (JSON, or CSV with --from-csv / .csv)")->required();
  cmd->add_flag("--from-csv", m.from_csv, "Read the model as CSV (label,p / given,outcome,p sections)");
}

void add_style(CLI::App* cmd, StyleArgs& s) {
  cmd->add_option("--style", s.style_file, "Style JSON file (default: $BAYESMOSAIC_STYLE)");
  cmd->add_option("--width", s.width, "Canvas width per mosaic, px");
  cmd->add_option("--height", s.height, "Canvas height per mosaic, px");
  cmd->add_option("--gutter", s.gutter, "Gap between tiles, px");
  cmd->add_option("--font-size", s.font_size, "Label font size, px");
  cmd->add_option("--min-extent", s.min_extent, "Skip tiles thinner than this many px");
  cmd->add_option("--stroke-width", s.stroke_width, "Outline width, px");
  cmd->add_option("--base-fill", s.base_fill, "Fill for unshaded tiles (#rrggbb)");
  cmd->add_option("--highlight-fill", s.highlight_fill, "Fill for shaded tiles (#rrggbb)");
  cmd->add_option("--stroke", s.stroke, "Outline colour (#rrggbb)");
  cmd->add_option("--labels", s.labels, "none | labels | labels_and_probs");
  cmd->add_option("--precision", s.precision, "Decimals for printed probabilities")
      ->check(CLI::Range(0, kMaxPrecision));
}

RenderStyle resolve_style(const StyleArgs& s) {
  RenderStyle style;
  if (!s.style_file.empty()) {
    style = load_style_file(s.style_file);
  } else if (const char* env = std::getenv(kStyleEnv); env && *env) {
    style = load_style_file(env);
  }
  if (s.width) style.width = *s.width;
  if (s.height) style.height = *s.height;
  if (s.gutter) style.gutter = *s.gutter;
  if (s.font_size) style.font_size = *s.font_size;
  if (s.min_extent) style.min_render_extent = *s.min_extent;
  if (s.stroke_width) style.stroke_width = *s.stroke_width;
  if (s.base_fill) style.base_fill = *s.base_fill;
  if (s.highlight_fill) style.highlight_fill = *s.highlight_fill;
  if (s.stroke) style.stroke = *s.stroke;
  if (s.labels) style.label_mode = parse_label_mode(*s.labels);
  if (s.precision) style.precision = *s.precision;
  validate_style(style);
  return style;
}

BayesModel load(const ModelArgs& m) { return require_model(load_model_file(m.path, m.from_csv)); }

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty() || out_path == "-") {
    out << text;
    return;
  }
  std::ofstream file(out_path, std::ios::binary | std::ios::trunc);
  if (!file) throw ParseError("cannot open '" + out_path + "' for writing");
  file << text;
  file.close();
  if (!file) throw ParseError("error while writing '" + out_path + "'");
}

void print_report(const ValidationReport& report, std::ostream& err) {
  for (const Violation& v : report) err << to_string(v) << "\n";
}

void print_posterior(const PosteriorResult& r, int precision, std::ostream& out) {
  const std::string& b = r.conditioned_on.text;
  std::size_t width = 0;
  for (const auto& l : r.prior_labels) width = std::max(width, l.text.size());
  out << "given " << b << "\n";
  for (std::size_t i = 0; i < r.prior_labels.size(); ++i) {
    const std::string& a = r.prior_labels[i].text;
    out << std::left << std::setw(static_cast<int>(width)) << a << "  numerator=" << format_fixed(r.numerator_terms[i], precision)
        << "  P(" << a << "|" << b << ")=" << format_fixed(r.posterior[i], precision) << "\n";
  }
  out << "denominator P(" << b << ")=" << format_fixed(r.denominator, precision) << "\n";
}

// Blocks SIGINT/SIGTERM in every thread and stops the server from a
// dedicated sigwait thread.
int serve(service::Options options, std::ostream& out) {
  sigset_t signals;
  sigemptyset(&signals);
  sigaddset(&signals, SIGINT);
  sigaddset(&signals, SIGTERM);
  pthread_sigmask(SIG_BLOCK, &signals, nullptr);

  service::Server server(std::move(options));
  int port = 0;
  try {
    port = server.bind();
  } catch (...) {
    pthread_sigmask(SIG_UNBLOCK, &signals, nullptr);
    throw;
  }
  std::thread waiter([&] {
    int sig = 0;
    sigwait(&signals, &sig);
    server.stop();
  });
  out << "serving on port " << port << std::endl;
  server.run();
  // run() can only return after stop(); make sure the waiter is released either way.
  pthread_kill(waiter.native_handle(), SIGTERM);
  waiter.join();
  pthread_sigmask(SIG_UNBLOCK, &signals, nullptr);
  out << "shut down" << std::endl;
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bayes' rule as ratios of mosaic-plot areas", "bayesmosaic"};
  app.require_subcommand(1);

  ModelArgs model_args;
  StyleArgs style_args;
  std::string given, of, highlight, out_path, kind = "mosaic", orientation = "a_as_columns";
  bool json_out = false;
  int precision = kDefaultPrecision;

  auto* validate_cmd = app.add_subcommand("validate", "Check a model file against the probability axioms");
  add_model(validate_cmd, model_args);
  validate_cmd->add_flag("--json", json_out, "Print the validation document as JSON");

  auto* posterior_cmd = app.add_subcommand("posterior", "Print P(A_i | B) for every prior event");
  add_model(posterior_cmd, model_args);
  posterior_cmd->add_option("--given", given, "Observed outcome label")->required();
  posterior_cmd->add_option("--precision", precision, "Decimals to print")->check(CLI::Range(1, kMaxPrecision));
  posterior_cmd->add_flag("--json", json_out, "Print the posterior document as JSON");

  auto* mosaic_cmd = app.add_subcommand("mosaic", "Render the probability mosaic as SVG");
  add_model(mosaic_cmd, model_args);
  mosaic_cmd->add_option("--highlight", highlight, "Outcome label to shade");
  mosaic_cmd->add_option("--orientation", orientation, "a_as_columns | a_as_rows");
  mosaic_cmd->add_option("--out", out_path, "Output SVG path (default stdout)");
  add_style(mosaic_cmd, style_args);

  auto* ratio_cmd = app.add_subcommand("ratio", "Render P(A|B) as a ratio of two shaded mosaics");
  add_model(ratio_cmd, model_args);
  ratio_cmd->add_option("--given", given, "Observed outcome label")->required();
  ratio_cmd->add_option("--of", of, "Prior event label")->required();
  ratio_cmd->add_option("--orientation", orientation, "a_as_columns | a_as_rows");
  ratio_cmd->add_option("--out", out_path, "Output SVG path (default stdout)");
  add_style(ratio_cmd, style_args);

  auto* tree_cmd = app.add_subcommand("tree", "Render the probability tree as SVG");
  add_model(tree_cmd, model_args);
  tree_cmd->add_option("--out", out_path, "Output SVG path (default stdout)");
  add_style(tree_cmd, style_args);

  auto* export_cmd = app.add_subcommand("export", "Write the layout JSON document consumed by the explorer UI");
  add_model(export_cmd, model_args);
  export_cmd->add_option("--kind", kind, "mosaic | ratio | tree")
      ->check(CLI::IsMember({"mosaic", "ratio", "tree"}));
  export_cmd->add_option("--given", given, "Outcome label (ratio: required; mosaic: shaded)");
  export_cmd->add_option("--highlight", highlight, "Outcome label to shade (mosaic)");
  export_cmd->add_option("--of", of, "Prior event label (ratio)");
  export_cmd->add_option("--orientation", orientation, "a_as_columns | a_as_rows");
  export_cmd->add_option("--out", out_path, "Output JSON path (default stdout)");

  service::Options serve_opts;
  std::string model_dir, ui_dir;
  auto* serve_cmd = app.add_subcommand("serve", "Serve the HTTP API (and UI assets when present)");
  serve_cmd->add_option("--port", serve_opts.port, "TCP port (0 = any free port)")->check(CLI::Range(0, 65535));
  serve_cmd->add_option("--host", serve_opts.host, "Listen address");
  serve_cmd->add_option("--model-dir", model_dir, "Directory of model files listed under /api/models")
      ->check(CLI::ExistingDirectory);
  serve_cmd->add_option("--ui-dir", ui_dir, "Built explorer UI assets served at /");
  add_style(serve_cmd, style_args);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kIoOrParse;
  }

  try {
    if (validate_cmd->parsed()) {
      LoadedModel loaded = load_model_file(model_args.path, model_args.from_csv);
      if (json_out) out << to_json(loaded.issues).dump(2) << "\n";
      if (loaded.valid()) {
        if (!json_out) out << "valid\n";
        return kOk;
      }
      print_report(loaded.issues, err);
      return kValidation;
    }

    if (serve_cmd->parsed()) {
      serve_opts.model_dir = model_dir;
      if (!ui_dir.empty()) serve_opts.ui_dir = ui_dir;
      serve_opts.style = resolve_style(style_args);
      return serve(std::move(serve_opts), out);
    }

    const BayesModel model = load(model_args);
    const Orientation orient = parse_orientation(orientation);

    if (posterior_cmd->parsed()) {
      const PosteriorResult result = posterior(model, find_outcome(model, given));
      if (json_out)
        out << to_json(result).dump(2) << "\n";
      else
        print_posterior(result, precision, out);
      return kOk;
    }
    if (mosaic_cmd->parsed()) {
      const RenderStyle style = resolve_style(style_args);
      const MosaicLayout lay = layout(model, orient);
      std::optional<HighlightSpec> spec;
      if (!highlight.empty()) spec = highlight_condition(lay, find_outcome(model, highlight));
      emit(render_mosaic(lay, spec, style), out_path, out);
      return kOk;
    }
    if (ratio_cmd->parsed()) {
      const RenderStyle style = resolve_style(style_args);
      const auto fig = ratio_figure(model, find_prior(model, of), find_outcome(model, given), orient);
      emit(render_ratio(fig, style), out_path, out);
      return kOk;
    }
    if (tree_cmd->parsed()) {
      const RenderStyle style = resolve_style(style_args);
      emit(render_tree(build_tree(model), style), out_path, out);
      return kOk;
    }
    if (export_cmd->parsed()) {
      nlohmann::json doc;
      if (kind == "mosaic") {
        const MosaicLayout lay = layout(model, orient);
        const std::string shade = highlight.empty() ? given : highlight;
        std::optional<HighlightSpec> spec;
        if (!shade.empty()) spec = highlight_condition(lay, find_outcome(model, shade));
        doc = to_json(lay, spec);
      } else if (kind == "ratio") {
        if (given.empty() || of.empty()) throw IndexError("--kind ratio needs --given and --of");
        doc = to_json(ratio_figure(model, find_prior(model, of), find_outcome(model, given), orient));
      } else {
        doc = to_json(build_tree(model));
      }
      emit(doc.dump(2) + "\n", out_path, out);
      return kOk;
    }
  } catch (const ValidationError& e) {
    err << "error: invalid model\n";
    print_report(e.report(), err);
    return kValidation;
  } catch (const IndexError& e) {
    err << "error: " << e.what() << "\n";
    return kQuery;
  } catch (const NullConditioningError& e) {
    err << "error: " << e.what() << "\n";
    return kQuery;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kIoOrParse;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kIoOrParse;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kIoOrParse;
  }
  return kIoOrParse;
}

}  // namespace bayesmosaic::cli
