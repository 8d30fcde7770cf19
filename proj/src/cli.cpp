#include "lamseifert/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <future>
#include <iostream>
#include <sstream>

#include "lamseifert/diagram_io.hpp"
#include "lamseifert/error.hpp"
#include "lamseifert/homology.hpp"
#include "lamseifert/report.hpp"
#include "lamseifert/seifert.hpp"
#include "lamseifert/svg.hpp"
#include "lamseifert/weights.hpp"

namespace lamseifert::cli {

namespace fs = std::filesystem;
using io::json;

namespace {

int exit_code_for(const Error& e) {
  return e.kind() == ErrorKind::Io || e.kind() == ErrorKind::Syntax ? kUsageError : kDomainError;
}

template <class F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e);
  }
}

void emit(const json& doc, const RunConfig& config, std::ostream& out) {
  out << (config.format == "text" ? report::to_text(doc) : doc.dump(2) + "\n");
}

io::DiagramDocument load(const RunConfig& config) {
  return io::parse_document(io::read_file(config.input), config.precision);
}

json read_json_arg(const std::string& arg, const char* what) {
  std::error_code ec;
  const std::string text = fs::is_regular_file(arg, ec) ? io::read_file(arg) : arg;
  try {
    json j = json::parse(text);
    // A file may wrap the vector as {"weights": ...} or {"twists": ...}.
    if (j.is_object() && j.contains(what)) return j.at(what);
    return j;
  } catch (const json::parse_error&) {
    throw Error(ErrorKind::Syntax, std::string("--") + what + " is neither a readable file nor JSON");
  }
}

struct Weights {
  ScalarVector values;
  std::string source;
};

Weights resolve_weights(const RunConfig& config, const io::DiagramDocument& doc) {
  if (config.weights) {
    return {io::weights_from_json(read_json_arg(*config.weights, "weights"), doc.diagram, doc.context), "argument"};
  }
  if (doc.weights) return {*doc.weights, "file"};
  const auto sample = positive_invariant_vector(doc.diagram);
  if (!sample) throw Error(ErrorKind::NonPositiveWeight, "empty positive cone and no weights given");
  return {to_scalars(*sample), "sample"};
}

int run_single(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const std::string& c = config.command;
  if (c == "validate") return cmd_validate(config, out, err);
  if (c == "cone") return cmd_cone(config, out, err);
  if (c == "seifert") return cmd_seifert(config, out, err);
  if (c == "twistspace") return cmd_twistspace(config, out, err);
  if (c == "verify") return cmd_verify(config, out, err);
  if (c == "svg") return cmd_svg(config, out, err);
  err << "error: unknown command '" << c << "'\n";
  return kUsageError;
}

int run_batch(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::error_code ec;
  if (!fs::is_directory(config.input, ec)) {
    err << "error: --batch needs a directory, got '" << config.input << "'\n";
    return kUsageError;
  }
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(config.input)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());

  struct Result {
    int code;
    std::string out, err;
  };
  std::vector<std::future<Result>> jobs;
  for (const auto& file : files) {
    RunConfig one = config;
    one.input = file.string();
    one.batch = false;
    one.out.reset();
    jobs.push_back(std::async(std::launch::async, [one] {
      std::ostringstream o, e;
      const int code = run_single(one, o, e);
      return Result{code, o.str(), e.str()};
    }));
  }

  int worst = kOk;
  json combined = json::object();
  std::string text;
  for (std::size_t i = 0; i < files.size(); ++i) {
    const Result r = jobs[i].get();
    worst = std::max(worst, r.code);
    const std::string name = files[i].filename().string();
    if (config.format == "text") {
      text += "== " + name + " (exit " + std::to_string(r.code) + ")\n" + r.out + r.err;
      continue;
    }
    json entry{{"exit", r.code}, {"errors", r.err}};
    try {
      entry["output"] = r.out.empty() ? json(nullptr) : json::parse(r.out);
    } catch (const json::parse_error&) {
      entry["output"] = r.out;
    }
    combined[name] = std::move(entry);
  }
  out << (config.format == "text" ? text : combined.dump(2) + "\n");
  return worst;
}

}  // namespace

int cmd_validate(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto doc = io::parse_document_unchecked(io::read_file(config.input), config.precision);
    const auto violations = validate(doc.diagram);
    emit(report::violations(violations), config, out);
    for (const auto& v : violations) err << "violation: " << v.invariant << " at '" << v.element << "': " << v.detail << "\n";
    return violations.empty() ? kOk : kDomainError;
  });
}

int cmd_cone(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto doc = load(config);
    emit(report::cone(doc.diagram, invariant_space(doc.diagram)), config, out);
    return kOk;
  });
}

int cmd_seifert(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto doc = load(config);
    const Weights w = resolve_weights(config, doc);
    const SeifertRun r = run(doc.diagram, w.values, doc.context);
    const bool verified = homology::verify(doc.diagram, w.values, r.params.twists).valid;
    json result = report::seifert(doc.diagram, r, doc.context, verified);
    result["weights_source"] = w.source;
    emit(result, config, out);
    return verified ? kOk : kDomainError;
  });
}

int cmd_twistspace(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto doc = load(config);
    const Weights w = resolve_weights(config, doc);
    const auto space = homology::valid_twist_space(doc.diagram, w.values);
    for (const auto& warning : space.warnings) err << "warning: " << warning << "\n";
    json result = report::twist_space(doc.diagram, space, doc.context);
    result["weights_source"] = w.source;
    emit(result, config, out);
    return kOk;
  });
}

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (!config.twists) {
    err << "error: verify needs --twists\n";
    return kUsageError;
  }
  return guarded(err, [&] {
    const auto doc = load(config);
    const Weights w = resolve_weights(config, doc);
    const ScalarVector t = io::weights_from_json(read_json_arg(*config.twists, "twists"), doc.diagram, doc.context);
    emit(report::verdict(homology::verify(doc.diagram, w.values, t), doc.context), config, out);
    return kOk;
  });
}

int cmd_svg(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto doc = load(config);
    std::optional<ScalarVector> weights = doc.weights;
    if (config.weights) weights = resolve_weights(config, doc).values;
    std::optional<SeifertRun> r;
    if (config.overlay) {
      const ScalarVector w = weights ? *weights : resolve_weights(config, doc).values;
      r = run(doc.diagram, w, doc.context);
      if (!weights) weights = w;
    }
    svg::SvgOptions options;
    options.stroke_by_weight = config.stroke_by_weight;
    out << svg::render(doc.diagram, weights, doc.context, r ? &*r : nullptr, options);
    return kOk;
  });
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (config.precision < 16) {
    err << "error: --precision must be at least 16\n";
    return kUsageError;
  }
  if (config.format != "json" && config.format != "text") {
    err << "error: --format must be json or text\n";
    return kUsageError;
  }
  if (!config.out) return config.batch ? run_batch(config, out, err) : run_single(config, out, err);
  std::ostringstream buffer;
  const int code = config.batch ? run_batch(config, buffer, err) : run_single(config, buffer, err);
  return guarded(err, [&] {
    io::write_file(*config.out, buffer.str());
    return code;
  });
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Seifert laminations for weighted train-track diagrams"};
  app.require_subcommand(1);
  RunConfig config;
  bool uniform_stroke = false;

  struct Command {
    const char* name;
    const char* help;
  };
  const Command commands[] = {
      {"validate", "check structural invariants of a diagram file"},
      {"cone", "basis of invariant weights and a positive sample"},
      {"seifert", "twist vector and Seifert lamination from the splitting algorithm"},
      {"twistspace", "affine space of twist vectors that bound"},
      {"verify", "test whether given twists bound"},
      {"svg", "schematic drawing of the diagram"},
  };
  for (const auto& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("input", config.input, "diagram file (a directory with --batch)")->required();
    sub->add_option("--weights", config.weights, "weight vector: a JSON file or inline JSON");
    sub->add_option("--precision", config.precision, "decimal digits for ordering irrational scalars")
        ->check(CLI::Range(16, 100000));
    sub->add_option("--format", config.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--out", config.out, "write output here instead of stdout");
    sub->add_flag("--batch", config.batch, "run over every .json file in a directory");
    if (std::string(c.name) == "verify") {
      sub->add_option("--twists", config.twists, "twist vector: a JSON file or inline JSON")->required();
    }
    if (std::string(c.name) == "svg") {
      sub->add_flag("--overlay", config.overlay, "draw the circle families found by seifert");
      sub->add_flag("--uniform-stroke", uniform_stroke, "ignore weights when choosing stroke widths");
    }
    sub->callback([&config, name = std::string(c.name)] { config.command = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }
  config.stroke_by_weight = !uniform_stroke;
  return run(config, out, err);
}

}  // namespace lamseifert::cli
