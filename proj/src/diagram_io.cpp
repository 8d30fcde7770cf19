#include "lamseifert/diagram_io.hpp"

#include <fstream>
#include <sstream>

#include "lamseifert/error.hpp"

namespace lamseifert::io {

namespace {

[[noreturn]] void syntax(const std::string& message) { throw Error(ErrorKind::Syntax, message); }

const json& field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) syntax(where + " must be an object");
  auto it = obj.find(key);
  if (it == obj.end()) syntax(where + " is missing field '" + key + "'");
  return *it;
}

std::string string_field(const json& obj, const char* key, const std::string& where) {
  const json& v = field(obj, key, where);
  if (!v.is_string()) syntax(where + "." + key + " must be a string");
  return v.get<std::string>();
}

const json& array_field(const json& obj, const char* key) {
  const json& v = field(obj, key, "diagram");
  if (!v.is_array()) syntax(std::string("diagram.") + key + " must be an array");
  return v;
}

End parse_end(const json& j, const std::string& where) {
  const std::string e = string_field(j, "end", where);
  if (e == "tail") return End::Tail;
  if (e == "head") return End::Head;
  syntax(where + ".end must be \"tail\" or \"head\"");
}

SegmentEnd parse_segment_end(const json& j, const std::string& where) {
  return SegmentEnd{string_field(j, "segment", where), parse_end(j, where)};
}

Endpoint parse_endpoint(const json& j, const std::string& where) {
  if (!j.is_object()) syntax(where + " must be an object");
  const bool has_switch = j.contains("switch");
  const bool has_marker = j.contains("marker");
  if (has_switch == has_marker) syntax(where + " needs exactly one of \"switch\" or \"marker\"");
  if (has_switch) return Endpoint{Endpoint::Kind::Switch, string_field(j, "switch", where)};
  return Endpoint{Endpoint::Kind::Marker, string_field(j, "marker", where)};
}

TraversalRef parse_traversal_ref(const json& j, const std::string& where) {
  const json& index = field(j, "index", where);
  if (!index.is_number_unsigned()) syntax(where + ".index must be a nonnegative integer");
  return TraversalRef{string_field(j, "segment", where), index.get<std::size_t>()};
}

json end_to_json(const SegmentEnd& e) {
  return json{{"segment", e.segment}, {"end", e.end == End::Tail ? "tail" : "head"}};
}

json endpoint_to_json(const Endpoint& ep) {
  return json{{ep.kind == Endpoint::Kind::Switch ? "switch" : "marker", ep.id}};
}

json ref_to_json(const TraversalRef& r) { return json{{"segment", r.segment}, {"index", r.index}}; }

TrainTrackDiagram diagram_from_json(const json& root) {
  TrainTrackDiagram d;
  for (const auto& j : array_field(root, "switches")) {
    const std::string id = string_field(j, "id", "switch");
    const std::string where = "switch '" + id + "'";
    const std::string mode = string_field(j, "mode", where);
    if (mode != "merge" && mode != "split") syntax(where + ".mode must be \"merge\" or \"split\"");
    d.switches.push_back(Switch{id, mode == "merge" ? SwitchMode::Merge : SwitchMode::Split,
                                parse_segment_end(field(j, "trunk", where), where + ".trunk"),
                                parse_segment_end(field(j, "left", where), where + ".left"),
                                parse_segment_end(field(j, "right", where), where + ".right")});
  }
  for (const auto& j : array_field(root, "segments")) {
    const std::string id = string_field(j, "id", "segment");
    const std::string where = "segment '" + id + "'";
    Segment seg{id, parse_endpoint(field(j, "from", where), where + ".from"),
                parse_endpoint(field(j, "to", where), where + ".to"), {}};
    if (j.contains("traversals")) {
      const json& trs = j.at("traversals");
      if (!trs.is_array()) syntax(where + ".traversals must be an array");
      for (const auto& t : trs) {
        const std::string role = string_field(t, "role", where + ".traversals[]");
        if (role != "over" && role != "under") syntax(where + " traversal role must be \"over\" or \"under\"");
        seg.traversals.push_back(
            Traversal{string_field(t, "crossing", where + ".traversals[]"), role == "over" ? Role::Over : Role::Under});
      }
    }
    d.segments.push_back(std::move(seg));
  }
  for (const auto& j : array_field(root, "markers")) d.markers.push_back(Marker{string_field(j, "id", "marker")});
  for (const auto& j : array_field(root, "crossings")) {
    const std::string id = string_field(j, "id", "crossing");
    const std::string where = "crossing '" + id + "'";
    const json& sign = field(j, "sign", where);
    if (!sign.is_number_integer()) syntax(where + ".sign must be an integer");
    d.crossings.push_back(Crossing{id, sign.get<int>(), parse_traversal_ref(field(j, "over", where), where + ".over"),
                                   parse_traversal_ref(field(j, "under", where), where + ".under")});
  }
  d.canonicalize();
  return d;
}

}  // namespace

// ---------------------------------------------------------------------------
// Scalars

ScalarContext context_from_json(const json& basis, const json* products, int precision) {
  if (!basis.is_array() || basis.empty()) syntax("basis must be a nonempty array");
  std::vector<BasisElement> elements;
  for (const auto& b : basis) {
    BasisElement e{string_field(b, "name", "basis element"), std::nullopt, std::nullopt};
    if (b.contains("decimal")) {
      const json& dec = b.at("decimal");
      if (!dec.is_string()) syntax("basis '" + e.name + "'.decimal must be a string");
      e.decimal = dec.get<std::string>();
      (void)parse_rational(*e.decimal);
    }
    elements.push_back(std::move(e));
  }
  // Squares may mention any basis name, so parse them against a bare context.
  std::vector<BasisElement> names_only;
  for (const auto& e : elements) names_only.push_back(BasisElement{e.name, std::string("0"), std::nullopt});
  names_only[0].decimal.reset();
  const ScalarContext naming(names_only, precision);
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (basis[i].contains("square")) elements[i].square = scalar_from_json(basis[i].at("square"), naming);
  }

  ScalarContext ctx(std::move(elements), precision);
  if (products != nullptr) {
    if (!products->is_array()) syntax("products must be an array");
    for (const auto& p : *products) {
      auto a = ctx.find(string_field(p, "a", "product"));
      auto b = ctx.find(string_field(p, "b", "product"));
      if (!a || !b) syntax("product references an unknown basis element");
      ctx.declare_product(*a, *b, scalar_from_json(field(p, "value", "product"), ctx));
    }
  }
  return ctx;
}

json context_to_json(const ScalarContext& ctx) {
  json basis = json::array();
  for (const auto& e : ctx.basis()) {
    json b{{"name", e.name}};
    if (e.decimal) b["decimal"] = *e.decimal;
    if (e.square) b["square"] = scalar_to_json(*e.square, ctx);
    basis.push_back(std::move(b));
  }
  return basis;
}

Scalar scalar_from_json(const json& j, const ScalarContext& ctx) {
  if (j.is_number_integer()) return Scalar(Rational(j.get<long long>()));
  if (j.is_number_float()) syntax("floating-point weights are not exact; write \"3/2\" or \"1.5\" as a string");
  if (j.is_string()) return ctx.parse(j.get<std::string>());
  if (j.is_array()) {
    if (j.size() > ctx.dimension()) {
      throw Error(ErrorKind::NotRepresentable, "coefficient vector longer than the basis");
    }
    std::vector<Rational> coeffs;
    for (const auto& c : j) {
      if (c.is_number_integer()) {
        coeffs.emplace_back(c.get<long long>());
      } else if (c.is_string()) {
        coeffs.push_back(parse_rational(c.get<std::string>()));
      } else {
        syntax("coefficients must be integers or rational strings");
      }
    }
    return Scalar(std::move(coeffs));
  }
  syntax("a scalar must be a number, a string, or an array of coefficients");
}

json scalar_to_json(const Scalar& s, const ScalarContext& ctx) {
  json out = json::array();
  for (std::size_t i = 0; i < ctx.dimension(); ++i) out.push_back(format_rational(s.coefficient(i)));
  return out;
}

ScalarVector weights_from_json(const json& j, const TrainTrackDiagram& d, const ScalarContext& ctx) {
  ScalarVector w;
  if (j.is_array()) {
    for (const auto& x : j) w.push_back(scalar_from_json(x, ctx));
    require_weight_shape(d, w);
    return w;
  }
  if (!j.is_object()) syntax("weights must be an array or an object keyed by segment id");
  w.assign(d.segments.size(), Scalar());
  std::vector<bool> seen(d.segments.size(), false);
  for (const auto& [key, value] : j.items()) {
    auto i = d.segment_index(key);
    if (!i) throw Error(ErrorKind::Index, "weights name unknown segment '" + key + "'");
    w[*i] = scalar_from_json(value, ctx);
    seen[*i] = true;
  }
  for (std::size_t i = 0; i < seen.size(); ++i) {
    if (!seen[i]) throw Error(ErrorKind::Index, "weights are missing segment '" + d.segments[i].id + "'");
  }
  return w;
}

json vector_to_json(const ScalarVector& v, const ScalarContext& ctx) {
  json out = json::array();
  for (const auto& s : v) out.push_back(scalar_to_json(s, ctx));
  return out;
}

json vector_report(const ScalarVector& v, const ScalarContext& ctx) {
  json decimal = json::array();
  for (const auto& s : v) decimal.push_back(ctx.to_decimal(s));
  return json{{"exact", vector_to_json(v, ctx)}, {"decimal", std::move(decimal)}};
}

// ---------------------------------------------------------------------------
// Diagrams

DiagramDocument parse_document_unchecked(const std::string& text, int precision) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    syntax(std::string("malformed diagram file: ") + e.what());
  }
  if (!root.is_object()) syntax("diagram file must hold a JSON object");
  const json& version = field(root, "ttd-version", "diagram");
  if (!version.is_number_integer() || version.get<int>() != kFormatVersion) {
    syntax("unsupported ttd-version (expected 1)");
  }

  DiagramDocument doc{diagram_from_json(root), ScalarContext(), std::nullopt};
  if (root.contains("basis")) {
    const json* products = root.contains("products") ? &root.at("products") : nullptr;
    doc.context = context_from_json(root.at("basis"), products, precision);
  } else {
    doc.context = ScalarContext().with_precision(precision);
  }
  if (root.contains("weights")) {
    // Weight lookup by id needs the segment list, which exists by now.
    doc.weights = weights_from_json(root.at("weights"), doc.diagram, doc.context);
  }
  return doc;
}

DiagramDocument parse_document(const std::string& text, int precision) {
  DiagramDocument doc = parse_document_unchecked(text, precision);
  require_valid(doc.diagram);
  return doc;
}

TrainTrackDiagram parse(const std::string& text) { return parse_document(text).diagram; }

json to_json(const TrainTrackDiagram& input) {
  TrainTrackDiagram d = input;
  d.canonicalize();
  json switches = json::array();
  for (const auto& s : d.switches) {
    switches.push_back(json{{"id", s.id},
                            {"mode", s.mode == SwitchMode::Merge ? "merge" : "split"},
                            {"trunk", end_to_json(s.trunk)},
                            {"left", end_to_json(s.left)},
                            {"right", end_to_json(s.right)}});
  }
  json segments = json::array();
  for (const auto& s : d.segments) {
    json trs = json::array();
    for (const auto& t : s.traversals) {
      trs.push_back(json{{"crossing", t.crossing}, {"role", t.role == Role::Over ? "over" : "under"}});
    }
    segments.push_back(
        json{{"id", s.id}, {"from", endpoint_to_json(s.from)}, {"to", endpoint_to_json(s.to)}, {"traversals", trs}});
  }
  json markers = json::array();
  for (const auto& m : d.markers) markers.push_back(json{{"id", m.id}});
  json crossings = json::array();
  for (const auto& c : d.crossings) {
    crossings.push_back(
        json{{"id", c.id}, {"sign", c.sign}, {"over", ref_to_json(c.over)}, {"under", ref_to_json(c.under)}});
  }
  return json{{"ttd-version", kFormatVersion},
              {"switches", switches},
              {"segments", segments},
              {"markers", markers},
              {"crossings", crossings}};
}

std::string serialize(const TrainTrackDiagram& d) { return to_json(d).dump(2) + "\n"; }

std::string serialize(const DiagramDocument& doc) {
  json root = to_json(doc.diagram);
  if (doc.context.dimension() > 1) root["basis"] = context_to_json(doc.context);
  if (doc.weights) {
    json w = json::object();
    for (std::size_t i = 0; i < doc.diagram.segments.size(); ++i) {
      w[doc.diagram.segments[i].id] = scalar_to_json((*doc.weights)[i], doc.context);
    }
    root["weights"] = std::move(w);
  }
  return root.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::Io, "cannot write '" + path + "'");
  out << text;
  if (!out) throw Error(ErrorKind::Io, "write to '" + path + "' failed");
}

}  // namespace lamseifert::io
