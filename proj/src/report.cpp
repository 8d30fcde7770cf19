#include "lamseifert/report.hpp"

#include <sstream>

#include "lamseifert/error.hpp"

namespace lamseifert::report {

namespace {

json ids(const std::vector<std::string>& v) { return json(v); }

json path_ids(const TrainTrackDiagram& t, const std::vector<std::size_t>& path) {
  json out = json::array();
  for (std::size_t j : path) out.push_back(t.segments[j].id);
  return out;
}

json rational_vectors(const std::vector<linalg::RationalVector>& vs) {
  json out = json::array();
  for (const auto& v : vs) {
    json row = json::array();
    for (const auto& q : v) row.push_back(format_rational(q));
    out.push_back(std::move(row));
  }
  return out;
}

bool is_report(const json& j) { return j.is_object() && j.size() == 2 && j.contains("exact") && j.contains("decimal"); }

bool is_flat(const json& j) {
  if (!j.is_array()) return !j.is_object();
  for (const auto& x : j) {
    if (x.is_object() || x.is_array()) return false;
  }
  return true;
}

std::string flat(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (!j.is_array()) return j.dump();
  std::string out = "[";
  for (std::size_t i = 0; i < j.size(); ++i) out += (i ? ", " : "") + flat(j[i]);
  return out + "]";
}

void render(const json& j, int depth, std::ostringstream& out) {
  const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (is_report(value)) {
        out << pad << key << ": " << flat(value.at("decimal")) << "\n";
      } else if (is_flat(value)) {
        out << pad << key << ": " << flat(value) << "\n";
      } else {
        out << pad << key << ":\n";
        render(value, depth + 1, out);
      }
    }
    return;
  }
  if (j.is_array()) {
    for (const auto& x : j) {
      if (is_report(x) || is_flat(x)) {
        out << pad << "- " << flat(is_report(x) ? x.at("decimal") : x) << "\n";
      } else {
        out << pad << "-\n";
        render(x, depth + 1, out);
      }
    }
    return;
  }
  out << pad << flat(j) << "\n";
}

}  // namespace

json scalar(const Scalar& s, const ScalarContext& ctx) {
  return json{{"exact", io::scalar_to_json(s, ctx)}, {"decimal", ctx.to_decimal(s)}};
}

json violations(const std::vector<Violation>& v) {
  json list = json::array();
  for (const auto& x : v) list.push_back(json{{"invariant", x.invariant}, {"element", x.element}, {"detail", x.detail}});
  return json{{"valid", v.empty()}, {"violations", std::move(list)}};
}

json cone(const TrainTrackDiagram& d, const WeightCone& c) {
  json doc{{"segments", ids(d.segment_ids())}, {"dimension", c.dimension}, {"basis", rational_vectors(c.basis)}};
  if (c.sample_positive) {
    doc["sample_positive"] = rational_vectors({*c.sample_positive})[0];
  } else {
    doc["sample_positive"] = nullptr;
    doc["note"] = "empty positive cone";
  }
  return doc;
}

json seifert(const TrainTrackDiagram& d, const SeifertRun& r, const ScalarContext& ctx, bool verified) {
  const TrainTrackDiagram& t = r.freeway.track;
  const SeifertLaminationDesc& sl = r.lamination;

  json families = json::array();
  for (const auto& f : sl.decomposition.families) {
    families.push_back(json{{"width", scalar(f.width, ctx)}, {"itinerary", path_ids(t, f.itinerary)}});
  }
  json caps = json::array();
  for (const auto& c : sl.caps) caps.push_back(json{{"family", c.family}, {"weight", scalar(c.weight, ctx)}});
  json pinches = json::array();
  for (const auto& p : sl.pinches) {
    pinches.push_back(json{{"step", p.step},
                           {"kind", to_string(p.kind)},
                           {"along", path_ids(t, p.along)},
                           {"weight", scalar(p.weight, ctx)}});
  }
  json recs = json::array();
  for (const auto& rec : sl.reconstructions) {
    recs.push_back(json{{"crossing", rec.crossing},
                        {"crossing_segment", rec.crossing_segment},
                        {"over", d.segments[rec.over].id},
                        {"under", d.segments[rec.under].id},
                        {"sign", rec.sign},
                        {"band_weight", scalar(rec.band_weight, ctx)},
                        {"twist", scalar(rec.twist, ctx)}});
  }

  Scalar total;
  for (const auto& x : r.params.twists) total += x;
  json surface{{"chi", scalar(euler_characteristic(sl), ctx)},
               {"complex_chi", complex_euler_characteristic(sl, r.freeway)},
               {"genus", nullptr}};
  try {
    surface["genus"] = format_rational(genus_if_knot(d, r));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotASurface) throw;
  }

  return json{{"segments", ids(d.segment_ids())},
              {"framed_link",
               json{{"weights", io::vector_report(r.params.weights, ctx)},
                    {"twists", io::vector_report(r.params.twists, ctx)},
                    {"twist_total", scalar(total, ctx)}}},
              {"lamination",
               json{{"families", std::move(families)},
                    {"caps", std::move(caps)},
                    {"pinches", std::move(pinches)},
                    {"reconstructions", std::move(recs)},
                    {"sector_weights", io::vector_report(sl.sector_weights, ctx)}}},
              {"surface", std::move(surface)},
              {"verified", verified}};
}

json twist_space(const TrainTrackDiagram& d, const homology::AffineTwistSpace& s, const ScalarContext& ctx) {
  json doc{{"segments", ids(d.segment_ids())},
           {"directions", rational_vectors(s.directions)},
           {"dimension", s.dimension},
           {"warnings", s.warnings}};
  doc["particular"] = s.particular ? io::vector_report(*s.particular, ctx) : json(nullptr);
  return doc;
}

json verdict(const homology::Verdict& v, const ScalarContext& ctx) {
  return json{{"valid", v.valid}, {"residual", io::vector_report(v.residual, ctx)}};
}

std::string to_text(const json& doc) {
  std::ostringstream out;
  render(doc, 0, out);
  return out.str();
}

}  // namespace lamseifert::report
