#include "lamseifert/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <vector>

namespace lamseifert::svg {

namespace {

constexpr double kSize = 640;
constexpr double kCenter = kSize / 2;
constexpr double kRadius = 220;
constexpr double kPi = 3.14159265358979323846;

struct Point {
  double x = 0, y = 0;
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

/// Geometry of one drawn segment: a loop circle or a quadratic arc.
struct Stroke {
  bool loop = false;
  Point a, control, b;  // arc
  Point center;         // loop
  double radius = 0;
  double start_angle = 0;

  Point at(double s) const {
    if (loop) {
      const double th = start_angle + 2 * kPi * s;
      return {center.x + radius * std::cos(th), center.y + radius * std::sin(th)};
    }
    const double u = 1 - s;
    return {u * u * a.x + 2 * u * s * control.x + s * s * b.x, u * u * a.y + 2 * u * s * control.y + s * s * b.y};
  }
};

std::vector<Stroke> layout(const TrainTrackDiagram& d) {
  const GraphShape g = graph_shape(d);
  std::vector<Point> vertex(g.vertex_count);
  for (std::size_t v = 0; v < g.vertex_count; ++v) {
    const double th = 2 * kPi * static_cast<double>(v) / static_cast<double>(g.vertex_count) - kPi / 2;
    vertex[v] = {kCenter + kRadius * std::cos(th), kCenter + kRadius * std::sin(th)};
  }
  std::map<std::pair<std::size_t, std::size_t>, int> seen;
  std::vector<Stroke> out;
  for (std::size_t e = 0; e < d.segments.size(); ++e) {
    const std::size_t u = g.tail_vertex[e], v = g.head_vertex[e];
    const int k = seen[{u, v}]++;
    Stroke s;
    if (u == v) {
      s.loop = true;
      const Point p = vertex[u];
      const double dx = kCenter - p.x, dy = kCenter - p.y;
      const double len = std::max(std::hypot(dx, dy), 1e-9);
      s.radius = (g.vertex_count == 1 ? kRadius : 60.0) + 24.0 * k;
      if (g.vertex_count == 1 && k > 0) s.radius = kRadius - 24.0 * k;
      s.center = {p.x + dx / len * s.radius, p.y + dy / len * s.radius};
      s.start_angle = std::atan2(p.y - s.center.y, p.x - s.center.x);
    } else {
      s.a = vertex[u];
      s.b = vertex[v];
      const double mx = (s.a.x + s.b.x) / 2, my = (s.a.y + s.b.y) / 2;
      const double dx = s.b.x - s.a.x, dy = s.b.y - s.a.y;
      const double len = std::max(std::hypot(dx, dy), 1e-9);
      const double bend = 30.0 + 40.0 * k;
      s.control = {mx - dy / len * bend, my + dx / len * bend};
    }
    out.push_back(s);
  }
  return out;
}

std::vector<double> widths(const TrainTrackDiagram& d, const std::optional<ScalarVector>& w, const ScalarContext& ctx,
                           const SvgOptions& options) {
  std::vector<double> out(d.segments.size(), 2.0);
  if (!w || !options.stroke_by_weight) return out;
  std::vector<double> approx;
  for (const auto& x : *w) approx.push_back(std::stod(ctx.to_decimal(x, 8)));
  const double top = *std::max_element(approx.begin(), approx.end());
  if (top <= 0) return out;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = 1.0 + 5.0 * std::max(approx[i], 0.0) / top;
  return out;
}

}  // namespace

std::string render(const TrainTrackDiagram& d, const std::optional<ScalarVector>& weights, const ScalarContext& ctx,
                   const SeifertRun* overlay, const SvgOptions& options) {
  const std::vector<Stroke> strokes = layout(d);
  const std::vector<double> width = widths(d, weights, ctx, options);
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSize << "\" height=\"" << kSize
      << "\" viewBox=\"0 0 " << kSize << " " << kSize << "\">\n";
  out << "<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"5\" refY=\"5\" markerWidth=\"5\" "
         "markerHeight=\"5\" orient=\"auto\"><path d=\"M0,0 L10,5 L0,10 z\" fill=\"#333\"/></marker></defs>\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  for (std::size_t e = 0; e < d.segments.size(); ++e) {
    const Stroke& s = strokes[e];
    const std::string id = escape(d.segments[e].id);
    if (s.loop) {
      out << "<circle class=\"segment\" id=\"seg-" << id << "\" cx=\"" << num(s.center.x) << "\" cy=\""
          << num(s.center.y) << "\" r=\"" << num(s.radius) << "\" fill=\"none\" stroke=\"#333\" stroke-width=\""
          << num(width[e]) << "\"/>\n";
    } else {
      out << "<path class=\"segment\" id=\"seg-" << id << "\" d=\"M" << num(s.a.x) << "," << num(s.a.y) << " Q"
          << num(s.control.x) << "," << num(s.control.y) << " " << num(s.b.x) << "," << num(s.b.y)
          << "\" fill=\"none\" stroke=\"#333\" stroke-width=\"" << num(width[e]) << "\" marker-end=\"url(#arrow)\"/>\n";
    }
    const Point label = s.at(0.5);
    out << "<text class=\"label\" x=\"" << num(label.x) << "\" y=\"" << num(label.y - 6)
        << "\" font-size=\"11\" fill=\"#06c\">" << id << "</text>\n";
  }

  for (const Crossing& c : d.crossings) {
    auto seg = d.segment_index(c.over.segment);
    if (!seg) continue;
    const double n = static_cast<double>(d.segments[*seg].traversals.size());
    const Point p = strokes[*seg].at((static_cast<double>(c.over.index) + 1) / (n + 1));
    out << "<g class=\"crossing\" id=\"crossing-" << escape(c.id) << "\"><circle cx=\"" << num(p.x) << "\" cy=\""
        << num(p.y) << "\" r=\"7\" fill=\"white\" stroke=\"#c00\" stroke-dasharray=\"2,2\"/><text x=\"" << num(p.x + 9)
        << "\" y=\"" << num(p.y + 4) << "\" font-size=\"10\" fill=\"#c00\">" << escape(c.id)
        << (c.sign > 0 ? " +" : " -") << "</text></g>\n";
  }

  const GraphShape g = graph_shape(d);
  for (std::size_t v = 0; v < g.vertex_count; ++v) {
    const bool is_switch = v < d.switches.size();
    const std::string& name = is_switch ? d.switches[v].id : d.markers[v - d.switches.size()].id;
    const double th = 2 * kPi * static_cast<double>(v) / static_cast<double>(g.vertex_count) - kPi / 2;
    const Point p{kCenter + kRadius * std::cos(th), kCenter + kRadius * std::sin(th)};
    out << "<circle class=\"" << (is_switch ? "switch" : "marker") << "\" cx=\"" << num(p.x) << "\" cy=\"" << num(p.y)
        << "\" r=\"4\" fill=\"" << (is_switch ? "#333" : "#999") << "\"/><text x=\"" << num(p.x + 6) << "\" y=\""
        << num(p.y - 6) << "\" font-size=\"11\">" << escape(name) << "</text>\n";
  }

  if (overlay != nullptr) {
    const TrainTrackDiagram& t = overlay->freeway.track;
    const std::vector<Stroke> inner = layout(t);
    const auto& families = overlay->lamination.decomposition.families;
    for (std::size_t f = 0; f < families.size(); ++f) {
      const double shrink = 0.55 - 0.04 * static_cast<double>(f % 5);
      std::string path;
      for (std::size_t j : families[f].itinerary) {
        const Point p = inner[j].at(0.5);
        const Point q{kCenter + (p.x - kCenter) * shrink, kCenter + (p.y - kCenter) * shrink};
        path += (path.empty() ? "M" : " L") + num(q.x) + "," + num(q.y);
      }
      const int hue = static_cast<int>((f * 67) % 360);
      out << "<path class=\"family\" id=\"family-" << f << "\" d=\"" << path << " Z\" fill=\"none\" stroke=\"hsl("
          << hue << ",70%,45%)\" stroke-width=\"1.5\" stroke-opacity=\"0.8\"/>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace lamseifert::svg
