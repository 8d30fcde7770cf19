#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

namespace oracles {

using namespace lamseifert;

namespace {

std::size_t index_of(const TrainTrackDiagram& d, const std::string& id) {
  for (std::size_t i = 0; i < d.segments.size(); ++i) {
    if (d.segments[i].id == id) return i;
  }
  throw std::invalid_argument("no segment " + id);
}

std::string vertex_key(const Endpoint& e) { return (e.kind == Endpoint::Kind::Switch ? "S:" : "M:") + e.id; }

}  // namespace

Scalar brute_force_linking(const TrainTrackDiagram& d, const std::vector<Rational>& z, const ScalarVector& w) {
  Scalar lk;
  for (const Crossing& c : d.crossings) {
    const std::size_t o = index_of(d, c.over.segment);
    const std::size_t u = index_of(d, c.under.segment);
    lk += w[u] * (c.sign * z[o]);
  }
  for (const Switch& sw : d.switches) {
    const std::size_t l = index_of(d, sw.left.segment);
    const std::size_t r = index_of(d, sw.right.segment);
    const Rational sign = sw.mode == SwitchMode::Merge ? 1 : -1;
    lk += w[r] * (sign * z[l]);
  }
  return lk;
}

std::size_t seifert_circle_count(const TrainTrackDiagram& d) {
  if (!d.switches.empty()) throw std::invalid_argument("classical diagrams only");
  // Visit (segment, index) -> the other visit of the same crossing.
  std::map<std::string, std::vector<std::pair<std::size_t, std::size_t>>> visits;
  std::size_t circles = 0;
  for (std::size_t s = 0; s < d.segments.size(); ++s) {
    const auto& trs = d.segments[s].traversals;
    if (trs.empty()) ++circles;
    for (std::size_t k = 0; k < trs.size(); ++k) visits[trs[k].crossing].emplace_back(s, k);
  }
  std::set<std::pair<std::size_t, std::size_t>> unseen;
  for (const auto& [id, vs] : visits) unseen.insert(vs.begin(), vs.end());
  auto partner = [&](std::size_t s, std::size_t k) {
    const auto& vs = visits.at(d.segments[s].traversals[k].crossing);
    return vs[0] == std::make_pair(s, k) ? vs[1] : vs[0];
  };
  // Arc (s, k) runs from visit k to visit k + 1; at its end the smoothing
  // turns onto the arc leaving the partner visit.
  while (!unseen.empty()) {
    ++circles;
    auto arc = *unseen.begin();
    while (unseen.erase(arc)) {
      const std::size_t n = d.segments[arc.first].traversals.size();
      arc = partner(arc.first, (arc.second + 1) % n);
    }
  }
  return circles;
}

std::size_t component_count(const TrainTrackDiagram& d) {
  std::map<std::string, std::string> parent;
  auto find = [&](std::string x) {
    while (parent[x] != x) x = parent[x];
    return x;
  };
  for (const Segment& s : d.segments) {
    for (const auto& key : {vertex_key(s.from), vertex_key(s.to)}) {
      if (!parent.count(key)) parent[key] = key;
    }
    parent[find(vertex_key(s.from))] = find(vertex_key(s.to));
  }
  std::set<std::string> roots;
  for (const auto& [v, p] : parent) roots.insert(find(v));
  return roots.size();
}

std::size_t cycle_rank(const TrainTrackDiagram& d) {
  std::set<std::string> vertices;
  for (const Segment& s : d.segments) {
    vertices.insert(vertex_key(s.from));
    vertices.insert(vertex_key(s.to));
  }
  return d.segments.size() + component_count(d) - vertices.size();
}

bool all_integer(const ScalarVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& x) { return x.is_integer(); });
}

}  // namespace oracles
