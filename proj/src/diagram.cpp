#include "lamseifert/diagram.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

#include "lamseifert/error.hpp"

namespace lamseifert {

namespace {

template <typename T>
void sort_by_id(std::vector<T>& items) {
  std::stable_sort(items.begin(), items.end(), [](const T& a, const T& b) { return a.id < b.id; });
}

template <typename T>
std::optional<std::size_t> find_by_id(const std::vector<T>& items, const std::string& id) {
  auto it = std::lower_bound(items.begin(), items.end(), id,
                             [](const T& item, const std::string& key) { return item.id < key; });
  if (it != items.end() && it->id == id) return static_cast<std::size_t>(it - items.begin());
  // Fall back to a scan for diagrams that were assembled without canonicalize().
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (items[i].id == id) return i;
  }
  return std::nullopt;
}

const char* slot_name(Slot s) {
  switch (s) {
    case Slot::Trunk: return "trunk";
    case Slot::Left: return "left";
    case Slot::Right: return "right";
  }
  return "?";
}

const char* end_name(End e) { return e == End::Tail ? "tail" : "head"; }

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
  std::vector<std::size_t> parent;
};

}  // namespace

void TrainTrackDiagram::canonicalize() {
  sort_by_id(switches);
  sort_by_id(segments);
  sort_by_id(markers);
  sort_by_id(crossings);
}

std::optional<std::size_t> TrainTrackDiagram::segment_index(const std::string& id) const {
  return find_by_id(segments, id);
}

std::optional<std::size_t> TrainTrackDiagram::switch_index(const std::string& id) const {
  return find_by_id(switches, id);
}

std::optional<std::size_t> TrainTrackDiagram::crossing_index(const std::string& id) const {
  return find_by_id(crossings, id);
}

std::size_t TrainTrackDiagram::require_segment(const std::string& id) const {
  auto i = segment_index(id);
  if (!i) throw Error(ErrorKind::Structure, "unknown segment '" + id + "'");
  return *i;
}

std::vector<std::string> TrainTrackDiagram::segment_ids() const {
  std::vector<std::string> ids;
  ids.reserve(segments.size());
  for (const auto& s : segments) ids.push_back(s.id);
  return ids;
}

std::vector<ResolvedCrossing> resolve_crossings(const TrainTrackDiagram& d) {
  std::vector<ResolvedCrossing> out;
  out.reserve(d.crossings.size());
  for (const auto& c : d.crossings) {
    out.push_back({d.require_segment(c.over.segment), d.require_segment(c.under.segment), c.sign});
  }
  return out;
}

void require_weight_shape(const TrainTrackDiagram& d, const ScalarVector& w, const char* what) {
  if (w.size() != d.segments.size()) {
    throw Error(ErrorKind::Index, std::string(what) + " has " + std::to_string(w.size()) +
                                      " entries but the diagram has " + std::to_string(d.segments.size()) +
                                      " segments");
  }
}

// ---------------------------------------------------------------------------
// Validation

std::vector<Violation> validate(const TrainTrackDiagram& d) {
  std::vector<Violation> out;
  auto report = [&out](std::string invariant, std::string element, std::string detail) {
    out.push_back({std::move(invariant), std::move(element), std::move(detail)});
  };

  auto check_unique = [&](const auto& items, const char* kind) {
    std::set<std::string> seen;
    for (const auto& item : items) {
      if (!seen.insert(item.id).second) report("duplicate-id", item.id, std::string("duplicate ") + kind + " id");
    }
  };
  check_unique(d.switches, "switch");
  check_unique(d.segments, "segment");
  check_unique(d.markers, "marker");
  check_unique(d.crossings, "crossing");

  // Which (segment end) is claimed by which switch slot.
  std::map<std::pair<std::string, End>, std::vector<std::pair<std::string, Slot>>> claims;
  bool switches_ok = true;
  for (const auto& sw : d.switches) {
    const std::pair<Slot, const SegmentEnd*> slots[] = {
        {Slot::Trunk, &sw.trunk}, {Slot::Left, &sw.left}, {Slot::Right, &sw.right}};
    for (const auto& [slot, end] : slots) {
      auto seg = d.segment_index(end->segment);
      if (!seg) {
        report("switch-slot-structure", sw.id,
               std::string(slot_name(slot)) + " slot references missing segment '" + end->segment + "'");
        switches_ok = false;
        continue;
      }
      claims[{end->segment, end->end}].push_back({sw.id, slot});
      const Endpoint& attached = end->end == End::Tail ? d.segments[*seg].from : d.segments[*seg].to;
      if (attached.kind != Endpoint::Kind::Switch || attached.id != sw.id) {
        report("switch-slot-structure", sw.id,
               std::string(slot_name(slot)) + " slot claims the " + end_name(end->end) + " of '" + end->segment +
                   "', which is not attached to this switch");
        switches_ok = false;
      }
    }
    if (sw.trunk == sw.left || sw.trunk == sw.right || sw.left == sw.right) {
      report("switch-slot-structure", sw.id, "trunk, left and right must be three distinct segment ends");
      switches_ok = false;
    }
    const End branch_end = sw.mode == SwitchMode::Merge ? End::Head : End::Tail;
    const End trunk_end = sw.mode == SwitchMode::Merge ? End::Tail : End::Head;
    if (sw.trunk.end != trunk_end || sw.left.end != branch_end || sw.right.end != branch_end) {
      report("switch-orientation", sw.id,
             sw.mode == SwitchMode::Merge ? "merge switch needs branch heads in and the trunk tail out"
                                          : "split switch needs the trunk head in and branch tails out");
    }
  }

  std::map<std::string, int> marker_in;
  std::map<std::string, int> marker_out;
  for (const auto& seg : d.segments) {
    const std::pair<End, const Endpoint*> ends[] = {{End::Tail, &seg.from}, {End::Head, &seg.to}};
    for (const auto& [end, ep] : ends) {
      if (ep->kind == Endpoint::Kind::Switch) {
        if (!d.switch_index(ep->id)) {
          report("segment-endpoint", seg.id, std::string(end_name(end)) + " attaches to missing switch '" + ep->id + "'");
          switches_ok = false;
          continue;
        }
        auto it = claims.find({seg.id, end});
        const std::size_t count = it == claims.end() ? 0 : it->second.size();
        if (count != 1) {
          report("switch-slot-structure", ep->id,
                 std::string("the ") + end_name(end) + " of '" + seg.id + "' is attached in " + std::to_string(count) +
                     " slots; expected exactly 1");
          switches_ok = false;
        }
      } else {
        if (!find_by_id(d.markers, ep->id)) {
          report("segment-endpoint", seg.id, std::string(end_name(end)) + " attaches to missing marker '" + ep->id + "'");
          switches_ok = false;
          continue;
        }
        (end == End::Head ? marker_in : marker_out)[ep->id] += 1;
      }
    }
  }
  for (const auto& m : d.markers) {
    if (marker_in[m.id] != 1 || marker_out[m.id] != 1) {
      report("marker-degree", m.id, "a marker needs exactly one incoming and one outgoing segment");
      switches_ok = false;
    }
  }

  // Crossings: every crossing is met exactly once over and once under.
  std::map<std::string, std::pair<int, int>> role_counts;
  for (const auto& seg : d.segments) {
    for (std::size_t i = 0; i < seg.traversals.size(); ++i) {
      const auto& tr = seg.traversals[i];
      if (!d.crossing_index(tr.crossing)) {
        report("dangling-crossing", seg.id, "traversal " + std::to_string(i) + " names missing crossing '" + tr.crossing + "'");
        continue;
      }
      auto& counts = role_counts[tr.crossing];
      (tr.role == Role::Over ? counts.first : counts.second) += 1;
    }
  }
  for (const auto& c : d.crossings) {
    if (c.sign != 1 && c.sign != -1) report("crossing-sign", c.id, "sign must be +1 or -1");
    const auto counts = role_counts[c.id];
    if (counts.first != 1 || counts.second != 1) {
      report("crossing-traversal", c.id,
             "expected one over and one under traversal, found " + std::to_string(counts.first) + " over and " +
                 std::to_string(counts.second) + " under");
    }
    const std::pair<Role, const TraversalRef*> refs[] = {{Role::Over, &c.over}, {Role::Under, &c.under}};
    for (const auto& [role, ref] : refs) {
      const char* role_text = role == Role::Over ? "over" : "under";
      auto seg = d.segment_index(ref->segment);
      if (!seg) {
        report("dangling-crossing", c.id, std::string(role_text) + " references missing segment '" + ref->segment + "'");
        continue;
      }
      const auto& trs = d.segments[*seg].traversals;
      if (ref->index >= trs.size() || trs[ref->index].crossing != c.id || trs[ref->index].role != role) {
        report("dangling-crossing", c.id,
               std::string(role_text) + " reference (" + ref->segment + ", " + std::to_string(ref->index) +
                   ") does not match the segment's traversal list");
      }
    }
  }

  // Markers sit exactly on the closed curves without switches, one each.
  if (switches_ok) {
    const GraphShape g = graph_shape(d);
    std::vector<int> markers_in(g.component_count, 0);
    std::vector<bool> has_switch(g.component_count, false);
    for (std::size_t v = 0; v < d.switches.size(); ++v) has_switch[g.component[v]] = true;
    for (std::size_t m = 0; m < d.markers.size(); ++m) markers_in[g.component[d.switches.size() + m]] += 1;
    for (std::size_t m = 0; m < d.markers.size(); ++m) {
      const std::size_t comp = g.component[d.switches.size() + m];
      if (has_switch[comp]) {
        report("marker-placement", d.markers[m].id, "marker on a component that already has switches");
      } else if (markers_in[comp] > 1) {
        report("marker-placement", d.markers[m].id, "closed curve carries more than one marker");
      }
    }
  }
  return out;
}

void derive_crossing_refs(TrainTrackDiagram& d) {
  std::unordered_map<std::string, Crossing*> by_id;
  for (auto& c : d.crossings) by_id[c.id] = &c;
  for (const auto& seg : d.segments) {
    for (std::size_t i = 0; i < seg.traversals.size(); ++i) {
      auto it = by_id.find(seg.traversals[i].crossing);
      if (it == by_id.end()) continue;
      (seg.traversals[i].role == Role::Over ? it->second->over : it->second->under) = TraversalRef{seg.id, i};
    }
  }
}

void require_valid(const TrainTrackDiagram& d) {
  auto v = validate(d);
  if (!v.empty()) {
    throw Error(ErrorKind::Structure, v.front().invariant + " at '" + v.front().element + "': " + v.front().detail);
  }
}

// ---------------------------------------------------------------------------
// Graph structure

GraphShape graph_shape(const TrainTrackDiagram& d) {
  GraphShape g;
  g.vertex_count = d.switches.size() + d.markers.size();
  auto vertex_of = [&d](const Endpoint& ep) -> std::size_t {
    if (ep.kind == Endpoint::Kind::Switch) {
      auto i = d.switch_index(ep.id);
      if (!i) throw Error(ErrorKind::Structure, "missing switch '" + ep.id + "'");
      return *i;
    }
    auto i = find_by_id(d.markers, ep.id);
    if (!i) throw Error(ErrorKind::Structure, "missing marker '" + ep.id + "'");
    return d.switches.size() + *i;
  };
  UnionFind uf(g.vertex_count);
  for (const auto& seg : d.segments) {
    g.tail_vertex.push_back(vertex_of(seg.from));
    g.head_vertex.push_back(vertex_of(seg.to));
    uf.unite(g.tail_vertex.back(), g.head_vertex.back());
  }
  std::map<std::size_t, std::size_t> label;
  g.component.resize(g.vertex_count);
  for (std::size_t v = 0; v < g.vertex_count; ++v) {
    auto [it, inserted] = label.emplace(uf.find(v), label.size());
    g.component[v] = it->second;
  }
  g.component_count = label.size();
  return g;
}

std::vector<std::vector<Rational>> cycle_basis(const TrainTrackDiagram& d) {
  const GraphShape g = graph_shape(d);
  const std::size_t n_edges = d.segments.size();
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  std::vector<std::vector<std::size_t>> incident(g.vertex_count);
  for (std::size_t e = 0; e < n_edges; ++e) {
    incident[g.tail_vertex[e]].push_back(e);
    if (g.head_vertex[e] != g.tail_vertex[e]) incident[g.head_vertex[e]].push_back(e);
  }

  std::vector<std::size_t> parent_edge(g.vertex_count, kNone);
  std::vector<std::size_t> depth(g.vertex_count, 0);
  std::vector<bool> visited(g.vertex_count, false);
  std::vector<bool> tree_edge(n_edges, false);
  for (std::size_t root = 0; root < g.vertex_count; ++root) {
    if (visited[root]) continue;
    visited[root] = true;
    std::queue<std::size_t> frontier;
    frontier.push(root);
    while (!frontier.empty()) {
      const std::size_t v = frontier.front();
      frontier.pop();
      for (std::size_t e : incident[v]) {
        const std::size_t other = g.tail_vertex[e] == v ? g.head_vertex[e] : g.tail_vertex[e];
        if (visited[other]) continue;
        visited[other] = true;
        parent_edge[other] = e;
        depth[other] = depth[v] + 1;
        tree_edge[e] = true;
        frontier.push(other);
      }
    }
  }

  auto parent_of = [&](std::size_t v) {
    const std::size_t e = parent_edge[v];
    return g.tail_vertex[e] == v ? g.head_vertex[e] : g.tail_vertex[e];
  };

  std::vector<std::vector<Rational>> cycles;
  for (std::size_t e = 0; e < n_edges; ++e) {
    if (tree_edge[e]) continue;
    std::vector<Rational> z(n_edges);
    z[e] = 1;
    // Close the cycle by walking the tree from head(e) back to tail(e).
    std::size_t from = g.head_vertex[e];
    std::size_t to = g.tail_vertex[e];
    while (from != to) {
      if (depth[from] >= depth[to]) {
        const std::size_t pe = parent_edge[from];
        z[pe] += g.tail_vertex[pe] == from ? 1 : -1;  // travelling child -> parent
        from = parent_of(from);
      } else {
        const std::size_t pe = parent_edge[to];
        z[pe] += g.head_vertex[pe] == to ? 1 : -1;  // travelling parent -> child
        to = parent_of(to);
      }
    }
    cycles.push_back(std::move(z));
  }
  return cycles;
}

Scalar writhe(const TrainTrackDiagram& d, const ScalarVector& w, const ScalarContext& ctx) {
  require_weight_shape(d, w);
  Scalar total;
  for (const auto& c : resolve_crossings(d)) {
    total += ctx.multiply(w[c.over], w[c.under]) * Rational(c.sign);
  }
  return total;
}

}  // namespace lamseifert
