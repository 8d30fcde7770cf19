#include "lamseifert/seifert.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "lamseifert/error.hpp"
#include "lamseifert/homology.hpp"
#include "lamseifert/weights.hpp"

namespace lamseifert {

const char* to_string(SplitKind k) {
  switch (k) {
    case SplitKind::Left:
      return "left";
    case SplitKind::Right:
      return "right";
    case SplitKind::Collision:
      return "collision";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Crossing elimination

namespace {

std::string piece_id(const Segment& s, std::size_t k) { return s.id + "/" + std::to_string(k); }
std::string merge_id(const std::string& crossing) { return "x/" + crossing + "/in"; }
std::string split_id(const std::string& crossing) { return "x/" + crossing + "/out"; }
std::string crossing_segment_id(const std::string& crossing) { return "x/" + crossing; }

struct CrossingPieces {
  std::string over_in, over_out, under_in, under_out;
};

struct PieceInfo {
  Segment segment;
  Scalar weight;
  std::optional<std::size_t> origin;
};

}  // namespace

Freeway eliminate_crossings(const TrainTrackDiagram& d, const ScalarVector& w, const ScalarContext& ctx) {
  require_positive(d, w, ctx);
  require_invariant(d, w);

  std::map<std::string, CrossingPieces> at;
  std::map<std::string, std::string> first_piece, last_piece;
  std::vector<PieceInfo> pieces;

  for (std::size_t i = 0; i < d.segments.size(); ++i) {
    const Segment& s = d.segments[i];
    const std::size_t n = s.traversals.size();
    if (n == 0) {
      pieces.push_back(PieceInfo{Segment{s.id, s.from, s.to, {}}, w[i], i});
      first_piece[s.id] = last_piece[s.id] = s.id;
      continue;
    }
    for (std::size_t k = 0; k <= n; ++k) {
      Endpoint from = k == 0 ? s.from : Endpoint{Endpoint::Kind::Switch, split_id(s.traversals[k - 1].crossing)};
      Endpoint to = k == n ? s.to : Endpoint{Endpoint::Kind::Switch, merge_id(s.traversals[k].crossing)};
      pieces.push_back(PieceInfo{Segment{piece_id(s, k), from, to, {}}, w[i], i});
    }
    for (std::size_t k = 0; k < n; ++k) {
      CrossingPieces& cp = at[s.traversals[k].crossing];
      if (s.traversals[k].role == Role::Over) {
        cp.over_in = piece_id(s, k);
        cp.over_out = piece_id(s, k + 1);
      } else {
        cp.under_in = piece_id(s, k);
        cp.under_out = piece_id(s, k + 1);
      }
    }
    first_piece[s.id] = piece_id(s, 0);
    last_piece[s.id] = piece_id(s, n);
  }

  Freeway f;
  for (const Switch& sw : d.switches) {
    auto rewrite = [&](const SegmentEnd& e) {
      return SegmentEnd{e.end == End::Tail ? first_piece.at(e.segment) : last_piece.at(e.segment), e.end};
    };
    f.track.switches.push_back(Switch{sw.id, sw.mode, rewrite(sw.trunk), rewrite(sw.left), rewrite(sw.right)});
  }
  f.track.markers = d.markers;

  const auto resolved = resolve_crossings(d);
  for (std::size_t ci = 0; ci < d.crossings.size(); ++ci) {
    const Crossing& c = d.crossings[ci];
    const CrossingPieces& cp = at.at(c.id);
    const std::string mid = crossing_segment_id(c.id);
    const bool positive = c.sign > 0;
    // Planar order at the merge is (left, right) = (over, under) for a
    // positive crossing; the strands swap sides on the way out.
    f.track.switches.push_back(Switch{merge_id(c.id), SwitchMode::Merge, SegmentEnd{mid, End::Tail},
                                      SegmentEnd{positive ? cp.over_in : cp.under_in, End::Head},
                                      SegmentEnd{positive ? cp.under_in : cp.over_in, End::Head}});
    f.track.switches.push_back(Switch{split_id(c.id), SwitchMode::Split, SegmentEnd{mid, End::Head},
                                      SegmentEnd{positive ? cp.under_out : cp.over_out, End::Tail},
                                      SegmentEnd{positive ? cp.over_out : cp.under_out, End::Tail}});
    const ResolvedCrossing& rc = resolved[ci];
    pieces.push_back(PieceInfo{Segment{mid, Endpoint{Endpoint::Kind::Switch, merge_id(c.id)},
                                       Endpoint{Endpoint::Kind::Switch, split_id(c.id)}, {}},
                               w[rc.over] + w[rc.under], std::nullopt});
    f.provenance.push_back(CrossingProvenance{c.id, mid, rc.over, rc.under, c.sign});
  }

  std::sort(pieces.begin(), pieces.end(),
            [](const PieceInfo& a, const PieceInfo& b) { return a.segment.id < b.segment.id; });
  for (auto& p : pieces) {
    f.track.segments.push_back(std::move(p.segment));
    f.weights.push_back(std::move(p.weight));
    f.origin.push_back(p.origin);
  }
  f.track.canonicalize();
  return f;
}

// ---------------------------------------------------------------------------
// Splitting

namespace {

constexpr int kNoSwitch = -1;

struct Branch {
  std::vector<std::size_t> path;
  Scalar weight;
  int tail_switch = kNoSwitch;
  Slot tail_slot = Slot::Trunk;
  int head_switch = kNoSwitch;
  Slot head_slot = Slot::Trunk;
  bool alive = true;
};

struct Node {
  std::string name;
  SwitchMode mode = SwitchMode::Merge;
  int trunk = -1, left = -1, right = -1;
  bool alive = true;

  int& at(Slot s) { return s == Slot::Trunk ? trunk : (s == Slot::Left ? left : right); }
};

std::vector<std::size_t> canonical_rotation(std::vector<std::size_t> cycle) {
  std::vector<std::size_t> best = cycle;
  for (std::size_t r = 1; r < cycle.size(); ++r) {
    std::rotate(cycle.begin(), cycle.begin() + 1, cycle.end());
    if (cycle < best) best = cycle;
  }
  return best;
}

class Splitter {
 public:
  Splitter(const Freeway& f, const ScalarContext& ctx) : f_(f), ctx_(ctx) { build(); }

  CircleFamilyDecomposition run(std::uint64_t bound) {
    std::uint64_t steps = 0;
    while (true) {
      const int b = large_branch();
      if (b < 0) break;
      if (++steps > bound) {
        throw Error(ErrorKind::SplitDiverged, "no circle decomposition after " + std::to_string(bound) +
                                                  " splits; the diagram may not be planar");
      }
      surgery(b);
    }
    for (const Node& n : nodes_) {
      if (n.alive) throw std::logic_error("splitting stopped with live switch '" + n.name + "'");
    }
    return finish();
  }

 private:
  void build() {
    const TrainTrackDiagram& t = f_.track;
    const GraphShape g = graph_shape(t);
    const std::size_t switches = t.switches.size();
    const std::size_t n = t.segments.size();

    // Through a marker there is exactly one way on.
    std::vector<std::size_t> leaving(g.vertex_count, n);
    for (std::size_t e = 0; e < n; ++e) leaving[g.tail_vertex[e]] = e;
    std::vector<bool> used(n, false);

    for (const Switch& sw : t.switches) nodes_.push_back(Node{sw.id, sw.mode});

    auto slot_of = [&](std::size_t v, const SegmentEnd& e) {
      const Switch& sw = t.switches[v];
      if (sw.trunk == e) return Slot::Trunk;
      return sw.left == e ? Slot::Left : Slot::Right;
    };

    for (std::size_t e0 = 0; e0 < n; ++e0) {
      if (g.tail_vertex[e0] >= switches) continue;
      Branch br;
      std::size_t e = e0;
      while (true) {
        used[e] = true;
        br.path.push_back(e);
        if (g.head_vertex[e] < switches) break;
        e = leaving[g.head_vertex[e]];
      }
      br.weight = f_.weights[e0];
      br.tail_switch = static_cast<int>(g.tail_vertex[e0]);
      br.tail_slot = slot_of(g.tail_vertex[e0], SegmentEnd{t.segments[e0].id, End::Tail});
      br.head_switch = static_cast<int>(g.head_vertex[e]);
      br.head_slot = slot_of(g.head_vertex[e], SegmentEnd{t.segments[e].id, End::Head});
      const int id = static_cast<int>(branches_.size());
      nodes_[br.tail_switch].at(br.tail_slot) = id;
      nodes_[br.head_switch].at(br.head_slot) = id;
      branches_.push_back(std::move(br));
    }
    for (std::size_t e0 = 0; e0 < n; ++e0) {
      if (used[e0]) continue;
      std::vector<std::size_t> loop;
      for (std::size_t e = e0; !used[e]; e = leaving[g.head_vertex[e]]) {
        used[e] = true;
        loop.push_back(e);
      }
      closed_.push_back(CircleFamily{f_.weights[e0], std::move(loop)});
    }
    redirect_.resize(branches_.size());
    std::iota(redirect_.begin(), redirect_.end(), 0);
  }

  int large_branch() const {
    for (std::size_t b = 0; b < branches_.size(); ++b) {
      const Branch& br = branches_[b];
      if (!br.alive || br.tail_switch == kNoSwitch || br.head_switch == kNoSwitch) continue;
      if (nodes_[br.tail_switch].mode == SwitchMode::Merge && nodes_[br.head_switch].mode == SwitchMode::Split) {
        return static_cast<int>(b);
      }
    }
    return -1;
  }

  int add_branch(Branch br) {
    branches_.push_back(std::move(br));
    redirect_.push_back(static_cast<int>(branches_.size() - 1));
    return static_cast<int>(branches_.size() - 1);
  }

  int add_node(std::string name, SwitchMode mode) {
    nodes_.push_back(Node{std::move(name), mode});
    return static_cast<int>(nodes_.size() - 1);
  }

  int find(int b) {
    while (redirect_[b] != b) b = redirect_[b] = redirect_[redirect_[b]];
    return b;
  }

  void attach_tail(int b, int node, Slot slot) {
    branches_[b].tail_switch = node;
    branches_[b].tail_slot = slot;
    nodes_[node].at(slot) = b;
  }

  void attach_head(int b, int node, Slot slot) {
    branches_[b].head_switch = node;
    branches_[b].head_slot = slot;
    nodes_[node].at(slot) = b;
  }

  // Head of x continues into the tail of y.
  void join(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) {
      branches_[x].alive = false;
      closed_.push_back(CircleFamily{branches_[x].weight, branches_[x].path});
      return;
    }
    Branch joined;
    joined.path = branches_[x].path;
    joined.path.insert(joined.path.end(), branches_[y].path.begin(), branches_[y].path.end());
    joined.weight = branches_[x].weight;
    const int n = add_branch(std::move(joined));
    Branch& bx = branches_[x];
    Branch& by = branches_[y];
    bx.alive = by.alive = false;
    redirect_[x] = redirect_[y] = n;
    const int ts = bx.tail_switch;
    const Slot tslot = bx.tail_slot;
    const int hs = by.head_switch;
    const Slot hslot = by.head_slot;
    branches_[n].tail_switch = ts;
    branches_[n].tail_slot = tslot;
    branches_[n].head_switch = hs;
    branches_[n].head_slot = hslot;
    if (ts != kNoSwitch && nodes_[ts].alive) nodes_[ts].at(tslot) = n;
    if (hs != kNoSwitch && nodes_[hs].alive) nodes_[hs].at(hslot) = n;
  }

  void surgery(int b) {
    const int m = branches_[b].tail_switch;
    const int s = branches_[b].head_switch;
    const int a_br = nodes_[m].left, c_br = nodes_[m].right;
    const int d_br = nodes_[s].left, e_br = nodes_[s].right;
    const std::vector<std::size_t> along = branches_[b].path;
    for (int x : {d_br, e_br}) {
      auto& p = branches_[x].path;
      p.insert(p.begin(), along.begin(), along.end());
    }
    const Scalar a = branches_[a_br].weight;
    const Scalar d = branches_[d_br].weight;
    branches_[b].alive = false;
    nodes_[m].alive = nodes_[s].alive = false;

    SplitStep step{SplitKind::Collision, nodes_[m].name, nodes_[s].name, along, a, d};
    const std::string tag = std::to_string(trace_.size());
    if (a == d) {
      join(a_br, d_br);
      join(c_br, e_br);
    } else if (ctx_.compare(a, d) == Ordering::Greater) {
      step.kind = SplitKind::Left;
      const int s2 = add_node("~s" + tag, SwitchMode::Split);
      const int m2 = add_node("~m" + tag, SwitchMode::Merge);
      Branch extra;
      extra.weight = a - d;
      const int x = add_branch(std::move(extra));
      attach_head(a_br, s2, Slot::Trunk);
      attach_tail(d_br, s2, Slot::Left);
      attach_tail(x, s2, Slot::Right);
      attach_head(x, m2, Slot::Left);
      attach_head(c_br, m2, Slot::Right);
      attach_tail(e_br, m2, Slot::Trunk);
    } else {
      step.kind = SplitKind::Right;
      const int m2 = add_node("~m" + tag, SwitchMode::Merge);
      const int s2 = add_node("~s" + tag, SwitchMode::Split);
      Branch extra;
      extra.weight = d - a;
      const int x = add_branch(std::move(extra));
      attach_head(a_br, m2, Slot::Left);
      attach_head(x, m2, Slot::Right);
      attach_tail(d_br, m2, Slot::Trunk);
      attach_head(c_br, s2, Slot::Trunk);
      attach_tail(x, s2, Slot::Left);
      attach_tail(e_br, s2, Slot::Right);
    }
    trace_.push_back(std::move(step));
    check_references(m, s);
  }

  void check_references(int m, int s) const {
    for (const Branch& br : branches_) {
      if (!br.alive) continue;
      if (br.tail_switch == m || br.tail_switch == s || br.head_switch == m || br.head_switch == s) {
        throw std::logic_error("live branch still attached to a removed switch");
      }
    }
  }

  CircleFamilyDecomposition finish() {
    std::map<std::vector<std::size_t>, Scalar> merged;
    for (auto& c : closed_) {
      if (c.itinerary.empty()) throw std::logic_error("circle family with empty itinerary");
      merged[canonical_rotation(std::move(c.itinerary))] += c.width;
    }
    CircleFamilyDecomposition out;
    for (auto& [itinerary, width] : merged) out.families.push_back(CircleFamily{width, itinerary});
    out.trace = std::move(trace_);
    return out;
  }

  const Freeway& f_;
  const ScalarContext& ctx_;
  std::vector<Branch> branches_;
  std::vector<Node> nodes_;
  std::vector<int> redirect_;
  std::vector<CircleFamily> closed_;
  std::vector<SplitStep> trace_;
};

std::uint64_t default_bound(const Freeway& f) {
  const std::size_t exponent = f.track.segments.size() + f.track.switches.size();
  if (exponent >= 24) return SeifertConfig::kSplitCap;
  return std::min<std::uint64_t>(std::uint64_t{1} << exponent, SeifertConfig::kSplitCap);
}

}  // namespace

CircleFamilyDecomposition split_circles(const Freeway& f, const ScalarContext& ctx, const SeifertConfig& config) {
  const std::uint64_t bound = config.split_bound != 0 ? config.split_bound : default_bound(f);
  return Splitter(f, ctx).run(bound);
}

// ---------------------------------------------------------------------------
// Capping, pinching and reconstruction

SeifertLaminationDesc cap_and_pinch(const CircleFamilyDecomposition& c, const Freeway&) {
  SeifertLaminationDesc sl;
  sl.decomposition = c;
  for (std::size_t i = 0; i < c.families.size(); ++i) {
    sl.caps.push_back(DiskCap{i, c.families[i].width});
    sl.sector_weights.push_back(c.families[i].width);
  }
  for (std::size_t k = c.trace.size(); k-- > 0;) {
    const SplitStep& step = c.trace[k];
    // The sheet glued back is the smaller of the two that met at the split.
    const Scalar& weight = step.kind == SplitKind::Left ? step.left_out : step.left_in;
    sl.pinches.push_back(PinchRecord{k, step.kind, step.along, weight});
  }
  return sl;
}

namespace {

ScalarVector original_weights(const TrainTrackDiagram& d, const Freeway& f) {
  ScalarVector w(d.segments.size());
  for (std::size_t j = 0; j < f.origin.size(); ++j) {
    if (f.origin[j]) w[*f.origin[j]] = f.weights[j];
  }
  return w;
}

}  // namespace

std::pair<FramedLinkParams, SeifertLaminationDesc> reconstruct(const TrainTrackDiagram& d, const SeifertLaminationDesc& sl,
                                                               const Freeway& f, const ScalarContext& ctx) {
  FramedLinkParams params{original_weights(d, f), ScalarVector(d.segments.size())};
  SeifertLaminationDesc out = sl;
  out.reconstructions.clear();
  for (const CrossingProvenance& p : f.provenance) {
    const Scalar& wo = params.weights[p.over];
    const Scalar& wu = params.weights[p.under];
    const Scalar band = ctx.less(wu, wo) ? wu : wo;
    Scalar twist = wo * Rational(-p.sign);
    params.twists[p.under] += twist;
    out.reconstructions.push_back(ReconstructionRecord{p.crossing, p.segment, p.over, p.under, p.sign, band, twist});
    out.sector_weights.push_back(band);
  }
  const homology::Verdict verdict = homology::verify(d, params.weights, params.twists);
  if (!verdict.valid) {
    throw Error(ErrorKind::ConventionMismatch, "reconstructed twist vector does not bound; sign conventions disagree");
  }
  return {std::move(params), std::move(out)};
}

SeifertRun run(const TrainTrackDiagram& d, const ScalarVector& w, const ScalarContext& ctx, const SeifertConfig& config) {
  require_valid(d);
  SeifertRun r;
  r.freeway = eliminate_crossings(d, w, ctx);
  const CircleFamilyDecomposition c = split_circles(r.freeway, ctx, config);
  auto [params, lamination] = reconstruct(d, cap_and_pinch(c, r.freeway), r.freeway, ctx);
  r.params = std::move(params);
  r.lamination = std::move(lamination);
  return r;
}

// ---------------------------------------------------------------------------
// Surface data

Scalar euler_characteristic(const SeifertLaminationDesc& sl) {
  Scalar chi;
  for (const auto& cap : sl.caps) chi += cap.weight;
  for (const auto& rec : sl.reconstructions) chi -= rec.band_weight;
  return chi;
}

long long complex_euler_characteristic(const SeifertLaminationDesc& sl, const Freeway& f) {
  const auto vertices = static_cast<long long>(f.track.switches.size() + f.track.markers.size());
  const auto edges = static_cast<long long>(f.track.segments.size());
  return vertices - edges + static_cast<long long>(sl.caps.size());
}

Rational genus_if_knot(const TrainTrackDiagram& d, const SeifertRun& r) {
  if (!d.switches.empty() || graph_shape(d).component_count != 1) {
    throw Error(ErrorKind::NotASurface, "genus needs a single closed curve without switches");
  }
  const Scalar& m = r.params.weights.front();
  Scalar t;
  for (const auto& x : r.params.twists) t += x;
  if (!m.is_integer() || !t.is_integer()) {
    throw Error(ErrorKind::NotASurface, "genus needs an integer weight and twist");
  }
  const BigInt mi = numerator(m.rational_value());
  const BigInt ti = numerator(t.rational_value());
  if (gcd(mi, ti) != 1) {
    throw Error(ErrorKind::NotASurface, "weight and twist share a factor, so the boundary is not one knot");
  }
  const Scalar chi = euler_characteristic(r.lamination);
  return (Rational(1) - chi.rational_value()) / 2;
}

std::vector<std::string> measure_defects(const TrainTrackDiagram& d, const ScalarVector& w, const SeifertRun& r) {
  std::vector<std::string> out;
  const Freeway& f = r.freeway;
  const TrainTrackDiagram& t = f.track;

  std::map<std::string, const CrossingProvenance*> by_segment;
  for (const auto& p : f.provenance) by_segment[p.segment] = &p;
  for (std::size_t j = 0; j < t.segments.size(); ++j) {
    Scalar expected;
    if (f.origin[j]) {
      expected = w[*f.origin[j]];
    } else {
      const CrossingProvenance* p = by_segment.at(t.segments[j].id);
      expected = w[p->over] + w[p->under];
    }
    if (f.weights[j] != expected) out.push_back("freeway weight differs on '" + t.segments[j].id + "'");
  }
  if (!is_invariant(t, f.weights)) out.push_back("freeway weights fail a switch equation");

  ScalarVector carried(t.segments.size());
  for (const auto& fam : r.lamination.decomposition.families) {
    for (std::size_t j : fam.itinerary) carried[j] += fam.width;
  }
  for (std::size_t j = 0; j < t.segments.size(); ++j) {
    if (carried[j] != f.weights[j]) out.push_back("circle families miss measure on '" + t.segments[j].id + "'");
  }

  const auto& fams = r.lamination.decomposition.families;
  if (r.lamination.caps.size() != fams.size()) out.push_back("cap count differs from family count");
  for (const auto& cap : r.lamination.caps) {
    if (cap.family >= fams.size() || cap.weight != fams[cap.family].width) out.push_back("cap weight differs");
  }

  if (r.params.weights != w) out.push_back("reconstructed weights differ from the input");
  ScalarVector boundary(d.segments.size());
  std::vector<bool> seen(d.segments.size(), false);
  for (std::size_t j = 0; j < t.segments.size(); ++j) {
    if (!f.origin[j]) continue;
    const std::size_t i = *f.origin[j];
    if (seen[i] && boundary[i] != carried[j]) out.push_back("pieces of '" + d.segments[i].id + "' disagree");
    boundary[i] = carried[j];
    seen[i] = true;
  }
  for (std::size_t i = 0; i < d.segments.size(); ++i) {
    if (boundary[i] != w[i]) out.push_back("boundary measure differs on '" + d.segments[i].id + "'");
  }
  return out;
}

}  // namespace lamseifert
