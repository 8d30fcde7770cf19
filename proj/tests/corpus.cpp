#include "corpus.hpp"

#include <cstdio>
#include <map>
#include <stdexcept>

#include "lamseifert/weights.hpp"

namespace corpus {

using namespace lamseifert;

namespace {

std::string numbered(char prefix, std::size_t n) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%c%03zu", prefix, n);
  return buf;
}

Endpoint virtual_end(char side, std::size_t p) { return Endpoint{Endpoint::Kind::Marker, std::string("#") + side + std::to_string(p)}; }
Endpoint switch_end(const std::string& id) { return Endpoint{Endpoint::Kind::Switch, id}; }

struct Builder {
  std::vector<Segment> segs;
  std::vector<bool> dead;
  TrainTrackDiagram d;

  std::size_t add(Endpoint from) {
    segs.push_back(Segment{numbered('s', segs.size()), std::move(from), {}, {}});
    dead.push_back(false);
    return segs.size() - 1;
  }
};

}  // namespace

TrainTrackDiagram closure(std::size_t strands, const std::vector<Letter>& word) {
  Builder b;
  std::vector<std::size_t> pos;
  for (std::size_t p = 0; p < strands; ++p) pos.push_back(b.add(virtual_end('b', p)));

  std::size_t crossings = 0, switches = 0;
  for (const Letter& l : word) {
    const std::size_t i = l.position;
    if (l.kind == Letter::Kind::Cross) {
      if (i + 1 >= pos.size()) throw std::invalid_argument("cross position out of range");
      const std::string id = numbered('c', crossings++);
      const std::size_t over = l.sign > 0 ? pos[i] : pos[i + 1];
      const std::size_t under = l.sign > 0 ? pos[i + 1] : pos[i];
      b.segs[over].traversals.push_back(Traversal{id, Role::Over});
      b.segs[under].traversals.push_back(Traversal{id, Role::Under});
      b.d.crossings.push_back(Crossing{id, l.sign > 0 ? 1 : -1, {}, {}});
      std::swap(pos[i], pos[i + 1]);
    } else if (l.kind == Letter::Kind::Merge) {
      if (i + 1 >= pos.size()) throw std::invalid_argument("merge position out of range");
      const std::string id = numbered('w', switches++);
      const std::size_t left = pos[i], right = pos[i + 1];
      b.segs[left].to = b.segs[right].to = switch_end(id);
      const std::size_t trunk = b.add(switch_end(id));
      b.d.switches.push_back(Switch{id, SwitchMode::Merge, SegmentEnd{b.segs[trunk].id, End::Tail},
                                    SegmentEnd{b.segs[left].id, End::Head}, SegmentEnd{b.segs[right].id, End::Head}});
      pos[i] = trunk;
      pos.erase(pos.begin() + static_cast<std::ptrdiff_t>(i) + 1);
    } else {
      if (i >= pos.size()) throw std::invalid_argument("split position out of range");
      const std::string id = numbered('w', switches++);
      const std::size_t trunk = pos[i];
      b.segs[trunk].to = switch_end(id);
      const std::size_t left = b.add(switch_end(id));
      const std::size_t right = b.add(switch_end(id));
      b.d.switches.push_back(Switch{id, SwitchMode::Split, SegmentEnd{b.segs[trunk].id, End::Head},
                                    SegmentEnd{b.segs[left].id, End::Tail}, SegmentEnd{b.segs[right].id, End::Tail}});
      pos[i] = left;
      pos.insert(pos.begin() + static_cast<std::ptrdiff_t>(i) + 1, right);
    }
  }
  if (pos.size() != strands) throw std::invalid_argument("word does not return to its strand count");
  for (std::size_t p = 0; p < strands; ++p) b.segs[pos[p]].to = virtual_end('t', p);

  // Each closure arc joins top p to bottom p.
  for (std::size_t p = 0; p < strands; ++p) {
    std::size_t top = b.segs.size(), bottom = b.segs.size();
    for (std::size_t k = 0; k < b.segs.size(); ++k) {
      if (b.dead[k]) continue;
      if (b.segs[k].to == virtual_end('t', p)) top = k;
      if (b.segs[k].from == virtual_end('b', p)) bottom = k;
    }
    if (top == bottom) {
      const std::string marker = "m" + std::to_string(p);
      b.segs[top].from = b.segs[top].to = Endpoint{Endpoint::Kind::Marker, marker};
      b.d.markers.push_back(Marker{marker});
      continue;
    }
    Segment& a = b.segs[top];
    const Segment& c = b.segs[bottom];
    a.traversals.insert(a.traversals.end(), c.traversals.begin(), c.traversals.end());
    a.to = c.to;
    for (Switch& sw : b.d.switches) {
      for (SegmentEnd* e : {&sw.trunk, &sw.left, &sw.right}) {
        if (e->segment == c.id && e->end == End::Head) e->segment = a.id;
      }
    }
    b.dead[bottom] = true;
  }
  for (std::size_t k = 0; k < b.segs.size(); ++k) {
    if (!b.dead[k]) b.d.segments.push_back(b.segs[k]);
  }
  b.d.canonicalize();
  derive_crossing_refs(b.d);
  return b.d;
}

std::vector<Letter> random_word(std::mt19937_64& rng, std::size_t strands, std::size_t length) {
  std::vector<Letter> word;
  std::size_t k = strands;
  const std::size_t most = strands + 2;
  auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
  for (std::size_t step = 0; step < length; ++step) {
    const std::size_t roll = pick(4);
    if (k >= 2 && roll < 2) {
      word.push_back(cross(pick(k - 1), pick(2) == 0 ? 1 : -1));
    } else if (k >= 2 && roll == 2) {
      word.push_back(merge(pick(k - 1)));
      --k;
    } else if (k < most) {
      word.push_back(split(pick(k)));
      ++k;
    }
  }
  for (; k > strands; --k) word.push_back(merge(pick(k - 1)));
  for (; k < strands; ++k) word.push_back(split(pick(k)));
  return word;
}

std::optional<ScalarVector> random_positive_weights(const TrainTrackDiagram& d, std::mt19937_64& rng, bool integer) {
  const auto base = positive_invariant_vector(d);
  if (!base) return std::nullopt;
  const GraphShape g = graph_shape(d);
  std::vector<std::vector<std::size_t>> out(g.vertex_count);
  for (std::size_t e = 0; e < d.segments.size(); ++e) out[g.tail_vertex[e]].push_back(e);

  auto coefficient = [&]() -> Rational {
    if (integer) return Rational(std::uniform_int_distribution<int>(1, 3)(rng));
    return Rational(std::uniform_int_distribution<int>(1, 7)(rng), std::uniform_int_distribution<int>(1, 5)(rng));
  };

  linalg::RationalVector w(d.segments.size());
  const Rational lead = coefficient();
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = lead * (*base)[i];
  for (int c = 0; c < 3; ++c) {
    // Random walk until a vertex repeats; the loop it closes is a directed cycle.
    std::map<std::size_t, std::size_t> first_visit;
    std::vector<std::size_t> edges;
    std::size_t v = g.tail_vertex[std::uniform_int_distribution<std::size_t>(0, w.size() - 1)(rng)];
    while (!first_visit.count(v)) {
      first_visit[v] = edges.size();
      const auto& choices = out[v];
      const std::size_t e = choices[std::uniform_int_distribution<std::size_t>(0, choices.size() - 1)(rng)];
      edges.push_back(e);
      v = g.head_vertex[e];
    }
    const Rational r = coefficient();
    for (std::size_t k = first_visit[v]; k < edges.size(); ++k) w[edges[k]] += r;
  }
  return to_scalars(w);
}

std::vector<Sample> make_corpus(std::size_t count, std::uint64_t seed, bool integer) {
  std::mt19937_64 rng(seed);
  std::vector<Sample> out;
  const std::vector<std::pair<std::string, std::pair<std::size_t, std::vector<Letter>>>> fixed = {
      {"trefoil", {2, {cross(0, 1), cross(0, 1), cross(0, 1)}}},
      {"figure-eight", {3, {cross(0, 1), cross(1, -1), cross(0, 1), cross(1, -1)}}},
      {"theta", {1, {split(0), merge(0)}}},
      {"hopf", {2, {cross(0, 1), cross(0, 1)}}},
      {"split-cross-merge", {1, {split(0), cross(0, 1), merge(0)}}},
  };
  for (const auto& [name, entry] : fixed) {
    if (out.size() >= count) break;
    const TrainTrackDiagram d = closure(entry.first, entry.second);
    if (auto w = random_positive_weights(d, rng, integer)) out.push_back(Sample{name, d, *w});
  }
  std::size_t attempt = 0;
  while (out.size() < count) {
    ++attempt;
    const std::size_t strands = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
    const std::size_t length = std::uniform_int_distribution<std::size_t>(2, 9)(rng);
    const TrainTrackDiagram d = closure(strands, random_word(rng, strands, length));
    if (d.segments.empty()) continue;
    if (auto w = random_positive_weights(d, rng, integer)) {
      out.push_back(Sample{"braid-" + std::to_string(attempt), d, *w});
    }
  }
  return out;
}

}  // namespace corpus
