#include "lamseifert/weights.hpp"

#include <queue>

#include "lamseifert/error.hpp"

namespace lamseifert {

linalg::Matrix switch_matrix(const TrainTrackDiagram& d) {
  linalg::Matrix m(d.switches.size(), d.segments.size());
  for (std::size_t r = 0; r < d.switches.size(); ++r) {
    const Switch& sw = d.switches[r];
    m(r, d.require_segment(sw.trunk.segment)) += 1;
    m(r, d.require_segment(sw.left.segment)) -= 1;
    m(r, d.require_segment(sw.right.segment)) -= 1;
  }
  return m;
}

std::optional<linalg::RationalVector> positive_invariant_vector(const TrainTrackDiagram& d) {
  const GraphShape g = graph_shape(d);
  const std::size_t n = d.segments.size();
  std::vector<std::vector<std::size_t>> outgoing(g.vertex_count);
  for (std::size_t e = 0; e < n; ++e) outgoing[g.tail_vertex[e]].push_back(e);

  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  linalg::RationalVector total(n);
  for (std::size_t e = 0; e < n; ++e) {
    // Shortest directed path from head(e) back to tail(e).
    const std::size_t start = g.head_vertex[e];
    const std::size_t goal = g.tail_vertex[e];
    std::vector<std::size_t> via(g.vertex_count, kNone);
    std::vector<bool> seen(g.vertex_count, false);
    std::queue<std::size_t> frontier;
    seen[start] = true;
    frontier.push(start);
    while (!frontier.empty() && !seen[goal]) {
      const std::size_t v = frontier.front();
      frontier.pop();
      for (std::size_t f : outgoing[v]) {
        const std::size_t next = g.head_vertex[f];
        if (seen[next]) continue;
        seen[next] = true;
        via[next] = f;
        frontier.push(next);
      }
    }
    if (!seen[goal]) return std::nullopt;
    total[e] += 1;
    for (std::size_t v = goal; v != start; v = g.tail_vertex[via[v]]) total[via[v]] += 1;
  }
  return total;
}

WeightCone invariant_space(const TrainTrackDiagram& d) {
  WeightCone cone;
  cone.basis = linalg::null_space(switch_matrix(d));
  cone.dimension = cone.basis.size();
  cone.sample_positive = positive_invariant_vector(d);
  return cone;
}

bool is_invariant(const TrainTrackDiagram& d, const ScalarVector& w) {
  require_weight_shape(d, w);
  for (const auto& row : switch_matrix(d).apply(w)) {
    if (!row.is_zero()) return false;
  }
  return true;
}

void require_invariant(const TrainTrackDiagram& d, const ScalarVector& w) {
  require_weight_shape(d, w);
  const ScalarVector residual = switch_matrix(d).apply(w);
  for (std::size_t r = 0; r < residual.size(); ++r) {
    if (!residual[r].is_zero()) {
      throw Error(ErrorKind::NotInvariant, "switch equation fails at '" + d.switches[r].id + "'");
    }
  }
}

void require_positive(const TrainTrackDiagram& d, const ScalarVector& w, const ScalarContext& ctx) {
  require_weight_shape(d, w);
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (ctx.sign(w[i]) <= 0) {
      throw Error(ErrorKind::NonPositiveWeight,
                  "weight of segment '" + d.segments[i].id + "' is " + ctx.to_string(w[i]) + ", not positive");
    }
  }
}

ScalarVector normalize_to_cell(const ScalarVector& w, const ScalarContext& ctx) {
  Scalar sum;
  for (const auto& x : w) sum += x;
  if (ctx.sign(sum) <= 0) {
    throw Error(ErrorKind::NonPositiveSum, "weights sum to " + ctx.to_string(sum));
  }
  const Scalar inv = ctx.inverse(sum);
  ScalarVector out;
  out.reserve(w.size());
  for (const auto& x : w) out.push_back(ctx.multiply(x, inv));
  return out;
}

ScalarVector to_scalars(const linalg::RationalVector& v) {
  ScalarVector out;
  out.reserve(v.size());
  for (const auto& q : v) out.emplace_back(q);
  return out;
}

}  // namespace lamseifert
