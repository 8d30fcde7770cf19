#include "lamseifert/homology.hpp"

#include "lamseifert/error.hpp"
#include "lamseifert/weights.hpp"

namespace lamseifert::homology {

namespace {

linalg::Matrix meridian_block(const BoundaryCellStructure& cs) {
  return linalg::Matrix::from_rows(cs.cycles, cs.k());
}

ScalarVector negated(const ScalarVector& v) {
  ScalarVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(-x);
  return out;
}

ScalarVector zeros(std::size_t n) { return ScalarVector(n, Scalar()); }

}  // namespace

HomClass operator+(const HomClass& a, const HomClass& b) {
  HomClass out = a;
  for (std::size_t i = 0; i < out.longitudinal.size(); ++i) out.longitudinal[i] += b.longitudinal[i];
  for (std::size_t i = 0; i < out.meridional.size(); ++i) out.meridional[i] += b.meridional[i];
  return out;
}

HomClass operator-(const HomClass& a, const HomClass& b) { return a + Rational(-1) * b; }

HomClass operator*(const Rational& q, const HomClass& a) {
  HomClass out = a;
  for (auto& x : out.longitudinal) x *= q;
  for (auto& x : out.meridional) x *= q;
  return out;
}

BoundaryCellStructure cell_structure(const TrainTrackDiagram& d) {
  BoundaryCellStructure cs;
  for (const auto& s : d.switches) cs.switches.push_back(s.id);
  for (const auto& s : d.segments) {
    cs.longitudinal.push_back(s.id);
    cs.meridians.push_back("gamma:" + s.id);
  }
  cs.cycles = cycle_basis(d);
  return cs;
}

HomClass K_class(const TrainTrackDiagram& d, const ScalarVector& w, const ScalarVector& t) {
  require_invariant(d, w);
  require_weight_shape(d, t, "twist vector");
  return HomClass{w, t};
}

linalg::Matrix linking_matrix(const TrainTrackDiagram& d, const BoundaryCellStructure& cs) {
  const std::size_t k = cs.k();
  linalg::Matrix l(cs.cycles.size(), 2 * k);
  const auto crossings = resolve_crossings(d);
  for (std::size_t j = 0; j < cs.cycles.size(); ++j) {
    const auto& z = cs.cycles[j];
    for (const auto& c : crossings) l(j, c.over) += c.sign * z[c.under];
    for (std::size_t i = 0; i < k; ++i) l(j, k + i) = z[i];
  }
  return l;
}

linalg::Matrix symmetric_linking_matrix(const TrainTrackDiagram& d, const BoundaryCellStructure& cs) {
  const std::size_t k = cs.k();
  linalg::Matrix l(cs.cycles.size(), 2 * k);
  const auto crossings = resolve_crossings(d);
  const Rational half(1, 2);
  for (std::size_t j = 0; j < cs.cycles.size(); ++j) {
    const auto& z = cs.cycles[j];
    for (const auto& c : crossings) {
      l(j, c.over) += half * c.sign * z[c.under];
      l(j, c.under) += half * c.sign * z[c.over];
    }
    for (std::size_t i = 0; i < k; ++i) l(j, k + i) = z[i];
  }
  return l;
}

ScalarVector pair(const linalg::Matrix& linking, const HomClass& k) {
  ScalarVector x = k.longitudinal;
  x.insert(x.end(), k.meridional.begin(), k.meridional.end());
  return linking.apply(x);
}

std::size_t meridian_rank(const BoundaryCellStructure& cs) { return linalg::rank(meridian_block(cs)); }

AffineTwistSpace valid_twist_space(const TrainTrackDiagram& d, const BoundaryCellStructure& cs, const ScalarVector& w) {
  require_invariant(d, w);
  const std::size_t k = cs.k();
  const linalg::Matrix l = linking_matrix(d, cs);
  const ScalarVector rhs = negated(pair(l, HomClass{w, zeros(k)}));
  const linalg::Matrix m = meridian_block(cs);

  AffineTwistSpace space;
  space.particular = linalg::solve(m, rhs);
  space.directions = linalg::null_space(m);
  space.dimension = space.directions.size();
  for (std::size_t i = 0; i < k; ++i) {
    bool on_cycle = false;
    for (const auto& z : cs.cycles) on_cycle = on_cycle || z[i] != 0;
    if (!on_cycle) {
      space.warnings.push_back("segment '" + cs.longitudinal[i] +
                               "' lies on no cycle; its twist is unconstrained");
    }
  }
  return space;
}

AffineTwistSpace valid_twist_space(const TrainTrackDiagram& d, const ScalarVector& w) {
  return valid_twist_space(d, cell_structure(d), w);
}

Verdict verify(const TrainTrackDiagram& d, const BoundaryCellStructure& cs, const ScalarVector& w,
               const ScalarVector& t) {
  Verdict v;
  v.residual = pair(linking_matrix(d, cs), K_class(d, w, t));
  v.valid = true;
  for (const auto& r : v.residual) v.valid = v.valid && r.is_zero();
  return v;
}

Verdict verify(const TrainTrackDiagram& d, const ScalarVector& w, const ScalarVector& t) {
  return verify(d, cell_structure(d), w, t);
}

bool reflection_identity_check(const TrainTrackDiagram& d, const ScalarVector& w, const ScalarVector& t) {
  const HomClass lhs = K_class(d, w, negated(t));
  const HomClass rhs = Rational(2) * K_class(d, w, zeros(w.size())) - K_class(d, w, t);
  return lhs == rhs;
}

bool linearity_check(const TrainTrackDiagram& d, const ScalarVector& w, const ScalarVector& t, const Rational& lambda) {
  ScalarVector lw = w;
  ScalarVector lt = t;
  for (auto& x : lw) x *= lambda;
  for (auto& x : lt) x *= lambda;
  return K_class(d, lw, lt) == lambda * K_class(d, w, t);
}

}  // namespace lamseifert::homology
