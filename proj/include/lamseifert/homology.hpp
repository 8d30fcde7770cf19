#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lamseifert/diagram.hpp"
#include "lamseifert/linalg.hpp"
#include "lamseifert/scalar.hpp"

namespace lamseifert::homology {

/// Cells of the boundary torus-with-handles T(τ) that the bounding criterion
/// needs: one longitudinal cell and one meridian per segment, plus a cycle
/// basis of τ to pair them against. Meridian γ_i is oriented so that its
/// linking number with the core of segment i is +1.
struct BoundaryCellStructure {
  std::vector<std::string> switches;
  std::vector<std::string> longitudinal;
  std::vector<std::string> meridians;
  std::vector<linalg::RationalVector> cycles;

  std::size_t k() const { return longitudinal.size(); }
};

BoundaryCellStructure cell_structure(const TrainTrackDiagram& d);

/// A 1-cycle on T(τ) written in the cell basis.
struct HomClass {
  ScalarVector longitudinal;
  ScalarVector meridional;

  friend bool operator==(const HomClass&, const HomClass&) = default;
  friend HomClass operator+(const HomClass& a, const HomClass& b);
  friend HomClass operator-(const HomClass& a, const HomClass& b);
  friend HomClass operator*(const Rational& q, const HomClass& a);
};

/// Throws Error(NotInvariant) if w fails a switch equation.
HomClass K_class(const TrainTrackDiagram& d, const ScalarVector& w, const ScalarVector& t);

/// Rows are cycles, columns are the k longitudinal cells followed by the k
/// meridians. The longitudinal entry for (z, s) is Σ sign(c)·z(under(c)) over
/// crossings c with over(c) = s: the pushoff of τ(w) lies just below the
/// projection plane, so only crossings where τ passes over the cycle link.
linalg::Matrix linking_matrix(const TrainTrackDiagram& d, const BoundaryCellStructure& cs);
/// Same shape, longitudinal block ½·Σ sign(c)·(w(o)z(u) + w(u)z(o)).
/// Agrees with linking_matrix on switchless diagrams.
linalg::Matrix symmetric_linking_matrix(const TrainTrackDiagram& d, const BoundaryCellStructure& cs);

/// L·K as one Scalar per cycle.
ScalarVector pair(const linalg::Matrix& linking, const HomClass& k);

struct AffineTwistSpace {
  std::optional<ScalarVector> particular;
  std::vector<linalg::RationalVector> directions;
  std::size_t dimension = 0;
  std::vector<std::string> warnings;
};

AffineTwistSpace valid_twist_space(const TrainTrackDiagram& d, const BoundaryCellStructure& cs, const ScalarVector& w);
AffineTwistSpace valid_twist_space(const TrainTrackDiagram& d, const ScalarVector& w);

struct Verdict {
  bool valid = false;
  ScalarVector residual;
};

Verdict verify(const TrainTrackDiagram& d, const BoundaryCellStructure& cs, const ScalarVector& w,
               const ScalarVector& t);
Verdict verify(const TrainTrackDiagram& d, const ScalarVector& w, const ScalarVector& t);

/// K(w, -t) == 2 K(w, 0) - K(w, t), compared cell by cell.
bool reflection_identity_check(const TrainTrackDiagram& d, const ScalarVector& w, const ScalarVector& t);
/// K(λw, λt) == λ K(w, t).
bool linearity_check(const TrainTrackDiagram& d, const ScalarVector& w, const ScalarVector& t, const Rational& lambda);

/// Rank of the meridian block; dimension of the twist space is k minus this.
std::size_t meridian_rank(const BoundaryCellStructure& cs);

}  // namespace lamseifert::homology
