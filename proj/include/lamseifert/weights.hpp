#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lamseifert/diagram.hpp"
#include "lamseifert/linalg.hpp"
#include "lamseifert/scalar.hpp"

namespace lamseifert {

/// One row per switch: +1 on the trunk, -1 on each branch. Markers add no row.
linalg::Matrix switch_matrix(const TrainTrackDiagram& d);

/// The linear span of invariant weight vectors, with one strictly positive
/// member when the positive cone is nonempty.
struct WeightCone {
  std::vector<linalg::RationalVector> basis;
  std::size_t dimension = 0;
  std::optional<linalg::RationalVector> sample_positive;
};

WeightCone invariant_space(const TrainTrackDiagram& d);

/// Switch equations are flow conservation on the oriented graph, so a
/// strictly positive solution exists iff every segment lies on a directed
/// cycle. Returns the sum of one directed cycle through each segment.
std::optional<linalg::RationalVector> positive_invariant_vector(const TrainTrackDiagram& d);

bool is_invariant(const TrainTrackDiagram& d, const ScalarVector& w);
/// Throws Error(NotInvariant) naming the first failing switch.
void require_invariant(const TrainTrackDiagram& d, const ScalarVector& w);
/// Throws Error(NonPositiveWeight) naming the first entry that is not > 0.
void require_positive(const TrainTrackDiagram& d, const ScalarVector& w, const ScalarContext& ctx);

/// w / sum(w), exactly. Throws Error(NonPositiveSum) when the sum is not
/// positive and Error(NotNormalizable) when 1/sum leaves the scalar field.
ScalarVector normalize_to_cell(const ScalarVector& w, const ScalarContext& ctx);

ScalarVector to_scalars(const linalg::RationalVector& v);

}  // namespace lamseifert
