#pragma once

#include <optional>
#include <string>

#include "lamseifert/diagram.hpp"
#include "lamseifert/seifert.hpp"

namespace lamseifert::svg {

struct SvgOptions {
  /// Scale stroke widths by segment weight when weights are given.
  bool stroke_by_weight = true;
};

/// Schematic drawing: vertices on a circle, segments as arcs (a closed curve
/// through a single vertex as a <circle>), crossings as labelled gaps on the
/// over strand. With `overlay`, each circle family is one closed path.
std::string render(const TrainTrackDiagram& d, const std::optional<ScalarVector>& weights, const ScalarContext& ctx,
                   const SeifertRun* overlay = nullptr, const SvgOptions& options = {});

}  // namespace lamseifert::svg
