#pragma once

#include <string>
#include <vector>

#include "lamseifert/diagram.hpp"
#include "lamseifert/diagram_io.hpp"
#include "lamseifert/homology.hpp"
#include "lamseifert/seifert.hpp"
#include "lamseifert/weights.hpp"

namespace lamseifert::report {

using io::json;

/// {"exact": [coefficients], "decimal": "..."}
json scalar(const Scalar& s, const ScalarContext& ctx);

json violations(const std::vector<Violation>& v);
json cone(const TrainTrackDiagram& d, const WeightCone& c);
json seifert(const TrainTrackDiagram& d, const SeifertRun& r, const ScalarContext& ctx, bool verified);
json twist_space(const TrainTrackDiagram& d, const homology::AffineTwistSpace& s, const ScalarContext& ctx);
json verdict(const homology::Verdict& v, const ScalarContext& ctx);

/// Indented key/value rendering that shows decimals in place of exact
/// coefficient arrays.
std::string to_text(const json& doc);

}  // namespace lamseifert::report
