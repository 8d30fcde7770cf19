#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "lamseifert/diagram.hpp"
#include "lamseifert/scalar.hpp"

namespace lamseifert::io {

using nlohmann::json;

inline constexpr int kFormatVersion = 1;

/// Everything a diagram file may carry besides the track itself.
struct DiagramDocument {
  TrainTrackDiagram diagram;
  ScalarContext context;
  std::optional<ScalarVector> weights;
};

/// Parses without checking structural invariants (for `validate`).
/// Throws Error(Syntax) on malformed JSON, a wrong version tag, or missing fields.
DiagramDocument parse_document_unchecked(const std::string& text, int precision = ScalarContext::kDefaultPrecision);
/// As above, then throws Error(Structure) on the first violated invariant.
DiagramDocument parse_document(const std::string& text, int precision = ScalarContext::kDefaultPrecision);
TrainTrackDiagram parse(const std::string& text);

/// Canonical text: lists sorted by id, keys sorted, two-space indent.
std::string serialize(const TrainTrackDiagram& d);
std::string serialize(const DiagramDocument& doc);
json to_json(const TrainTrackDiagram& d);

ScalarContext context_from_json(const json& basis, const json* products, int precision);
json context_to_json(const ScalarContext& ctx);

/// Accepts a number, a rational or expression string ("1+sqrt2"), or an
/// array of rational coefficients over the basis.
Scalar scalar_from_json(const json& j, const ScalarContext& ctx);
/// Exact coefficient array, padded to the basis dimension.
json scalar_to_json(const Scalar& s, const ScalarContext& ctx);

/// Array in segment order, or an object keyed by segment id.
/// Throws Error(Index) on a missing or unknown segment.
ScalarVector weights_from_json(const json& j, const TrainTrackDiagram& d, const ScalarContext& ctx);
json vector_to_json(const ScalarVector& v, const ScalarContext& ctx);
/// {"exact": [...], "decimal": [...]} keyed in segment order.
json vector_report(const ScalarVector& v, const ScalarContext& ctx);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace lamseifert::io
