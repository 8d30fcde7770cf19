#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lamseifert/diagram.hpp"
#include "lamseifert/scalar.hpp"

namespace lamseifert {

/// Record of one crossing replaced by a merge, a crossing segment and a split.
struct CrossingProvenance {
  std::string crossing;
  std::string segment;  // the crossing segment in τ′
  std::size_t over = 0;   // original segment indices
  std::size_t under = 0;
  int sign = 1;
};

/// Crossing-free planar track τ′ with weights w′.
struct Freeway {
  TrainTrackDiagram track;
  ScalarVector weights;
  std::vector<CrossingProvenance> provenance;
  /// Per τ′ segment: the original segment it is a piece of, or nullopt for
  /// crossing segments.
  std::vector<std::optional<std::size_t>> origin;
};

struct CircleFamily {
  Scalar width;
  /// τ′ segment indices in cyclic order, rotated to the lexicographic minimum.
  std::vector<std::size_t> itinerary;
};

enum class SplitKind { Left, Right, Collision };

struct SplitStep {
  SplitKind kind = SplitKind::Collision;
  std::string merge;
  std::string split;
  /// τ′ segments of the large branch that was split open.
  std::vector<std::size_t> along;
  Scalar left_in;
  Scalar left_out;
};

struct CircleFamilyDecomposition {
  std::vector<CircleFamily> families;
  std::vector<SplitStep> trace;
};

struct DiskCap {
  std::size_t family = 0;
  Scalar weight;
};

/// Reverse of one split: the two sheets glued back together along `along`.
struct PinchRecord {
  std::size_t step = 0;
  SplitKind kind = SplitKind::Collision;
  std::vector<std::size_t> along;
  Scalar weight;
};

/// The loop left on the under segment when a crossing segment is undone.
struct ReconstructionRecord {
  std::string crossing;
  std::string crossing_segment;
  std::size_t over = 0;
  std::size_t under = 0;
  int sign = 1;
  Scalar band_weight;
  Scalar twist;
};

struct SeifertLaminationDesc {
  CircleFamilyDecomposition decomposition;
  std::vector<DiskCap> caps;
  std::vector<PinchRecord> pinches;
  std::vector<ReconstructionRecord> reconstructions;
  /// Disk sectors (one per family) followed by band sectors (one per crossing).
  ScalarVector sector_weights;
};

struct FramedLinkParams {
  ScalarVector weights;
  ScalarVector twists;
};

struct SeifertConfig {
  /// Elementary splits allowed before giving up. 0 means
  /// min(2^(segments + switches of τ′), kSplitCap).
  std::uint64_t split_bound = 0;
  static constexpr std::uint64_t kSplitCap = 10'000'000;
};

/// Throws Error(NonPositiveWeight) or Error(NotInvariant).
Freeway eliminate_crossings(const TrainTrackDiagram& d, const ScalarVector& w, const ScalarContext& ctx);

/// Throws Error(SplitDiverged) past the bound, Error(PrecisionExhausted) when
/// two branch weights cannot be ordered.
CircleFamilyDecomposition split_circles(const Freeway& f, const ScalarContext& ctx, const SeifertConfig& config = {});

SeifertLaminationDesc cap_and_pinch(const CircleFamilyDecomposition& c, const Freeway& f);

/// Throws Error(ConventionMismatch) if the twist vector fails the
/// homological bounding test.
std::pair<FramedLinkParams, SeifertLaminationDesc> reconstruct(const TrainTrackDiagram& d, const SeifertLaminationDesc& sl,
                                                               const Freeway& f, const ScalarContext& ctx);

struct SeifertRun {
  Freeway freeway;
  FramedLinkParams params;
  SeifertLaminationDesc lamination;
};

SeifertRun run(const TrainTrackDiagram& d, const ScalarVector& w, const ScalarContext& ctx,
               const SeifertConfig& config = {});

/// Weighted surface: Σ disk weights − Σ band weights.
Scalar euler_characteristic(const SeifertLaminationDesc& sl);
/// Cell count V − E + F of the capped 2-complex over τ′.
long long complex_euler_characteristic(const SeifertLaminationDesc& sl, const Freeway& f);

/// Genus of the carried surface when the boundary is a single knot.
/// Throws Error(NotASurface) unless d is one switchless closed curve with an
/// integer weight m and an integer twist t coprime to m.
Rational genus_if_knot(const TrainTrackDiagram& d, const SeifertRun& r);

/// Empty when per-segment measure is conserved at every stage; otherwise one
/// message per defect.
std::vector<std::string> measure_defects(const TrainTrackDiagram& d, const ScalarVector& w, const SeifertRun& r);

const char* to_string(SplitKind k);

}  // namespace lamseifert
