#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "lamseifert/scalar.hpp"

namespace lamseifert {

enum class SwitchMode { Merge, Split };
enum class End { Tail, Head };
enum class Role { Over, Under };
enum class Slot { Trunk, Left, Right };

/// One end of a segment. A segment is oriented from its tail to its head.
struct SegmentEnd {
  std::string segment;
  End end = End::Tail;
  friend bool operator==(const SegmentEnd&, const SegmentEnd&) = default;
};

/// Left/right are as seen facing along the orientation of the track.
/// In merge mode both branch heads arrive at the switch and the trunk tail
/// leaves it; in split mode the trunk head arrives and both branch tails leave.
struct Switch {
  std::string id;
  SwitchMode mode = SwitchMode::Merge;
  SegmentEnd trunk;
  SegmentEnd left;
  SegmentEnd right;
  friend bool operator==(const Switch&, const Switch&) = default;
};

struct Endpoint {
  enum class Kind { Switch, Marker };
  Kind kind = Kind::Marker;
  std::string id;
  friend bool operator==(const Endpoint&, const Endpoint&) = default;
};

struct Traversal {
  std::string crossing;
  Role role = Role::Over;
  friend bool operator==(const Traversal&, const Traversal&) = default;
};

struct Segment {
  std::string id;
  Endpoint from;  // tail
  Endpoint to;    // head
  /// Crossings met along the segment, in order from tail to head.
  std::vector<Traversal> traversals;
  friend bool operator==(const Segment&, const Segment&) = default;
};

/// Degree-2 vertex placed on a closed curve that has no switch.
struct Marker {
  std::string id;
  friend bool operator==(const Marker&, const Marker&) = default;
};

struct TraversalRef {
  std::string segment;
  std::size_t index = 0;
  friend bool operator==(const TraversalRef&, const TraversalRef&) = default;
};

/// Sign is the standard one for oriented strands: +1 when the under strand
/// passes from right to left as seen travelling along the over strand.
struct Crossing {
  std::string id;
  int sign = 1;
  TraversalRef over;
  TraversalRef under;
  friend bool operator==(const Crossing&, const Crossing&) = default;
};

/// Oriented train track projected to the plane. Element lists are kept
/// sorted by id; segment index i (in `segments`) is the coordinate used by
/// every weight, twist and cycle vector.
struct TrainTrackDiagram {
  std::vector<Switch> switches;
  std::vector<Segment> segments;
  std::vector<Marker> markers;
  std::vector<Crossing> crossings;

  /// Sorts every list by id. Parsing and the builders call this.
  void canonicalize();

  std::optional<std::size_t> segment_index(const std::string& id) const;
  std::optional<std::size_t> switch_index(const std::string& id) const;
  std::optional<std::size_t> crossing_index(const std::string& id) const;
  /// Throws Error(Structure) for unknown ids.
  std::size_t require_segment(const std::string& id) const;

  std::vector<std::string> segment_ids() const;

  friend bool operator==(const TrainTrackDiagram&, const TrainTrackDiagram&) = default;
};

/// Fills every crossing's over/under reference from the segments' traversal
/// lists. Crossings that no traversal names keep their references.
void derive_crossing_refs(TrainTrackDiagram& d);

/// Crossing data resolved to segment indices, for numeric passes.
struct ResolvedCrossing {
  std::size_t over = 0;
  std::size_t under = 0;
  int sign = 1;
};
std::vector<ResolvedCrossing> resolve_crossings(const TrainTrackDiagram& d);

struct Violation {
  std::string invariant;  // short stable code, e.g. "dangling-crossing"
  std::string element;    // id of the offending element
  std::string detail;
  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Empty iff the diagram is structurally valid.
std::vector<Violation> validate(const TrainTrackDiagram& d);
/// Throws Error(Structure) naming the first violation.
void require_valid(const TrainTrackDiagram& d);

/// Vertex of the underlying graph: switches first (in order), then markers.
struct GraphShape {
  std::size_t vertex_count = 0;
  std::vector<std::size_t> tail_vertex;  // per segment
  std::vector<std::size_t> head_vertex;  // per segment
  std::vector<std::size_t> component;    // per vertex
  std::size_t component_count = 0;
};
GraphShape graph_shape(const TrainTrackDiagram& d);

/// Fundamental cycles of a spanning forest; E - V + C vectors with entries
/// in {-1, 0, 1}, indexed by segment.
std::vector<std::vector<Rational>> cycle_basis(const TrainTrackDiagram& d);

/// Sum over crossings of sign * w(over) * w(under).
Scalar writhe(const TrainTrackDiagram& d, const ScalarVector& w, const ScalarContext& ctx);

/// Throws Error(Index) when w is not indexed by d's segments.
void require_weight_shape(const TrainTrackDiagram& d, const ScalarVector& w, const char* what = "weight vector");

}  // namespace lamseifert
