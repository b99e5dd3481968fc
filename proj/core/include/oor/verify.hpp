#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "oor/drawing.hpp"

namespace oor {

struct ChordGoodness {
  Edge chord;
  bool good = false;
  /// Endpoint x with W' inside R_D(x); present iff good.
  std::optional<Vertex> toward;
  /// W' in R_D(x) agrees with W in R_D'(x) for both endpoints.
  bool mirror_consistent = true;
};

/// Condition (*) for one chord of a plane drawing. Throws InputError if the
/// edge is not a chord.
ChordGoodness chord_is_good(const DrawingAnalysis& a, const Edge& chord);
ChordGoodness chord_is_good(const Drawing& d, const Edge& chord);

/// Whether an open sub-segment of pq lies in the open outer face. Throws
/// DegenerateError if pq passes through a vertex or runs along an edge.
bool segment_intersects_outer(const DrawingAnalysis& a, Vertex p, Vertex q);
/// Same, after checking planarity (throws InputError for non-plane drawings).
bool segment_intersects_outer(const Drawing& d, Vertex p, Vertex q);

struct NonEdgeCheck {
  Vertex p;
  Vertex q;
  bool intersects_outer;
};

struct VerificationReport {
  bool planar = false;
  std::optional<std::pair<Edge, Edge>> crossing;
  bool general_position = false;
  std::optional<std::array<Vertex, 3>> collinear;
  std::vector<ChordGoodness> chords;
  std::vector<NonEdgeCheck> non_edges;
  /// All chords good.
  bool local_ok = false;
  /// All non-edges meet the outer face.
  bool exhaustive_ok = false;
  /// The graph is biconnected with triangular inner faces, so both criteria
  /// must coincide.
  bool equivalence_applies = false;
  bool criteria_agree = true;
  bool mirror_consistent = true;
  bool verdict = false;
  std::vector<std::string> notes;
};

/// Full verifier: planarity, general position, the per-chord local criterion
/// and the exhaustive non-edge criterion.
VerificationReport is_plane_oor(const Drawing& d);

}  // namespace oor
