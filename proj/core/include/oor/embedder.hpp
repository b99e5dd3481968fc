#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "oor/drawing.hpp"
#include "oor/orientation.hpp"
#include "oor/recognizer.hpp"

namespace oor {

/// Partial drawing during the breadth-first construction. Vertices not yet
/// placed have no coordinates and no cycle links.
struct AttachState {
  const InnerChordalGraph* graph = nullptr;
  const ChordOrientation* orientation = nullptr;
  int step = 0;
  std::vector<RationalPoint> points;
  std::vector<char> placed;
  /// Counterclockwise links of the current outer cycle; -1 off the cycle.
  std::vector<Vertex> next;
  std::vector<Vertex> prev;
  /// Third vertex of the inner face on each current outer edge.
  std::unordered_map<std::uint64_t, Vertex> face_third;
  /// Number of directed chords that are inner edges of the current graph and
  /// point at the vertex.
  std::vector<int> inactive_in;
  std::vector<Edge> edges;

  bool on_outer(Vertex v) const { return next[v] >= 0; }
  /// Target of an outer edge if it is a directed chord.
  std::optional<Vertex> target(Vertex a, Vertex b) const;
  bool is_active(Vertex v) const;
  /// Properties (i) and (ii) at one outer vertex.
  bool properties_hold(Vertex v) const;
  /// First outer vertex violating (i) or (ii), if any.
  std::optional<Vertex> property_violation() const;
};

/// Placement that did not converge. Valid input never produces this.
class EmbedError : public std::logic_error {
 public:
  EmbedError(const std::string& what, int step) : std::logic_error(what), step_(step) {}
  int step() const { return step_; }

 private:
  int step_;
};

using AttachObserver = std::function<void(const AttachState&)>;

/// Plane outside-obstacle drawing realizing the orientation. Throws InputError
/// if the orientation is not valid for the graph. The observer, if given, sees
/// the state after the root and after every attachment.
Drawing embed(const InnerChordalGraph& ic, const ChordOrientation& o, const AttachObserver& observer = {});

/// Orientation induced by a drawing: each chord points to the endpoint whose
/// region contains the opposite side. Throws InputError naming the first chord
/// that is not good.
ChordOrientation derive_orientation(const Drawing& d);

/// Drawing of a connected chordal outerplanar graph whose non-edges all meet
/// the outer face. Rejects other inputs.
Recognition<Drawing> represent_outerplanar(const Graph& g);

}  // namespace oor
