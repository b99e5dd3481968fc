#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "oor/geometry.hpp"
#include "oor/graph.hpp"

namespace oor {

/// Straight-line drawing: one exact point per vertex.
struct Drawing {
  std::vector<RationalPoint> points;
  Graph graph;

  bool operator==(const Drawing& o) const { return points == o.points && graph == o.graph; }
};

/// Counterclockwise rotation system induced by the coordinates.
std::vector<std::vector<Vertex>> geometric_rotation(const Drawing& d);

/// First pair of edges that cross, touch or overlap, if any. Also reports
/// coincident points as a crossing of their incident edges.
std::optional<std::pair<Edge, Edge>> find_crossing(const Drawing& d);

/// Face structure of a plane drawing of a connected graph, derived from the
/// coordinates alone.
class DrawingAnalysis {
 public:
  /// Throws InputError if the graph is disconnected or has fewer than two
  /// vertices. Planarity is a precondition and is not rechecked here.
  explicit DrawingAnalysis(const Drawing& d);

  const Drawing& drawing() const { return *drawing_; }
  const EmbeddedGraph& embedding() const { return embedding_; }
  const std::vector<Face>& faces() const { return faces_; }
  int outer_face() const { return outer_; }
  bool on_outer_face(Vertex v) const { return on_outer_[v]; }
  bool is_outer_edge(const Edge& e) const;
  bool is_chord(const Edge& e) const;
  std::vector<Edge> chords() const;
  /// Index into faces() of the face to the left of the dart.
  int face_left_of(Vertex tail, Vertex head) const;

  const std::vector<RationalPoint>& face_ring(int face) const { return rings_[face]; }
  const Box& face_box(int face) const { return boxes_[face]; }
  /// Box of the side from face_ring(outer_face())[i] to the next corner.
  const Box& outer_side_box(std::size_t i) const { return outer_sides_[i]; }

 private:
  const Drawing* drawing_;
  EmbeddedGraph embedding_;
  std::vector<Face> faces_;
  std::vector<std::vector<RationalPoint>> rings_;
  std::vector<Box> boxes_;
  std::vector<Box> outer_sides_;
  std::vector<char> on_outer_;
  std::vector<std::vector<int>> face_of_dart_;  // parallel to sorted adjacency
  int outer_ = -1;
};

}  // namespace oor
