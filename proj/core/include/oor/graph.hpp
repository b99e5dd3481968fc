#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace oor {

using Vertex = std::int32_t;

/// Undirected edge stored canonically with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  bool has(Vertex x) const { return x == u || x == v; }
  Vertex other(Vertex x) const { return x == u ? v : u; }

  auto operator<=>(const Edge&) const = default;
  bool operator==(const Edge&) const = default;
};

/// Directed edge side: the face to the left of tail -> head.
struct Dart {
  Vertex tail = 0;
  Vertex head = 0;

  auto operator<=>(const Dart&) const = default;
  bool operator==(const Dart&) const = default;
};

std::uint64_t edge_key(Vertex a, Vertex b);

/// Thrown for malformed input: bad vertex ids, self-loops, duplicate edges,
/// inconsistent rotation systems.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
  InputError(const std::string& what, std::pair<Vertex, Vertex> pair)
      : std::invalid_argument(what), pair_(pair), has_pair_(true) {}

  bool has_pair() const { return has_pair_; }
  std::pair<Vertex, Vertex> pair() const { return pair_; }

 private:
  std::pair<Vertex, Vertex> pair_{};
  bool has_pair_ = false;
};

/// Simple undirected graph on vertices 0..n-1. Immutable once built.
class Graph {
 public:
  Graph() = default;

  std::size_t vertex_count() const { return offset_.empty() ? 0 : offset_.size() - 1; }
  std::size_t edge_count() const { return edges_.size(); }

  /// Edges sorted lexicographically.
  std::span<const Edge> edges() const { return edges_; }
  /// Neighbors of v sorted ascending.
  std::span<const Vertex> neighbors(Vertex v) const {
    return {adjacency_.data() + offset_[v], offset_[v + 1] - offset_[v]};
  }
  std::size_t degree(Vertex v) const { return offset_[v + 1] - offset_[v]; }
  bool has_edge(Vertex a, Vertex b) const;
  /// Position of edge ab in edges(), or edge_count() if absent.
  std::size_t edge_index(Vertex a, Vertex b) const;

  friend Graph build_graph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edge_list);

  bool operator==(const Graph& other) const {
    return edges_ == other.edges_ && vertex_count() == other.vertex_count();
  }

 private:
  std::vector<Edge> edges_;
  // compressed adjacency: neighbors of v are adjacency_[offset_[v] .. offset_[v + 1])
  std::vector<std::size_t> offset_;
  std::vector<Vertex> adjacency_;
  // edges with smaller endpoint u are edges_[edge_begin_[u] .. edge_begin_[u + 1])
  std::vector<std::size_t> edge_begin_;
};

/// Validates and builds a graph. Throws InputError naming the offending pair on
/// self-loops, duplicate edges or out-of-range indices.
Graph build_graph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edge_list);
Graph build_graph(std::size_t n, const std::vector<Edge>& edges);

/// Graph with a counterclockwise rotation system and a designated outer face.
/// The outer face is the face to the left of `outer`.
struct EmbeddedGraph {
  Graph graph;
  std::vector<std::vector<Vertex>> rotation;
  Dart outer;
};

/// Checks that each rotation list is a permutation of the vertex's neighbors
/// and that `outer` is an existing dart. Throws InputError otherwise.
EmbeddedGraph make_embedded(Graph graph, std::vector<std::vector<Vertex>> rotation, Dart outer);

struct Face {
  /// Boundary darts in traversal order starting at the lexicographically
  /// smallest dart, which doubles as the face id.
  std::vector<Dart> boundary;
  bool is_outer = false;

  Dart id() const { return boundary.front(); }
  std::vector<Vertex> vertices() const;
};

/// Face boundary walks of a rotation system (no outer designation). Faces lie
/// to the left of their darts; successor of (u,v) is (v,w) with w the
/// clockwise neighbor of u around v.
std::vector<std::vector<Dart>> face_walks(const Graph& graph, const std::vector<std::vector<Vertex>>& rotation);

/// All faces of a connected embedded graph, sorted by id. Throws InputError if
/// the rotation system is inconsistent or violates Euler's formula.
std::vector<Face> compute_faces(const EmbeddedGraph& g);

bool is_connected(const Graph& g);
bool is_biconnected(const Graph& g);
/// Articulation points in ascending order (connected graphs).
std::vector<Vertex> cut_vertices(const Graph& g);

/// Biconnected components as edge lists; bridges form single-edge blocks.
std::vector<std::vector<Edge>> biconnected_components(const Graph& g);

}  // namespace oor
