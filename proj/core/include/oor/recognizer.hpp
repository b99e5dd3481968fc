#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "oor/graph.hpp"

namespace oor {

enum class RejectKind {
  not_biconnected,
  not_planar_inner_chordal,
  inner_degree_violation,
  chordless_cycle,
  not_maximal_outerplanar_core,
};

std::string_view to_string(RejectKind kind);

struct RejectReason {
  RejectKind kind;
  /// Offending vertices: a cut vertex, a chordless cycle in order, the
  /// vertices of a conflicting 4-clique, or the stalled remainder of an ear
  /// peeling.
  std::vector<Vertex> witness;
  std::string detail;
};

template <class T>
using Recognition = std::variant<T, RejectReason>;

template <class T>
bool accepted(const Recognition<T>& r) {
  return std::holds_alternative<T>(r);
}

/// A biconnected inner-chordal plane graph with its canonical embedding.
///
/// The outer cycle is listed counterclockwise starting at its smallest vertex;
/// its second entry is the smaller of the two cycle neighbors of the first.
struct InnerChordalGraph {
  EmbeddedGraph embedded;
  std::vector<Vertex> inner_vertices;
  std::vector<Vertex> outer_cycle;
  std::vector<Edge> chords;

  const Graph& graph() const { return embedded.graph; }
};

enum class NodeKind { K3, K4 };

struct TreeNode {
  NodeKind kind = NodeKind::K3;
  /// Outer triangle of the node, sorted ascending.
  std::array<Vertex, 3> triangle{};
  /// Inner vertex of a K4 node.
  std::optional<Vertex> inner;

  std::vector<Vertex> vertices() const;
  bool contains(Vertex v) const;
};

struct TreeEdge {
  int a = 0;
  int b = 0;
  Edge chord;
};

/// Triangles (K3 nodes) and 4-cliques (K4 nodes) glued along chords. Nodes are
/// sorted by triangle; edges by (a, b) with a < b.
struct ConstructionTree {
  std::size_t vertex_count = 0;
  std::vector<TreeNode> nodes;
  std::vector<TreeEdge> edges;

  /// Tree edges incident to each node, as indices into `edges`.
  std::vector<std::vector<int>> incidence() const;
  int tree_degree(int node) const;
};

struct PeelResult {
  Graph core;  ///< same vertex ids; removed vertices become isolated
  std::vector<Vertex> removed;
  std::vector<std::array<Vertex, 3>> marked;  ///< neighbor triangle of removed[i]
};

struct MaximalOuterplanar {
  std::vector<Vertex> outer_cycle;  ///< canonical orientation
  std::vector<std::array<Vertex, 3>> triangles;  ///< sorted; index = dual node
  struct DualEdge {
    int a;
    int b;
    Edge chord;
  };
  std::vector<DualEdge> dual_edges;
};

Recognition<InnerChordalGraph> recognize(const Graph& g);

/// Removes one vertex from every 4-clique formed by a degree-3 vertex and its
/// triangular neighborhood. The number of removals must equal |E| - 2|V| + 3.
Recognition<PeelResult> peel_inner_vertices(const Graph& g);

/// Ear peeling over the non-isolated vertices of g. Succeeds iff they induce a
/// maximal outerplanar graph.
Recognition<MaximalOuterplanar> recognize_maximal_outerplanar(const Graph& g);

ConstructionTree build_construction_tree(const InnerChordalGraph& ic);

/// Union of the node cliques.
Graph merge(const ConstructionTree& t);

/// Asserts the structural invariants of an accepted graph (faces, inner
/// vertices, chords). Throws std::logic_error describing the first violation.
void check_inner_chordal(const InnerChordalGraph& ic);

/// Shortest chordless cycle of length >= 4 through some vertex, or empty if g
/// is chordal. Cost is polynomial but not linear; intended for diagnostics.
std::vector<Vertex> find_chordless_cycle(const Graph& g);

}  // namespace oor
