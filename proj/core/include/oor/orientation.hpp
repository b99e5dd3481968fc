#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "oor/graph.hpp"
#include "oor/recognizer.hpp"

namespace oor {

/// Direction of every chord, given by its target endpoint.
struct ChordOrientation {
  std::map<Edge, Vertex> direction;

  bool operator==(const ChordOrientation&) const = default;
};

struct OrientationCheck {
  bool valid = true;
  /// On failure: the vertex whose incoming chords are illegal, and those chords.
  std::optional<Vertex> vertex;
  std::vector<Edge> incoming;
  std::string reason;

  explicit operator bool() const { return valid; }
};

/// Outside-obstacle orientation test: every vertex has in-degree at most two,
/// and two incoming chords at a vertex bound a common inner face. Throws
/// InputError when the orientation's domain is not the chord set.
OrientationCheck validate_orientation(const InnerChordalGraph& ic, const ChordOrientation& o);

/// Boolean table of one tree node, indexed by the direction of its parent
/// chord {u, v} (u < v; 0 = towards u, 1 = towards v) and by the flags
/// "u (resp. v) has incoming chords inside the subtree other than the parent
/// chord".
struct DPTable {
  int node = 0;
  int parent_edge = -1;  ///< index into ConstructionTree::edges, -1 at the root
  std::array<bool, 8> entry{};

  static constexpr int index(int dir, int du, int dv) { return dir * 4 + du * 2 + dv; }
  bool at(int dir, int du, int dv) const { return entry[index(dir, du, dv)]; }
};

struct DPResult {
  int root = 0;
  std::vector<DPTable> tables;  ///< one per node
  std::optional<ChordOrientation> orientation;
};

/// Root used by solve_dp: the unique K4 node of tree degree 3 if there is
/// exactly one, otherwise node 0.
int default_dp_root(const ConstructionTree& t);

/// Bottom-up dynamic program over the construction tree. Returns a witness
/// orientation iff an outside-obstacle orientation exists.
std::optional<ChordOrientation> solve_dp(const ConstructionTree& t);
DPResult solve_dp_tables(const ConstructionTree& t, std::optional<int> root = std::nullopt);

/// Greedy orientation of a biconnected chordal outerplanar graph: repeatedly
/// direct the remaining edges of a degree-2 vertex towards it and delete it.
/// Throws InputError if the graph has inner vertices.
ChordOrientation greedy_outerplanar(const InnerChordalGraph& ic);

/// Exhaustive search over all 2^#chords orientations. Throws InputError when
/// the chord count exceeds max_chords.
bool enumerate_exists(const InnerChordalGraph& ic, int max_chords = 20);
bool enumerate_exists(const ConstructionTree& t, int max_chords = 20);
/// First valid orientation in enumeration order (same bound).
std::optional<ChordOrientation> enumerate_witness(const InnerChordalGraph& ic, int max_chords = 20);
/// Number of valid orientations (same bound).
std::uint64_t enumerate_count(const InnerChordalGraph& ic, int max_chords = 20);

/// At most one K4 node has all three outer edges as chords.
bool decide_corollary2(const ConstructionTree& t);

}  // namespace oor
