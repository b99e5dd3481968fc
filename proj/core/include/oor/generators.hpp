#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "oor/graph.hpp"
#include "oor/recognizer.hpp"

namespace oor {

enum class Family {
  fan,
  random_maximal_outerplanar,
  k4_chain,
  k4_star,
  triple_k4_gadget,
  octahedron,
  random_construction_tree,
};

std::string_view to_string(Family f);
std::optional<Family> parse_family(std::string_view name);
std::vector<Family> all_families();

/// Size meaning per family:
///   fan                         vertex count, 3..10^7
///   random_maximal_outerplanar  vertex count, 3..10^6
///   k4_chain                    number of 4-cliques, 1..10^5
///   k4_star                     triangles on each arm of the central K4, 0..10^5
///   random_construction_tree    tree nodes, 1..10^5
///   triple_k4_gadget, octahedron  ignored
struct InstanceSpec {
  Family family = Family::fan;
  std::int64_t size = 0;
  std::uint64_t seed = 0;
};

struct Instance {
  Graph graph;
  /// Ground truth for families assembled from a construction tree.
  std::optional<ConstructionTree> tree;
};

/// Deterministic per (family, size, seed). Throws InputError for sizes out of
/// range.
Instance generate(const InstanceSpec& spec);

/// Apex 0 joined to the path 1..n-1.
Graph fan_graph(std::size_t n);
Graph octahedron_graph();
Graph cycle_graph(std::size_t n);

}  // namespace oor
