#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "oor/drawing.hpp"
#include "oor/generators.hpp"
#include "oor/recognizer.hpp"

namespace oor::test {

inline Graph make(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> edges) {
  std::vector<std::pair<Vertex, Vertex>> list(edges);
  return build_graph(n, list);
}

inline Graph k3() { return make(3, {{0, 1}, {1, 2}, {0, 2}}); }
inline Graph k4() { return make(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }
inline Graph path3() { return make(3, {{0, 1}, {1, 2}}); }
inline Graph bowtie() { return make(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}}); }
/// Quadrilateral a b c d (0 1 2 3) with chord ac.
inline Graph quad_chord() { return make(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}}); }

/// K4 with a triangle glued onto each outer edge.
inline Graph k4_star() { return generate({Family::k4_star, 1, 0}).graph; }

inline Drawing drawing(std::vector<std::pair<long, long>> pts, const Graph& g) {
  Drawing d;
  for (auto [x, y] : pts) d.points.emplace_back(x, y);
  d.graph = g;
  return d;
}

/// a(0,0) b(1,1) c(4,0) d(-2,-1) with chord ac: chord good toward a.
inline Drawing good_quad() { return drawing({{0, 0}, {1, 1}, {4, 0}, {-2, -1}}, quad_chord()); }
/// Unit square with chord ac: chord not good.
inline Drawing unit_square() { return drawing({{0, 0}, {1, 0}, {1, 1}, {0, 1}}, quad_chord()); }

inline const InnerChordalGraph& accepted_ic(const Recognition<InnerChordalGraph>& r) {
  return std::get<InnerChordalGraph>(r);
}

}  // namespace oor::test
