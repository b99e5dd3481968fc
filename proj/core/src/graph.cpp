#include "oor/graph.hpp"

#include <algorithm>
#include <sstream>
#include <stack>

namespace oor {

std::uint64_t edge_key(Vertex a, Vertex b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) | static_cast<std::uint32_t>(b);
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  return edge_index(a, b) != edges_.size();
}

std::size_t Graph::edge_index(Vertex a, Vertex b) const {
  const std::size_t n = vertex_count();
  if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= n || static_cast<std::size_t>(b) >= n || a == b)
    return edges_.size();
  const Edge e(a, b);
  auto first = edges_.begin() + static_cast<std::ptrdiff_t>(edge_begin_[e.u]);
  auto last = edges_.begin() + static_cast<std::ptrdiff_t>(edge_begin_[e.u + 1]);
  auto it = std::lower_bound(first, last, e);
  return it != last && *it == e ? static_cast<std::size_t>(it - edges_.begin()) : edges_.size();
}

Graph build_graph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edge_list) {
  Graph g;
  g.edges_.reserve(edge_list.size());
  for (auto [a, b] : edge_list) {
    if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= n || static_cast<std::size_t>(b) >= n) {
      std::ostringstream os;
      os << "vertex index out of range in edge (" << a << "," << b << ") for n=" << n;
      throw InputError(os.str(), {a, b});
    }
    if (a == b) {
      std::ostringstream os;
      os << "self-loop (" << a << "," << b << ")";
      throw InputError(os.str(), {a, b});
    }
    g.edges_.emplace_back(a, b);
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end());
  if (dup != g.edges_.end()) {
    std::ostringstream os;
    os << "duplicate edge (" << dup->u << "," << dup->v << ")";
    throw InputError(os.str(), {dup->u, dup->v});
  }
  g.offset_.assign(n + 1, 0);
  g.edge_begin_.assign(n + 1, 0);
  for (const Edge& e : g.edges_) {
    ++g.offset_[e.u + 1], ++g.offset_[e.v + 1];
    ++g.edge_begin_[e.u + 1];
  }
  for (std::size_t v = 0; v < n; ++v) {
    g.offset_[v + 1] += g.offset_[v];
    g.edge_begin_[v + 1] += g.edge_begin_[v];
  }
  // with edges sorted, every list comes out sorted: smaller neighbors arrive
  // (as e.v) before any edge with e.u == v
  g.adjacency_.resize(2 * g.edges_.size());
  std::vector<std::size_t> fill(g.offset_.begin(), g.offset_.end() - 1);
  for (const Edge& e : g.edges_) {
    g.adjacency_[fill[e.u]++] = e.v;
    g.adjacency_[fill[e.v]++] = e.u;
  }
  return g;
}

Graph build_graph(std::size_t n, const std::vector<Edge>& edges) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  pairs.reserve(edges.size());
  for (const Edge& e : edges) pairs.emplace_back(e.u, e.v);
  return build_graph(n, pairs);
}

EmbeddedGraph make_embedded(Graph graph, std::vector<std::vector<Vertex>> rotation, Dart outer) {
  if (rotation.size() != graph.vertex_count())
    throw InputError("rotation system size does not match vertex count");
  for (std::size_t v = 0; v < rotation.size(); ++v) {
    std::vector<Vertex> sorted = rotation[v];
    std::sort(sorted.begin(), sorted.end());
    auto nb = graph.neighbors(static_cast<Vertex>(v));
    if (!std::equal(sorted.begin(), sorted.end(), nb.begin(), nb.end())) {
      std::ostringstream os;
      os << "rotation at vertex " << v << " is not a permutation of its neighbors";
      throw InputError(os.str());
    }
  }
  if (!graph.has_edge(outer.tail, outer.head)) throw InputError("outer face dart is not an edge", {outer.tail, outer.head});
  return EmbeddedGraph{std::move(graph), std::move(rotation), outer};
}

std::vector<Vertex> Face::vertices() const {
  std::vector<Vertex> out;
  out.reserve(boundary.size());
  for (const Dart& d : boundary) out.push_back(d.tail);
  return out;
}

namespace {

// Darts are indexed by offset[u] + position of v in the sorted adjacency of u.
struct DartIndex {
  std::vector<std::size_t> offset;
  const Graph* graph;

  explicit DartIndex(const Graph& g) : offset(g.vertex_count() + 1, 0), graph(&g) {
    for (std::size_t v = 0; v < g.vertex_count(); ++v) offset[v + 1] = offset[v] + g.degree(static_cast<Vertex>(v));
  }
  std::size_t size() const { return offset.back(); }
  std::size_t of(Vertex u, Vertex v) const {
    auto nb = graph->neighbors(u);
    return offset[u] + static_cast<std::size_t>(std::lower_bound(nb.begin(), nb.end(), v) - nb.begin());
  }
};

}  // namespace

std::vector<std::vector<Dart>> face_walks(const Graph& graph, const std::vector<std::vector<Vertex>>& rotation) {
  DartIndex index(graph);
  // rotation position of dart (u -> w) inside rotation[u]
  std::vector<std::size_t> rot_pos(index.size());
  for (std::size_t u = 0; u < graph.vertex_count(); ++u) {
    const auto& rot = rotation[u];
    for (std::size_t i = 0; i < rot.size(); ++i) rot_pos[index.of(static_cast<Vertex>(u), rot[i])] = i;
  }
  std::vector<char> used(index.size(), 0);
  std::vector<std::vector<Dart>> walks;
  for (std::size_t u = 0; u < graph.vertex_count(); ++u) {
    for (Vertex v : graph.neighbors(static_cast<Vertex>(u))) {
      std::size_t start = index.of(static_cast<Vertex>(u), v);
      if (used[start]) continue;
      std::vector<Dart> walk;
      Dart d{static_cast<Vertex>(u), v};
      while (true) {
        std::size_t id = index.of(d.tail, d.head);
        if (used[id]) {
          if (id != start) throw InputError("inconsistent rotation system: face walk does not close");
          break;
        }
        used[id] = 1;
        walk.push_back(d);
        const auto& rot = rotation[d.head];
        std::size_t p = rot_pos[index.of(d.head, d.tail)];
        Vertex w = rot[(p + rot.size() - 1) % rot.size()];
        d = Dart{d.head, w};
      }
      auto min_it = std::min_element(walk.begin(), walk.end());
      std::rotate(walk.begin(), min_it, walk.end());
      walks.push_back(std::move(walk));
    }
  }
  return walks;
}

std::vector<Face> compute_faces(const EmbeddedGraph& g) {
  if (g.rotation.size() != g.graph.vertex_count()) throw InputError("rotation system size does not match vertex count");
  if (!is_connected(g.graph)) throw InputError("compute_faces requires a connected graph");
  auto walks = face_walks(g.graph, g.rotation);
  std::size_t non_isolated = 0;
  for (std::size_t v = 0; v < g.graph.vertex_count(); ++v) non_isolated += g.graph.degree(static_cast<Vertex>(v)) > 0;
  long long euler = static_cast<long long>(non_isolated) - static_cast<long long>(g.graph.edge_count()) +
                    static_cast<long long>(walks.size());
  if (g.graph.edge_count() > 0 && euler != 2) {
    std::ostringstream os;
    os << "rotation system is not planar: V - E + F = " << euler;
    throw InputError(os.str());
  }
  std::vector<Face> faces;
  faces.reserve(walks.size());
  bool found_outer = false;
  for (auto& w : walks) {
    Face f;
    f.is_outer = std::find(w.begin(), w.end(), g.outer) != w.end();
    found_outer = found_outer || f.is_outer;
    f.boundary = std::move(w);
    faces.push_back(std::move(f));
  }
  if (!found_outer) throw InputError("outer face dart not found among faces");
  std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) { return a.id() < b.id(); });
  return faces;
}

bool is_connected(const Graph& g) {
  std::size_t n = g.vertex_count();
  if (n == 0) return true;
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == n;
}

namespace {

// Iterative Hopcroft-Tarjan lowpoint DFS. Reports articulation points and
// blocks (as edge lists) of the component containing `root`.
struct LowpointDfs {
  const Graph& g;
  std::vector<int> disc, low;
  std::vector<char> is_cut;
  std::vector<std::vector<Edge>> blocks;
  int timer = 0;

  explicit LowpointDfs(const Graph& graph)
      : g(graph), disc(graph.vertex_count(), -1), low(graph.vertex_count(), 0), is_cut(graph.vertex_count(), 0) {}

  void run(Vertex root) {
    struct Frame {
      Vertex v;
      Vertex parent;
      std::size_t next;
    };
    std::vector<Frame> stack;
    std::vector<Edge> edge_stack;
    int root_children = 0;
    disc[root] = low[root] = timer++;
    stack.push_back({root, -1, 0});
    while (!stack.empty()) {
      Frame& f = stack.back();
      auto nb = g.neighbors(f.v);
      if (f.next < nb.size()) {
        Vertex w = nb[f.next++];
        if (w == f.parent) continue;
        if (disc[w] < 0) {
          edge_stack.emplace_back(f.v, w);
          disc[w] = low[w] = timer++;
          if (f.v == root) ++root_children;
          stack.push_back({w, f.v, 0});
        } else if (disc[w] < disc[f.v]) {
          edge_stack.emplace_back(f.v, w);
          low[f.v] = std::min(low[f.v], disc[w]);
        }
        continue;
      }
      Vertex v = f.v;
      Vertex parent = f.parent;
      stack.pop_back();
      if (parent < 0) continue;
      low[parent] = std::min(low[parent], low[v]);
      if (low[v] >= disc[parent]) {
        if (parent != root) is_cut[parent] = 1;
        std::vector<Edge> block;
        Edge split(parent, v);
        while (!edge_stack.empty()) {
          Edge e = edge_stack.back();
          edge_stack.pop_back();
          block.push_back(e);
          if (e == split) break;
        }
        std::sort(block.begin(), block.end());
        blocks.push_back(std::move(block));
      }
    }
    if (root_children > 1) is_cut[root] = 1;
  }
};

}  // namespace

std::vector<Vertex> cut_vertices(const Graph& g) {
  LowpointDfs dfs(g);
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (dfs.disc[v] < 0) dfs.run(static_cast<Vertex>(v));
  std::vector<Vertex> out;
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (dfs.is_cut[v]) out.push_back(static_cast<Vertex>(v));
  return out;
}

std::vector<std::vector<Edge>> biconnected_components(const Graph& g) {
  LowpointDfs dfs(g);
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (dfs.disc[v] < 0) dfs.run(static_cast<Vertex>(v));
  std::sort(dfs.blocks.begin(), dfs.blocks.end());
  return dfs.blocks;
}

bool is_biconnected(const Graph& g) {
  if (g.vertex_count() < 3 || !is_connected(g)) return false;
  return cut_vertices(g).empty();
}

}  // namespace oor
