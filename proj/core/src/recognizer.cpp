#include "oor/recognizer.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace oor {

std::string_view to_string(RejectKind kind) {
  switch (kind) {
    case RejectKind::not_biconnected: return "not_biconnected";
    case RejectKind::not_planar_inner_chordal: return "not_planar_inner_chordal";
    case RejectKind::inner_degree_violation: return "inner_degree_violation";
    case RejectKind::chordless_cycle: return "chordless_cycle";
    case RejectKind::not_maximal_outerplanar_core: return "not_maximal_outerplanar_core";
  }
  return "unknown";
}

std::vector<Vertex> TreeNode::vertices() const {
  std::vector<Vertex> out(triangle.begin(), triangle.end());
  if (inner) out.push_back(*inner);
  return out;
}

bool TreeNode::contains(Vertex v) const {
  return triangle[0] == v || triangle[1] == v || triangle[2] == v || (inner && *inner == v);
}

std::vector<std::vector<int>> ConstructionTree::incidence() const {
  std::vector<std::vector<int>> inc(nodes.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    inc[edges[i].a].push_back(static_cast<int>(i));
    inc[edges[i].b].push_back(static_cast<int>(i));
  }
  return inc;
}

int ConstructionTree::tree_degree(int node) const {
  int d = 0;
  for (const TreeEdge& e : edges) d += (e.a == node) + (e.b == node);
  return d;
}

namespace {

RejectReason reject(RejectKind kind, std::vector<Vertex> witness, std::string detail) {
  return RejectReason{kind, std::move(witness), std::move(detail)};
}

std::array<Vertex, 3> sorted3(Vertex a, Vertex b, Vertex c) {
  std::array<Vertex, 3> t{a, b, c};
  std::sort(t.begin(), t.end());
  return t;
}

// Canonical orientation: start at the smallest vertex, continue towards its
// smaller cycle neighbor.
std::vector<Vertex> canonical_cycle(std::vector<Vertex> cycle) {
  auto it = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), it, cycle.end());
  if (cycle.size() > 2 && cycle.back() < cycle[1]) std::reverse(cycle.begin() + 1, cycle.end());
  return cycle;
}

}  // namespace

std::vector<Vertex> find_chordless_cycle(const Graph& g) {
  const std::size_t n = g.vertex_count();
  constexpr std::size_t kSearchBudget = 20000;
  std::size_t searches = 0;
  std::vector<int> mark(n, -1);
  std::vector<Vertex> parent(n, -1);
  int stamp = 0;
  for (std::size_t vi = 0; vi < n; ++vi) {
    Vertex v = static_cast<Vertex>(vi);
    auto nb = g.neighbors(v);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        Vertex x = nb[i], z = nb[j];
        if (g.has_edge(x, z)) continue;
        if (++searches > kSearchBudget) return {};
        // BFS x -> z avoiding v and its other neighbors; a shortest such path
        // is induced, and v sees only its endpoints.
        ++stamp;
        mark[v] = stamp;
        for (Vertex w : nb)
          if (w != x && w != z) mark[w] = stamp;
        std::deque<Vertex> queue{x};
        mark[x] = stamp;
        parent[x] = -1;
        bool found = false;
        while (!queue.empty() && !found) {
          Vertex a = queue.front();
          queue.pop_front();
          for (Vertex b : g.neighbors(a)) {
            if (mark[b] == stamp) continue;
            mark[b] = stamp;
            parent[b] = a;
            if (b == z) {
              found = true;
              break;
            }
            queue.push_back(b);
          }
        }
        if (!found) continue;
        std::vector<Vertex> cycle{v};
        std::vector<Vertex> path;
        for (Vertex a = z; a != -1; a = parent[a]) path.push_back(a);
        std::reverse(path.begin(), path.end());
        cycle.insert(cycle.end(), path.begin(), path.end());
        return cycle;
      }
    }
  }
  return {};
}

Recognition<PeelResult> peel_inner_vertices(const Graph& g) {
  const std::size_t n = g.vertex_count();
  const long long expected = static_cast<long long>(g.edge_count()) - 2LL * static_cast<long long>(n) + 3;
  if (expected < 0) {
    auto cycle = find_chordless_cycle(g);
    std::ostringstream os;
    os << "too few edges for a triangulated outerplanar core (|E| = " << g.edge_count() << ", need at least "
       << (2 * n - 3) << ")";
    if (cycle.empty()) return reject(RejectKind::not_maximal_outerplanar_core, {}, os.str());
    return reject(RejectKind::chordless_cycle, std::move(cycle), os.str());
  }

  // Candidates are degree-3 vertices with a triangular neighborhood. They
  // group by their closed neighborhood (a 4-clique); members of a group are
  // twins, so any one of them can be the inner vertex.
  std::map<std::array<Vertex, 4>, std::vector<Vertex>> groups;
  for (std::size_t vi = 0; vi < n; ++vi) {
    Vertex v = static_cast<Vertex>(vi);
    if (g.degree(v) != 3) continue;
    auto nb = g.neighbors(v);
    if (!g.has_edge(nb[0], nb[1]) || !g.has_edge(nb[1], nb[2]) || !g.has_edge(nb[0], nb[2])) continue;
    std::array<Vertex, 4> key{v, nb[0], nb[1], nb[2]};
    std::sort(key.begin(), key.end());
    groups[key].push_back(v);
  }

  if (static_cast<long long>(groups.size()) != expected) {
    std::ostringstream os;
    os << "edge count requires " << expected << " inner vertices of degree 3 with triangular neighborhood, found "
       << groups.size() << " such 4-cliques";
    std::vector<Vertex> witness;
    if (groups.empty()) {
      // a vertex of minimum degree: it cannot be inner and its degree shows why
      Vertex best = 0;
      for (std::size_t v = 1; v < n; ++v)
        if (g.degree(static_cast<Vertex>(v)) < g.degree(best)) best = static_cast<Vertex>(v);
      if (n > 0) witness.push_back(best);
    } else {
      for (const auto& [key, members] : groups) witness.push_back(members.front());
    }
    return reject(RejectKind::inner_degree_violation, std::move(witness), os.str());
  }

  PeelResult result;
  std::map<std::array<Vertex, 3>, Vertex> triangle_owner;
  for (const auto& [key, members] : groups) {
    Vertex v = *std::min_element(members.begin(), members.end());
    auto nb = g.neighbors(v);
    std::array<Vertex, 3> tri{nb[0], nb[1], nb[2]};
    auto [it, inserted] = triangle_owner.emplace(tri, v);
    if (!inserted) {
      std::ostringstream os;
      os << "vertices " << it->second << " and " << v << " would both lie inside triangle (" << tri[0] << ","
         << tri[1] << "," << tri[2] << ")";
      return reject(RejectKind::not_planar_inner_chordal, {it->second, v, tri[0], tri[1], tri[2]}, os.str());
    }
    result.removed.push_back(v);
  }
  std::sort(result.removed.begin(), result.removed.end());
  for (Vertex v : result.removed) {
    auto nb = g.neighbors(v);
    result.marked.push_back({nb[0], nb[1], nb[2]});
  }
  std::vector<char> gone(n, 0);
  for (Vertex v : result.removed) gone[v] = 1;
  std::vector<Edge> kept;
  kept.reserve(g.edge_count());
  for (const Edge& e : g.edges())
    if (!gone[e.u] && !gone[e.v]) kept.push_back(e);
  result.core = build_graph(n, kept);
  return result;
}

Recognition<MaximalOuterplanar> recognize_maximal_outerplanar(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<Vertex> active;
  for (std::size_t v = 0; v < n; ++v)
    if (g.degree(static_cast<Vertex>(v)) > 0) active.push_back(static_cast<Vertex>(v));
  const std::size_t count = active.size();
  if (count < 3) return reject(RejectKind::not_maximal_outerplanar_core, active, "fewer than 3 vertices");
  if (g.edge_count() != 2 * count - 3) {
    std::ostringstream os;
    os << "maximal outerplanar graphs on " << count << " vertices have " << (2 * count - 3) << " edges, got "
       << g.edge_count();
    return reject(RejectKind::not_maximal_outerplanar_core, {}, os.str());
  }

  struct EdgeInfo {
    int triangles = 0;
    int tri[2] = {-1, -1};
  };
  std::vector<EdgeInfo> info(g.edge_count());

  std::vector<std::array<Vertex, 3>> triangles;
  triangles.reserve(count - 2);
  auto add_triangle = [&](Vertex a, Vertex b, Vertex c) -> bool {
    int id = static_cast<int>(triangles.size());
    triangles.push_back(sorted3(a, b, c));
    for (auto [x, y] : {std::pair{a, b}, std::pair{b, c}, std::pair{a, c}}) {
      EdgeInfo& ei = info[g.edge_index(x, y)];
      if (ei.triangles == 2) return false;
      ei.tri[ei.triangles++] = id;
    }
    return true;
  };

  std::vector<std::size_t> degree(n);
  std::vector<char> alive(n, 0);
  std::deque<Vertex> queue;
  for (Vertex v : active) {
    degree[v] = g.degree(v);
    alive[v] = 1;
    if (degree[v] == 2) queue.push_back(v);
  }
  std::size_t remaining = count;
  while (remaining > 3) {
    while (!queue.empty() && (!alive[queue.front()] || degree[queue.front()] != 2)) queue.pop_front();
    if (queue.empty()) {
      std::vector<Vertex> rest;
      for (Vertex v : active)
        if (alive[v]) rest.push_back(v);
      return reject(RejectKind::not_maximal_outerplanar_core, std::move(rest),
                    "ear peeling stalled: no vertex of degree 2 remains");
    }
    Vertex v = queue.front();
    queue.pop_front();
    Vertex ends[2];
    int k = 0;
    for (Vertex w : g.neighbors(v))
      if (alive[w]) ends[k++] = w;
    if (!g.has_edge(ends[0], ends[1])) {
      return reject(RejectKind::not_maximal_outerplanar_core, {ends[0], v, ends[1]},
                    "degree-2 vertex whose neighbors are not adjacent");
    }
    if (!add_triangle(v, ends[0], ends[1]))
      return reject(RejectKind::not_maximal_outerplanar_core, {v, ends[0], ends[1]},
                    "an edge lies on more than two triangles");
    alive[v] = 0;
    --remaining;
    for (Vertex w : ends) {
      if (--degree[w] == 2) queue.push_back(w);
    }
  }
  std::vector<Vertex> last;
  for (Vertex v : active)
    if (alive[v]) last.push_back(v);
  if (!g.has_edge(last[0], last[1]) || !g.has_edge(last[1], last[2]) || !g.has_edge(last[0], last[2]))
    return reject(RejectKind::not_maximal_outerplanar_core, last, "ear peeling did not end in a triangle");
  if (!add_triangle(last[0], last[1], last[2]))
    return reject(RejectKind::not_maximal_outerplanar_core, last, "an edge lies on more than two triangles");

  // Outer edges lie on exactly one triangle and must form a Hamiltonian cycle.
  std::vector<std::vector<Vertex>> outer_adj(n);
  for (std::size_t id = 0; id < g.edge_count(); ++id) {
    const Edge& e = g.edges()[id];
    const EdgeInfo& ei = info[id];
    if (ei.triangles == 1) {
      outer_adj[e.u].push_back(e.v);
      outer_adj[e.v].push_back(e.u);
    }
  }
  for (Vertex v : active)
    if (outer_adj[v].size() != 2)
      return reject(RejectKind::not_maximal_outerplanar_core, {v}, "outer edges do not form a cycle");
  std::vector<Vertex> cycle{active.front()};
  Vertex prev = -1, cur = active.front();
  while (true) {
    Vertex next = outer_adj[cur][0] != prev ? outer_adj[cur][0] : outer_adj[cur][1];
    if (next == active.front()) break;
    if (cycle.size() > count)
      return reject(RejectKind::not_maximal_outerplanar_core, {}, "outer edges do not form a cycle");
    cycle.push_back(next);
    prev = cur;
    cur = next;
  }
  if (cycle.size() != count)
    return reject(RejectKind::not_maximal_outerplanar_core, cycle, "outer cycle is not Hamiltonian");

  MaximalOuterplanar out;
  out.outer_cycle = canonical_cycle(std::move(cycle));
  std::vector<int> order(triangles.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return triangles[a] < triangles[b]; });
  std::vector<int> rank(triangles.size());
  for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = static_cast<int>(i);
  for (int idx : order) out.triangles.push_back(triangles[idx]);
  for (std::size_t id = 0; id < g.edge_count(); ++id) {
    const Edge& e = g.edges()[id];
    const EdgeInfo& ei = info[id];
    if (ei.triangles == 2) {
      int a = rank[ei.tri[0]], b = rank[ei.tri[1]];
      out.dual_edges.push_back({std::min(a, b), std::max(a, b), e});
    }
  }
  std::sort(out.dual_edges.begin(), out.dual_edges.end(),
            [](const auto& x, const auto& y) { return std::tie(x.a, x.b) < std::tie(y.a, y.b); });
  return out;
}

namespace {

InnerChordalGraph assemble(const Graph& g, const PeelResult& peel, const MaximalOuterplanar& mop) {
  const std::size_t n = g.vertex_count();
  const auto& cycle = mop.outer_cycle;
  const long long size = static_cast<long long>(cycle.size());
  std::vector<long long> pos(n, -1);
  for (std::size_t i = 0; i < cycle.size(); ++i) pos[cycle[i]] = static_cast<long long>(i);
  std::vector<Vertex> inner_of_owner(n, -1);
  std::vector<std::vector<Vertex>> rotation(n);

  // Outer vertices sit in convex position in cycle order; a neighbor's key is
  // its counterclockwise offset along the cycle. An inner vertex goes between
  // the two other corners of its triangle.
  std::vector<std::pair<long long, Vertex>> keyed;
  std::vector<char> is_inner(n, 0);
  for (Vertex m : peel.removed) is_inner[m] = 1;
  for (Vertex c : cycle) {
    keyed.clear();
    for (Vertex w : g.neighbors(c)) {
      if (!is_inner[w]) {
        keyed.emplace_back(2 * ((pos[w] - pos[c] + size) % size), w);
      } else {
        long long lo = size;
        for (Vertex t : g.neighbors(w))
          if (t != c) lo = std::min(lo, (pos[t] - pos[c] + size) % size);
        keyed.emplace_back(2 * lo + 1, w);
      }
    }
    std::sort(keyed.begin(), keyed.end());
    for (auto& [k, w] : keyed) rotation[c].push_back(w);
  }
  for (Vertex m : peel.removed) {
    std::vector<Vertex> nb(g.neighbors(m).begin(), g.neighbors(m).end());
    std::sort(nb.begin(), nb.end(), [&](Vertex a, Vertex b) { return pos[a] < pos[b]; });
    rotation[m] = nb;
  }

  InnerChordalGraph ic;
  ic.embedded = make_embedded(g, std::move(rotation), Dart{cycle[1], cycle[0]});
  ic.inner_vertices = peel.removed;
  ic.outer_cycle = cycle;
  for (const auto& de : mop.dual_edges) ic.chords.push_back(de.chord);
  std::sort(ic.chords.begin(), ic.chords.end());
  return ic;
}

}  // namespace

Recognition<InnerChordalGraph> recognize(const Graph& g) {
  if (g.vertex_count() < 3) return reject(RejectKind::not_biconnected, {}, "fewer than 3 vertices");
  if (!is_connected(g)) return reject(RejectKind::not_biconnected, {}, "graph is disconnected");
  auto cuts = cut_vertices(g);
  if (!cuts.empty()) return reject(RejectKind::not_biconnected, {cuts.front()}, "cut vertex");

  auto peeled = peel_inner_vertices(g);
  if (auto* r = std::get_if<RejectReason>(&peeled)) return *r;
  const PeelResult& peel = std::get<PeelResult>(peeled);

  auto mop_result = recognize_maximal_outerplanar(peel.core);
  if (auto* r = std::get_if<RejectReason>(&mop_result)) {
    auto cycle = find_chordless_cycle(g);
    if (!cycle.empty()) return reject(RejectKind::chordless_cycle, std::move(cycle), r->detail);
    return *r;
  }
  const MaximalOuterplanar& mop = std::get<MaximalOuterplanar>(mop_result);
  if (mop.outer_cycle.size() + peel.removed.size() != g.vertex_count())
    return reject(RejectKind::not_maximal_outerplanar_core, {}, "core does not span all outer vertices");

  InnerChordalGraph ic = assemble(g, peel, mop);
  check_inner_chordal(ic);
  return ic;
}

void check_inner_chordal(const InnerChordalGraph& ic) {
  const Graph& g = ic.graph();
  auto fail = [](const std::string& msg) { throw std::logic_error("inner-chordal invariant violated: " + msg); };
  auto faces = compute_faces(ic.embedded);
  std::vector<char> on_outer(g.vertex_count(), 0);
  std::vector<Vertex> outer_next(g.vertex_count(), -1);
  int outer_count = 0;
  for (const Face& f : faces) {
    if (f.is_outer) {
      ++outer_count;
      for (const Dart& d : f.boundary) {
        on_outer[d.tail] = 1;
        outer_next[d.tail] = d.head;
      }
      if (f.boundary.size() != ic.outer_cycle.size()) fail("outer face is not the outer cycle");
    } else if (f.boundary.size() != 3) {
      fail("inner face of length " + std::to_string(f.boundary.size()));
    }
  }
  if (outer_count != 1) fail("expected exactly one outer face");
  std::vector<char> inner(g.vertex_count(), 0);
  for (Vertex m : ic.inner_vertices) inner[m] = 1;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (static_cast<bool>(inner[v]) == static_cast<bool>(on_outer[v]))
      fail("vertex " + std::to_string(v) + " inner/outer status mismatch");
    if (inner[v]) {
      if (g.degree(static_cast<Vertex>(v)) != 3) fail("inner vertex " + std::to_string(v) + " has degree != 3");
      for (Vertex w : g.neighbors(static_cast<Vertex>(v)))
        if (inner[w]) fail("adjacent inner vertices");
    }
  }
  std::vector<Edge> chords;
  for (const Edge& e : g.edges())
    if (on_outer[e.u] && on_outer[e.v] && outer_next[e.u] != e.v && outer_next[e.v] != e.u) chords.push_back(e);
  if (chords != ic.chords) fail("chord list mismatch");
}

ConstructionTree build_construction_tree(const InnerChordalGraph& ic) {
  const Graph& g = ic.graph();
  std::vector<char> inner(g.vertex_count(), 0);
  for (Vertex m : ic.inner_vertices) inner[m] = 1;
  std::vector<Edge> kept;
  for (const Edge& e : g.edges())
    if (!inner[e.u] && !inner[e.v]) kept.push_back(e);
  auto mop_result = recognize_maximal_outerplanar(build_graph(g.vertex_count(), kept));
  if (auto* r = std::get_if<RejectReason>(&mop_result))
    throw std::logic_error("construction tree: core is not maximal outerplanar: " + r->detail);
  const auto& mop = std::get<MaximalOuterplanar>(mop_result);

  ConstructionTree t;
  t.vertex_count = g.vertex_count();
  std::map<std::array<Vertex, 3>, int> index;
  for (const auto& tri : mop.triangles) {
    index.emplace(tri, static_cast<int>(t.nodes.size()));
    t.nodes.push_back(TreeNode{NodeKind::K3, tri, std::nullopt});
  }
  for (Vertex m : ic.inner_vertices) {
    auto nb = g.neighbors(m);
    auto it = index.find({nb[0], nb[1], nb[2]});
    if (it == index.end()) throw std::logic_error("inner vertex triangle is not a core face");
    t.nodes[it->second].kind = NodeKind::K4;
    t.nodes[it->second].inner = m;
  }
  for (const auto& de : mop.dual_edges) t.edges.push_back({de.a, de.b, de.chord});
  return t;
}

Graph merge(const ConstructionTree& t) {
  std::set<Edge> edges;
  for (const TreeNode& node : t.nodes) {
    auto vs = node.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j) edges.emplace(vs[i], vs[j]);
  }
  return build_graph(t.vertex_count, std::vector<Edge>(edges.begin(), edges.end()));
}

}  // namespace oor
