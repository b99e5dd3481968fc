#include "oor/orientation.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace oor {

namespace {

std::uint64_t triple_key(Vertex a, Vertex b, Vertex c) {
  std::array<Vertex, 3> t{a, b, c};
  std::sort(t.begin(), t.end());
  return (static_cast<std::uint64_t>(t[0]) << 42) ^ (static_cast<std::uint64_t>(t[1]) << 21) ^
         static_cast<std::uint64_t>(t[2]);
}

std::unordered_set<std::uint64_t> inner_face_triangles(const InnerChordalGraph& ic) {
  std::unordered_set<std::uint64_t> out;
  for (const Face& f : compute_faces(ic.embedded)) {
    if (f.is_outer || f.boundary.size() != 3) continue;
    out.insert(triple_key(f.boundary[0].tail, f.boundary[1].tail, f.boundary[2].tail));
  }
  return out;
}

OrientationCheck check_with_faces(const InnerChordalGraph& ic, const ChordOrientation& o,
                                  const std::unordered_set<std::uint64_t>& faces) {
  if (o.direction.size() != ic.chords.size()) throw InputError("orientation domain does not match the chord set");
  std::unordered_map<Vertex, std::vector<Edge>> incoming;
  for (const Edge& c : ic.chords) {
    auto it = o.direction.find(c);
    if (it == o.direction.end()) throw InputError("orientation misses chord", {c.u, c.v});
    if (!c.has(it->second)) throw InputError("chord target is not an endpoint", {c.u, c.v});
    incoming[it->second].push_back(c);
  }
  std::vector<Vertex> targets;
  for (const auto& [v, es] : incoming) targets.push_back(v);
  std::sort(targets.begin(), targets.end());
  for (Vertex v : targets) {
    auto& es = incoming[v];
    std::sort(es.begin(), es.end());
    if (es.size() > 2) {
      std::ostringstream os;
      os << "vertex " << v << " has in-degree " << es.size();
      return OrientationCheck{false, v, es, os.str()};
    }
    if (es.size() == 2 && !faces.count(triple_key(v, es[0].other(v), es[1].other(v)))) {
      std::ostringstream os;
      os << "incoming chords at vertex " << v << " do not share a face";
      return OrientationCheck{false, v, es, os.str()};
    }
  }
  return OrientationCheck{};
}

}  // namespace

OrientationCheck validate_orientation(const InnerChordalGraph& ic, const ChordOrientation& o) {
  return check_with_faces(ic, o, inner_face_triangles(ic));
}

int default_dp_root(const ConstructionTree& t) {
  int found = -1, count = 0;
  auto inc = t.incidence();
  for (std::size_t i = 0; i < t.nodes.size(); ++i) {
    if (t.nodes[i].kind == NodeKind::K4 && inc[i].size() == 3) {
      ++count;
      if (found < 0) found = static_cast<int>(i);
    }
  }
  return count == 1 ? found : 0;
}

bool decide_corollary2(const ConstructionTree& t) {
  auto inc = t.incidence();
  int count = 0;
  for (std::size_t i = 0; i < t.nodes.size(); ++i)
    if (t.nodes[i].kind == NodeKind::K4 && inc[i].size() == 3) ++count;
  return count <= 1;
}

namespace {

using Choice = std::array<std::int8_t, 3>;

struct ChildRef {
  int node;
  int edge;
  Edge chord;
};

// Evaluates one combination of child entries at node tau. Returns false if
// some triangle vertex of tau receives an illegal set of incoming chords;
// otherwise writes the parent flags.
bool combine(const TreeNode& tau, const std::optional<Edge>& parent, int parent_dir,
             const std::vector<ChildRef>& children, const Choice& choice, int& du, int& dv) {
  struct Slot {
    Vertex v;
    int visible = 0;
    int deep = 0;
    int deep_child = -1;
    int visible_from[3] = {-2, -2, -2};  // -1 parent, else child index
  };
  std::array<Slot, 3> slots;
  for (int i = 0; i < 3; ++i) slots[i].v = tau.triangle[i];
  auto slot_of = [&](Vertex x) -> Slot& {
    return slots[x == slots[0].v ? 0 : (x == slots[1].v ? 1 : 2)];
  };
  auto add_visible = [&](Vertex x, int source) {
    Slot& s = slot_of(x);
    s.visible_from[s.visible++] = source;
  };
  if (parent) add_visible(parent_dir == 0 ? parent->u : parent->v, -1);
  for (std::size_t i = 0; i < children.size(); ++i) {
    int idx = choice[i];
    int dir = idx / 4, fu = (idx / 2) % 2, fv = idx % 2;
    const Edge& c = children[i].chord;
    add_visible(dir == 0 ? c.u : c.v, static_cast<int>(i));
    if (fu) {
      Slot& s = slot_of(c.u);
      ++s.deep;
      s.deep_child = static_cast<int>(i);
    }
    if (fv) {
      Slot& s = slot_of(c.v);
      ++s.deep;
      s.deep_child = static_cast<int>(i);
    }
  }
  for (const Slot& s : slots) {
    if (s.deep > 0) {
      // Chords deep inside a child subtree only share faces with that
      // child's own chord, which the child entry already certified.
      if (s.deep > 1) return false;
      for (int k = 0; k < s.visible; ++k)
        if (s.visible_from[k] != s.deep_child) return false;
    } else {
      if (s.visible > 2) return false;
      if (s.visible == 2 && tau.kind != NodeKind::K3) return false;
    }
  }
  du = dv = 0;
  if (parent) {
    for (std::size_t i = 0; i < children.size(); ++i) {
      int idx = choice[i];
      int dir = idx / 4, fu = (idx / 2) % 2, fv = idx % 2;
      const Edge& c = children[i].chord;
      Vertex target = dir == 0 ? c.u : c.v;
      auto touches = [&](Vertex x) {
        return target == x || (fu && c.u == x) || (fv && c.v == x);
      };
      if (touches(parent->u)) du = 1;
      if (touches(parent->v)) dv = 1;
    }
  }
  return true;
}

// Builds the map in one sequential pass.
ChordOrientation from_sorted(std::vector<std::pair<Edge, Vertex>> picked) {
  std::sort(picked.begin(), picked.end());
  ChordOrientation o;
  for (const auto& [e, v] : picked) o.direction.emplace_hint(o.direction.end(), e, v);
  return o;
}

// Feasible table indices of each child; a node has at most three children.
struct ChildOptions {
  std::array<std::array<std::int8_t, 8>, 3> idx{};
  std::array<std::size_t, 3> size{};
  std::size_t k = 0;
};

template <class F>
void for_each_choice(const ChildOptions& options, F&& f) {
  const std::size_t k = options.k;
  for (std::size_t i = 0; i < k; ++i)
    if (options.size[i] == 0) return;
  Choice choice{0, 0, 0};
  std::array<std::size_t, 3> pos{0, 0, 0};
  while (true) {
    for (std::size_t i = 0; i < k; ++i) choice[i] = options.idx[i][pos[i]];
    if (f(choice)) return;
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (++pos[i] < options.size[i]) break;
      pos[i] = 0;
      if (i == 0) return;
    }
    if (k == 0) return;
  }
}

}  // namespace

DPResult solve_dp_tables(const ConstructionTree& t, std::optional<int> root_opt) {
  DPResult result;
  const int count = static_cast<int>(t.nodes.size());
  result.tables.resize(count);
  if (count == 0) return result;
  const int root = root_opt ? *root_opt : default_dp_root(t);
  result.root = root;
  auto inc = t.incidence();

  std::vector<int> order{root};
  std::vector<int> parent_edge(count, -1);
  std::vector<char> seen(count, 0);
  seen[root] = 1;
  for (std::size_t i = 0; i < order.size(); ++i) {
    int node = order[i];
    for (int ei : inc[node]) {
      int other = t.edges[ei].a == node ? t.edges[ei].b : t.edges[ei].a;
      if (seen[other]) continue;
      seen[other] = 1;
      parent_edge[other] = ei;
      order.push_back(other);
    }
  }

  std::vector<std::vector<ChildRef>> children(count);
  for (int node : order) {
    for (int ei : inc[node]) {
      if (ei == parent_edge[node]) continue;
      int other = t.edges[ei].a == node ? t.edges[ei].b : t.edges[ei].a;
      children[node].push_back({other, ei, t.edges[ei].chord});
    }
  }

  std::vector<std::array<Choice, 8>> back(count);
  Choice root_choice{};
  bool root_ok = false;

  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int node = *it;
    DPTable& table = result.tables[node];
    table.node = node;
    table.parent_edge = parent_edge[node];
    const TreeNode& tau = t.nodes[node];
    if (children[node].size() > 3) throw std::logic_error("construction tree node with more than three children");
    ChildOptions options;
    for (const ChildRef& c : children[node]) {
      for (int idx = 0; idx < 8; ++idx)
        if (result.tables[c.node].entry[idx]) options.idx[options.k][options.size[options.k]++] = static_cast<std::int8_t>(idx);
      ++options.k;
    }
    if (node == root) {
      for_each_choice(options, [&](const Choice& choice) {
        int du = 0, dv = 0;
        if (!combine(tau, std::nullopt, 0, children[node], choice, du, dv)) return false;
        root_choice = choice;
        root_ok = true;
        return true;
      });
      continue;
    }
    std::optional<Edge> parent = t.edges[parent_edge[node]].chord;
    for (int dir = 0; dir < 2; ++dir) {
      for_each_choice(options, [&](const Choice& choice) {
        int du = 0, dv = 0;
        if (!combine(tau, parent, dir, children[node], choice, du, dv)) return false;
        int idx = DPTable::index(dir, du, dv);
        if (!table.entry[idx]) {
          table.entry[idx] = true;
          back[node][idx] = choice;
        }
        return false;
      });
    }
  }

  if (!root_ok) return result;
  std::vector<std::pair<Edge, Vertex>> picked;
  picked.reserve(t.edges.size());
  std::vector<std::pair<int, Choice>> stack{{root, root_choice}};
  while (!stack.empty()) {
    auto [node, choice] = stack.back();
    stack.pop_back();
    for (std::size_t i = 0; i < children[node].size(); ++i) {
      const ChildRef& c = children[node][i];
      int idx = choice[i];
      picked.emplace_back(c.chord, (idx / 4 == 0) ? c.chord.u : c.chord.v);
      stack.emplace_back(c.node, back[c.node][idx]);
    }
  }
  result.orientation = from_sorted(std::move(picked));
  return result;
}

std::optional<ChordOrientation> solve_dp(const ConstructionTree& t) { return solve_dp_tables(t).orientation; }

ChordOrientation greedy_outerplanar(const InnerChordalGraph& ic) {
  if (!ic.inner_vertices.empty()) throw InputError("greedy_outerplanar requires a graph without K4 nodes");
  const Graph& g = ic.graph();
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> degree(n);
  std::vector<char> alive(n, 1);
  std::deque<Vertex> queue;
  for (std::size_t v = 0; v < n; ++v) {
    degree[v] = g.degree(static_cast<Vertex>(v));
    if (degree[v] <= 2) queue.push_back(static_cast<Vertex>(v));
  }
  // tail of each edge in peeling order, indexed like g.edges()
  std::vector<Vertex> peeled_from(g.edge_count(), -1);
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    if (!alive[v]) continue;
    alive[v] = 0;
    for (Vertex w : g.neighbors(v)) {
      if (!alive[w]) continue;
      peeled_from[g.edge_index(v, w)] = v;
      if (--degree[w] <= 2) queue.push_back(w);
    }
  }
  std::vector<std::pair<Edge, Vertex>> picked;
  picked.reserve(ic.chords.size());
  for (const Edge& c : ic.chords) picked.emplace_back(c, peeled_from[g.edge_index(c.u, c.v)]);
  return from_sorted(std::move(picked));
}

namespace {

struct Enumerator {
  std::vector<std::pair<int, int>> ends;  // local vertex ids per chord
  std::unordered_set<std::uint64_t> faces;
  std::vector<Vertex> local_to_global;

  Enumerator(const InnerChordalGraph& ic, int max_chords) {
    if (static_cast<int>(ic.chords.size()) > max_chords) {
      std::ostringstream os;
      os << "exhaustive orientation search limited to " << max_chords << " chords, graph has " << ic.chords.size();
      throw InputError(os.str());
    }
    std::unordered_map<Vertex, int> local;
    auto id = [&](Vertex v) {
      auto [it, inserted] = local.emplace(v, static_cast<int>(local_to_global.size()));
      if (inserted) local_to_global.push_back(v);
      return it->second;
    };
    for (const Edge& c : ic.chords) ends.emplace_back(id(c.u), id(c.v));
    faces = inner_face_triangles(ic);
  }

  template <class F>
  void run(F&& on_valid) const {
    const std::size_t k = ends.size();
    const std::size_t L = local_to_global.size();
    std::vector<int> count(L), first(L), second(L);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
      std::fill(count.begin(), count.end(), 0);
      bool ok = true;
      for (std::size_t i = 0; i < k && ok; ++i) {
        auto [a, b] = ends[i];
        int target = (mask >> i) & 1 ? b : a;
        int source = target == a ? b : a;
        int c = count[target]++;
        if (c == 0) first[target] = source;
        else if (c == 1) second[target] = source;
        else ok = false;
      }
      for (std::size_t x = 0; x < L && ok; ++x) {
        if (count[x] == 2 &&
            !faces.count(triple_key(local_to_global[x], local_to_global[first[x]], local_to_global[second[x]])))
          ok = false;
      }
      if (ok && on_valid(mask)) return;
    }
  }
};

}  // namespace

bool enumerate_exists(const InnerChordalGraph& ic, int max_chords) {
  Enumerator e(ic, max_chords);
  bool found = false;
  e.run([&](std::uint64_t) {
    found = true;
    return true;
  });
  return found;
}

std::optional<ChordOrientation> enumerate_witness(const InnerChordalGraph& ic, int max_chords) {
  Enumerator e(ic, max_chords);
  std::optional<ChordOrientation> out;
  e.run([&](std::uint64_t mask) {
    ChordOrientation o;
    for (std::size_t i = 0; i < ic.chords.size(); ++i)
      o.direction[ic.chords[i]] = (mask >> i) & 1 ? ic.chords[i].v : ic.chords[i].u;
    out = std::move(o);
    return true;
  });
  return out;
}

std::uint64_t enumerate_count(const InnerChordalGraph& ic, int max_chords) {
  Enumerator e(ic, max_chords);
  std::uint64_t n = 0;
  e.run([&](std::uint64_t) {
    ++n;
    return false;
  });
  return n;
}

bool enumerate_exists(const ConstructionTree& t, int max_chords) {
  if (static_cast<int>(t.edges.size()) > max_chords) {
    std::ostringstream os;
    os << "exhaustive orientation search limited to " << max_chords << " chords, tree has " << t.edges.size();
    throw InputError(os.str());
  }
  auto r = recognize(merge(t));
  if (auto* reason = std::get_if<RejectReason>(&r))
    throw InputError("construction tree does not merge to an inner-chordal graph: " + reason->detail);
  return enumerate_exists(std::get<InnerChordalGraph>(r), max_chords);
}

}  // namespace oor
