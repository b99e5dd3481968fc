#include "oor/generators.hpp"

#include <algorithm>
#include <array>
#include <random>

namespace oor {

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 7> kNames{{
    {Family::fan, "fan"},
    {Family::random_maximal_outerplanar, "random_maximal_outerplanar"},
    {Family::k4_chain, "k4_chain"},
    {Family::k4_star, "k4_star"},
    {Family::triple_k4_gadget, "triple_k4_gadget"},
    {Family::octahedron, "octahedron"},
    {Family::random_construction_tree, "random_construction_tree"},
}};

// Unbiased and, unlike std::uniform_int_distribution, identical on every
// standard library.
std::uint64_t below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  for (;;) {
    std::uint64_t x = rng();
    if (x < limit) return x % bound;
  }
}

std::vector<Vertex> random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<Vertex> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<Vertex>(i);
  for (std::size_t i = n; i > 1; --i) std::swap(p[i - 1], p[below(rng, i)]);
  return p;
}

void check_size(std::int64_t size, std::int64_t lo, std::int64_t hi, Family f) {
  if (size < lo || size > hi)
    throw InputError("size " + std::to_string(size) + " out of range [" + std::to_string(lo) + ", " +
                     std::to_string(hi) + "] for " + std::string(to_string(f)));
}

// Grows a construction tree by gluing triangles and 4-cliques onto outer
// edges that are not yet chords.
class TreeBuilder {
 public:
  explicit TreeBuilder(NodeKind root) {
    TreeNode node;
    node.kind = root;
    node.triangle = {0, 1, 2};
    n_ = 3;
    if (root == NodeKind::K4) node.inner = n_++;
    nodes_.push_back(node);
    open_ = {{Edge(0, 1), 0}, {Edge(1, 2), 0}, {Edge(0, 2), 0}};
  }

  std::size_t open_count() const { return open_.size(); }

  /// Glues a new node on open edge i; returns the new node's index.
  int attach(std::size_t i, NodeKind kind) {
    auto [e, parent] = open_[i];
    open_[i] = open_.back();
    open_.pop_back();
    TreeNode node;
    node.kind = kind;
    const Vertex s = n_++;
    node.triangle = {e.u, e.v, s};
    if (kind == NodeKind::K4) node.inner = n_++;
    const int id = static_cast<int>(nodes_.size());
    nodes_.push_back(node);
    edges_.push_back({parent, id, e});
    open_.push_back({Edge(e.u, s), id});
    open_.push_back({Edge(e.v, s), id});
    return id;
  }

  std::vector<Edge> open_edges_of(int node) const {
    std::vector<Edge> out;
    for (const auto& [e, owner] : open_)
      if (owner == node) out.push_back(e);
    return out;
  }

  /// Open edge of `node` containing vertex x.
  std::size_t open_of(int node, Vertex x) const {
    for (std::size_t i = 0; i < open_.size(); ++i)
      if (open_[i].second == node && open_[i].first.has(x)) return i;
    throw std::logic_error("no open edge");
  }

  std::size_t open_of(int node, const Edge& e) const {
    for (std::size_t i = 0; i < open_.size(); ++i)
      if (open_[i].second == node && open_[i].first == e) return i;
    throw std::logic_error("no open edge");
  }

  /// Tree in canonical order after renaming vertex v to perm[v].
  ConstructionTree finish(const std::vector<Vertex>& perm) const {
    std::vector<TreeNode> nodes = nodes_;
    for (TreeNode& node : nodes) {
      for (Vertex& v : node.triangle) v = perm[v];
      std::sort(node.triangle.begin(), node.triangle.end());
      if (node.inner) node.inner = perm[*node.inner];
    }
    std::vector<int> order(nodes.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return nodes[a].triangle < nodes[b].triangle; });
    std::vector<int> rank(nodes.size());
    ConstructionTree t;
    t.vertex_count = static_cast<std::size_t>(n_);
    for (std::size_t i = 0; i < order.size(); ++i) {
      rank[order[i]] = static_cast<int>(i);
      t.nodes.push_back(nodes[order[i]]);
    }
    for (const TreeEdge& e : edges_) {
      int a = rank[e.a], b = rank[e.b];
      t.edges.push_back({std::min(a, b), std::max(a, b), Edge(perm[e.chord.u], perm[e.chord.v])});
    }
    std::sort(t.edges.begin(), t.edges.end(),
              [](const TreeEdge& x, const TreeEdge& y) { return std::pair(x.a, x.b) < std::pair(y.a, y.b); });
    return t;
  }

  ConstructionTree finish() const {
    std::vector<Vertex> id(static_cast<std::size_t>(n_));
    for (std::size_t i = 0; i < id.size(); ++i) id[i] = static_cast<Vertex>(i);
    return finish(id);
  }

  std::size_t vertex_count() const { return static_cast<std::size_t>(n_); }

 private:
  Vertex n_ = 0;
  std::vector<TreeNode> nodes_;
  std::vector<TreeEdge> edges_;
  std::vector<std::pair<Edge, int>> open_;
};

Instance from_tree(const ConstructionTree& t) { return {merge(t), t}; }

Instance k4_chain(std::int64_t count) {
  TreeBuilder b(NodeKind::K4);
  int last = 0;
  for (std::int64_t i = 1; i < count; ++i) {
    // alternate sides so the chain zigzags
    const auto open = b.open_edges_of(last);
    last = b.attach(b.open_of(last, open[static_cast<std::size_t>(i) % open.size()]), NodeKind::K4);
  }
  return from_tree(b.finish());
}

Instance k4_star(std::int64_t arm) {
  TreeBuilder b(NodeKind::K4);
  for (Edge e : {Edge(0, 1), Edge(1, 2), Edge(0, 2)}) {
    int last = 0;
    Edge at = e;
    for (std::int64_t i = 0; i < arm; ++i) {
      last = b.attach(b.open_of(last, at), NodeKind::K3);
      at = Edge(i % 2 == 0 ? at.u : at.v, static_cast<Vertex>(b.vertex_count() - 1));
    }
  }
  return from_tree(b.finish());
}

Instance triple_k4_gadget() {
  TreeBuilder b(NodeKind::K4);
  const int left = b.attach(b.open_of(0, Edge(0, 1)), NodeKind::K4);
  const int right = b.attach(b.open_of(0, Edge(1, 2)), NodeKind::K4);
  b.attach(b.open_of(0, Edge(0, 2)), NodeKind::K3);
  for (int side : {left, right})
    for (const Edge& e : b.open_edges_of(side)) b.attach(b.open_of(side, e), NodeKind::K3);
  return from_tree(b.finish());
}

Instance random_tree(std::int64_t nodes, std::mt19937_64& rng) {
  TreeBuilder b(below(rng, 3) == 0 ? NodeKind::K4 : NodeKind::K3);
  for (std::int64_t i = 1; i < nodes; ++i)
    b.attach(below(rng, b.open_count()), below(rng, 3) == 0 ? NodeKind::K4 : NodeKind::K3);
  return from_tree(b.finish(random_permutation(b.vertex_count(), rng)));
}

// Uniform triangulation of a convex n-gon: a uniform binary tree with n-2
// internal nodes (Remy's algorithm) read as the dual tree.
Graph random_maximal_outerplanar(std::size_t n, std::mt19937_64& rng) {
  const std::size_t internal = n - 2;
  std::vector<std::int64_t> left{-1}, right{-1}, parent{-1};
  std::int64_t root = 0;
  for (std::size_t i = 0; i < internal; ++i) {
    const auto x = static_cast<std::int64_t>(below(rng, left.size()));
    const auto y = static_cast<std::int64_t>(left.size()), z = y + 1;
    left.push_back(-1), right.push_back(-1), parent.push_back(parent[x]);
    left.push_back(-1), right.push_back(-1), parent.push_back(y);
    if (parent[x] < 0) {
      root = y;
    } else if (left[parent[x]] == x) {
      left[parent[x]] = y;
    } else {
      right[parent[x]] = y;
    }
    parent[x] = y;
    if (below(rng, 2) == 0) {
      left[y] = x, right[y] = z;
    } else {
      left[y] = z, right[y] = x;
    }
  }

  // leaf counts, children before parents
  std::vector<std::int64_t> order{root}, leaves(left.size(), 1);
  for (std::size_t i = 0; i < order.size(); ++i)
    if (left[order[i]] >= 0) order.push_back(left[order[i]]), order.push_back(right[order[i]]);
  for (std::size_t i = order.size(); i-- > 0;)
    if (left[order[i]] >= 0) leaves[order[i]] = leaves[left[order[i]]] + leaves[right[order[i]]];

  std::vector<std::pair<Vertex, Vertex>> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
  edges.emplace_back(0, static_cast<Vertex>(n - 1));
  struct Job {
    std::int64_t node, i, j;
  };
  std::vector<Job> stack{{root, 0, static_cast<std::int64_t>(n - 1)}};
  while (!stack.empty()) {
    Job job = stack.back();
    stack.pop_back();
    if (left[job.node] < 0) continue;
    const std::int64_t k = job.i + leaves[left[job.node]];
    if (k - job.i > 1) edges.emplace_back(static_cast<Vertex>(job.i), static_cast<Vertex>(k));
    if (job.j - k > 1) edges.emplace_back(static_cast<Vertex>(k), static_cast<Vertex>(job.j));
    stack.push_back({left[job.node], job.i, k});
    stack.push_back({right[job.node], k, job.j});
  }

  const auto perm = random_permutation(n, rng);
  for (auto& [u, v] : edges) u = perm[u], v = perm[v];
  return build_graph(n, edges);
}

}  // namespace

std::string_view to_string(Family f) {
  for (const auto& [family, name] : kNames)
    if (family == f) return name;
  return "unknown";
}

std::optional<Family> parse_family(std::string_view name) {
  for (const auto& [family, n] : kNames)
    if (n == name) return family;
  return std::nullopt;
}

std::vector<Family> all_families() {
  std::vector<Family> out;
  for (const auto& entry : kNames) out.push_back(entry.first);
  return out;
}

Graph fan_graph(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (std::size_t i = 1; i < n; ++i) edges.emplace_back(0, static_cast<Vertex>(i));
  for (std::size_t i = 1; i + 1 < n; ++i) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
  return build_graph(n, edges);
}

Graph octahedron_graph() {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex a = 0; a < 6; ++a)
    for (Vertex b = a + 1; b < 6; ++b)
      if (b != a + 3) edges.emplace_back(a, b);
  return build_graph(6, edges);
}

Graph cycle_graph(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (std::size_t i = 0; i < n; ++i)
    edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
  return build_graph(n, edges);
}

Instance generate(const InstanceSpec& spec) {
  std::mt19937_64 rng(spec.seed);
  switch (spec.family) {
    case Family::fan:
      check_size(spec.size, 3, 10'000'000, spec.family);
      return {fan_graph(static_cast<std::size_t>(spec.size)), std::nullopt};
    case Family::random_maximal_outerplanar:
      check_size(spec.size, 3, 1'000'000, spec.family);
      return {random_maximal_outerplanar(static_cast<std::size_t>(spec.size), rng), std::nullopt};
    case Family::k4_chain:
      check_size(spec.size, 1, 100'000, spec.family);
      return k4_chain(spec.size);
    case Family::k4_star:
      check_size(spec.size, 0, 100'000, spec.family);
      return k4_star(spec.size);
    case Family::triple_k4_gadget:
      return triple_k4_gadget();
    case Family::octahedron:
      return {octahedron_graph(), std::nullopt};
    case Family::random_construction_tree:
      check_size(spec.size, 1, 100'000, spec.family);
      return random_tree(spec.size, rng);
  }
  throw InputError("unknown family");
}

}  // namespace oor
