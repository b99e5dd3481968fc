#include "oor/embedder.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "oor/verify.hpp"

namespace oor {

std::optional<Vertex> AttachState::target(Vertex a, Vertex b) const {
  auto it = orientation->direction.find(Edge(a, b));
  if (it == orientation->direction.end()) return std::nullopt;
  return it->second;
}

bool AttachState::is_active(Vertex v) const {
  if (!on_outer(v)) return false;
  return target(prev[v], v) == v || target(v, next[v]) == v;
}

bool AttachState::properties_hold(Vertex v) const {
  if (!on_outer(v)) return true;
  Vertex a = prev[v], b = next[v];
  if (inactive_in[v] == 0) return orient(points[a], points[v], points[b]) > 0;
  if (inactive_in[v] == 1 && is_active(v)) {
    if (target(a, v) == v)
      a = face_third.at(edge_key(a, v));
    else
      b = face_third.at(edge_key(v, b));
    return orient(points[a], points[v], points[b]) > 0;
  }
  return true;
}

std::optional<Vertex> AttachState::property_violation() const {
  for (std::size_t v = 0; v < next.size(); ++v)
    if (placed[v] && !properties_hold(static_cast<Vertex>(v))) return static_cast<Vertex>(v);
  return std::nullopt;
}

namespace {

Rational pow2(long k) {
  Rational r(1);
  if (k >= 0)
    mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(k));
  else
    mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(-k));
  return r;
}

// floor(log2 |q|) up to one, for q != 0.
long ilog2(const Rational& q) {
  return static_cast<long>(mpz_sizeinbase(q.get_num_mpz_t(), 2)) - static_cast<long>(mpz_sizeinbase(q.get_den_mpz_t(), 2));
}

long ilog2_inf(const RationalPoint& p) {
  if (sgn(p.x) == 0) return ilog2(p.y);
  if (sgn(p.y) == 0) return ilog2(p.x);
  return std::max(ilog2(p.x), ilog2(p.y));
}

RationalPoint normalized(const RationalPoint& d) { return pow2(-ilog2_inf(d)) * d; }

int tree_center(const ConstructionTree& t, const std::vector<std::vector<int>>& inc) {
  const int k = static_cast<int>(t.nodes.size());
  auto bfs = [&](int src, std::vector<int>& parent) {
    std::vector<int> dist(k, -1);
    parent.assign(k, -1);
    std::deque<int> q{src};
    dist[src] = 0;
    int last = src;
    while (!q.empty()) {
      int a = q.front();
      q.pop_front();
      last = a;
      for (int ei : inc[a]) {
        int b = t.edges[ei].a == a ? t.edges[ei].b : t.edges[ei].a;
        if (dist[b] < 0) {
          dist[b] = dist[a] + 1;
          parent[b] = a;
          q.push_back(b);
        }
      }
    }
    return last;
  };
  std::vector<int> parent;
  int a = bfs(0, parent);
  int b = bfs(a, parent);
  std::vector<int> path;
  for (int c = b; c >= 0; c = parent[c]) path.push_back(c);
  return path[path.size() / 2];
}

class Builder {
 public:
  Builder(const InnerChordalGraph& ic, const ChordOrientation& o) : ic_(ic), o_(o) {
    const std::size_t n = ic.graph().vertex_count();
    st_.graph = &ic;
    st_.orientation = &o;
    st_.points.assign(n, RationalPoint());
    st_.placed.assign(n, 0);
    st_.next.assign(n, -1);
    st_.prev.assign(n, -1);
    st_.inactive_in.assign(n, 0);
  }

  const AttachState& state() const { return st_; }

  void place_root(const TreeNode& node) {
    std::vector<int> pos(st_.points.size(), -1);
    for (std::size_t i = 0; i < ic_.outer_cycle.size(); ++i) pos[ic_.outer_cycle[i]] = static_cast<int>(i);
    auto tri = node.triangle;
    std::sort(tri.begin(), tri.end(), [&](Vertex a, Vertex b) { return pos[a] < pos[b]; });
    const RationalPoint corners[3] = {RationalPoint(0, 0), RationalPoint(1, 0), RationalPoint(0, 1)};
    for (int i = 0; i < 3; ++i) {
      Vertex a = tri[i], b = tri[(i + 1) % 3];
      put(a, corners[i]);
      st_.next[a] = b;
      st_.prev[b] = a;
      st_.face_third[edge_key(a, b)] = node.inner ? *node.inner : tri[(i + 2) % 3];
      add_edge(a, b);
    }
    if (node.inner) {
      put(*node.inner, RationalPoint(Rational(1, 4), Rational(1, 4)));
      for (Vertex a : tri) add_edge(a, *node.inner);
    }
  }

  void attach(const TreeNode& node, const Edge& chord) {
    ++st_.step;
    const Vertex v = o_.direction.at(chord);
    const Vertex u = chord.other(v);
    const Vertex x = st_.face_third.at(edge_key(u, v));
    const bool forward = st_.next[u] == v;
    if (!forward && st_.next[v] != u) fail("attachment chord is not on the outer cycle");
    const Vertex y = forward ? st_.next[v] : st_.prev[v];
    Vertex s = -1;
    for (Vertex c : node.triangle)
      if (!chord.has(c)) s = c;
    const std::optional<Vertex> m = node.inner;

    const RationalPoint& pu = st_.points[u];
    const RationalPoint& pv = st_.points[v];
    const RationalPoint& px = st_.points[x];
    const Region region = region_of(Triangle{{pu, pv, px}}, 1);
    std::optional<HalfPlane> beside;
    if (y != x) beside = half_plane_avoiding(pv, st_.points[y], px);
    auto [near_x, far_side] = cone(u, v, x, y);

    // combinatorial update; only coordinates are searched below
    if (forward) {
      st_.next[u] = s, st_.prev[s] = u, st_.next[s] = v, st_.prev[v] = s;
    } else {
      st_.next[v] = s, st_.prev[s] = v, st_.next[s] = u, st_.prev[u] = s;
    }
    st_.face_third.erase(edge_key(u, v));
    st_.face_third[edge_key(u, s)] = m ? *m : v;
    st_.face_third[edge_key(s, v)] = m ? *m : u;
    ++st_.inactive_in[v];

    // a ray from v can stay collinear with v and an earlier point for every t;
    // other bends turn it away from that line
    for (int bend : {kBend, kBend + 1, kBend + 3, kBend + 7, kBend + 15}) {
      const RationalPoint ds = far_side + Rational(bend) * near_x;
      const RationalPoint dm = far_side + Rational(4 * bend) * near_x;
      // first try: the new sides about as long as the shorter side of D at v
      Rational t = pow2(std::min(ilog2_inf(pu - pv), ilog2_inf(px - pv)) - ilog2_inf(ds));
      for (int attempt = 0; attempt < kMaxAttempts; ++attempt, t /= 2) {
        RationalPoint ps = pv + t * ds;
        if (!region.contains(ps) || (beside && !beside->contains(ps))) continue;
        if (!corner_clear(u, v, ps)) continue;
        if (collinear_with(placed_points_, ps)) continue;
        std::optional<RationalPoint> pm;
        if (m) {
          pm = inner_point(pu, pv, ps, dm, t, region);
          if (!pm) continue;
          st_.points[*m] = *pm;
        }
        st_.points[s] = ps;
        if (!st_.properties_hold(u) || !st_.properties_hold(v) || !st_.properties_hold(s)) continue;
        put(s, ps);
        add_edge(u, s);
        add_edge(v, s);
        if (m) {
          put(*m, *pm);
          add_edge(u, *m);
          add_edge(v, *m);
          add_edge(s, *m);
        }
        return;
      }
    }
    fail("placement did not converge");
  }

 private:
  static constexpr int kMaxAttempts = 200;
  static constexpr int kBend = 8;

  [[noreturn]] void fail(const std::string& what) const {
    std::ostringstream os;
    os << what << " at attachment step " << st_.step;
    throw EmbedError(os.str(), st_.step);
  }

  void put(Vertex v, const RationalPoint& p) {
    st_.points[v] = p;
    st_.placed[v] = 1;
    placed_points_.push_back(p);
  }

  void add_edge(Vertex a, Vertex b) {
    st_.edges.emplace_back(a, b);
    Box box = Box::of(st_.points[a]);
    box.extend(Box::of(st_.points[b]));
    boxes_.push_back(box);
  }

  // Boundary directions of R_D(v) intersected with the side of line vy away
  // from x: the one along v - x, then the other, both normalized.
  std::pair<RationalPoint, RationalPoint> cone(Vertex u, Vertex v, Vertex x, Vertex y) const {
    const RationalPoint& pv = st_.points[v];
    const RationalPoint du = st_.points[u] - pv, dx = st_.points[x] - pv, dy = st_.points[y] - pv;
    std::vector<std::pair<RationalPoint, RationalPoint>> lines{{du, dx}, {dx, du}};
    if (y != x) lines.emplace_back(dy, dx);
    auto closed = [&](const RationalPoint& d) {
      for (const auto& [l, ref] : lines)
        if (cross_sign(l, d) * cross_sign(l, ref) > 0) return false;
      return true;
    };
    std::vector<RationalPoint> kept;
    for (const RationalPoint& d : {du, Rational(-1) * du, dx, Rational(-1) * dx, dy, Rational(-1) * dy})
      if (closed(d)) kept.push_back(d);
    if (kept.empty()) fail("empty placement cone");
    RationalPoint lo = kept.front(), hi = kept.front();
    for (const RationalPoint& d : kept) {
      if (cross_sign(lo, d) < 0) lo = d;
      if (cross_sign(d, hi) < 0) hi = d;
    }
    if (cross_sign(lo, hi) <= 0) fail("empty placement cone");
    const RationalPoint away = Rational(-1) * dx;
    auto along_away = [&](const RationalPoint& d) { return cross_sign(d, away) == 0 && sgn(dot(d, away)) > 0; };
    if (along_away(lo)) return {normalized(lo), normalized(hi)};
    if (along_away(hi)) return {normalized(hi), normalized(lo)};
    fail("placement cone does not border the region apex ray");
  }

  // The new triangle u v s is empty and its sides at s cross nothing.
  bool corner_clear(Vertex u, Vertex v, const RationalPoint& ps) const {
    const RationalPoint& pu = st_.points[u];
    const RationalPoint& pv = st_.points[v];
    Box tri = Box::of(pu);
    tri.extend(Box::of(pv));
    tri.extend(Box::of(ps));
    const std::vector<RationalPoint> ring{pu, pv, ps};
    for (const RationalPoint& p : placed_points_) {
      if (p == pu || p == pv) continue;
      if (tri.overlaps(Box::of(p)) && locate(ring, p) != Location::outside) return false;
    }
    for (std::size_t i = 0; i < st_.edges.size(); ++i) {
      if (!boxes_[i].overlaps(tri)) continue;
      const Edge& e = st_.edges[i];
      const RationalPoint& a = st_.points[e.u];
      const RationalPoint& b = st_.points[e.v];
      if (!e.has(u) && segments_intersect(pu, ps, a, b)) return false;
      if (!e.has(v) && segments_intersect(pv, ps, a, b)) return false;
    }
    return true;
  }

  std::optional<RationalPoint> inner_point(const RationalPoint& pu, const RationalPoint& pv, const RationalPoint& ps,
                                           const RationalPoint& dm, const Rational& t, const Region& region) {
    const std::vector<RationalPoint> ring{pu, pv, ps};
    Rational eps = t / 4;
    for (int i = 0; i < kMaxAttempts / 4; ++i, eps /= 2) {
      RationalPoint pm = pv + eps * dm;
      if (!region.contains(pm) || locate(ring, pm) != Location::inside) continue;
      placed_points_.push_back(ps);
      bool collinear = collinear_with(placed_points_, pm).has_value();
      placed_points_.pop_back();
      if (!collinear) return pm;
    }
    return std::nullopt;
  }

  const InnerChordalGraph& ic_;
  const ChordOrientation& o_;
  AttachState st_;
  std::vector<RationalPoint> placed_points_;
  std::vector<Box> boxes_;
};

}  // namespace

Drawing embed(const InnerChordalGraph& ic, const ChordOrientation& o, const AttachObserver& observer) {
  if (auto check = validate_orientation(ic, o); !check) throw InputError("invalid orientation: " + check.reason);
  ConstructionTree tree = build_construction_tree(ic);
  auto inc = tree.incidence();
  const int root = tree_center(tree, inc);

  Builder b(ic, o);
  b.place_root(tree.nodes[root]);
  if (observer) observer(b.state());
  std::vector<char> seen(tree.nodes.size(), 0);
  std::deque<int> queue{root};
  seen[root] = 1;
  while (!queue.empty()) {
    int a = queue.front();
    queue.pop_front();
    for (int ei : inc[a]) {
      const TreeEdge& te = tree.edges[ei];
      int c = te.a == a ? te.b : te.a;
      if (seen[c]) continue;
      seen[c] = 1;
      b.attach(tree.nodes[c], te.chord);
      if (observer) observer(b.state());
      queue.push_back(c);
    }
  }
  return Drawing{b.state().points, ic.graph()};
}

ChordOrientation derive_orientation(const Drawing& d) {
  if (auto c = find_crossing(d)) throw InputError("drawing is not plane", {c->first.u, c->first.v});
  DrawingAnalysis a(d);
  ChordOrientation o;
  for (const Edge& c : a.chords()) {
    ChordGoodness cg = chord_is_good(a, c);
    if (!cg.good) {
      std::ostringstream os;
      os << "chord (" << c.u << "," << c.v << ") is not good";
      throw InputError(os.str(), {c.u, c.v});
    }
    o.direction[c] = *cg.toward;
  }
  return o;
}

Recognition<Drawing> represent_outerplanar(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) throw InputError("graph has no vertices");
  if (!is_connected(g)) return RejectReason{RejectKind::not_biconnected, {}, "graph is disconnected"};
  if (n == 1) return Drawing{{RationalPoint(0, 0)}, g};
  if (n == 2) return Drawing{{RationalPoint(0, 0), RationalPoint(1, 0)}, g};

  auto blocks = biconnected_components(g);
  std::vector<std::vector<Vertex>> cycles;
  for (const auto& block : blocks) {
    if (block.size() == 1) {
      cycles.push_back({block[0].u, block[0].v});
      continue;
    }
    Graph bg = build_graph(n, block);
    auto r = recognize_maximal_outerplanar(bg);
    if (!accepted(r)) {
      auto cycle = find_chordless_cycle(bg);
      if (!cycle.empty()) return RejectReason{RejectKind::chordless_cycle, cycle, "block contains a chordless cycle"};
      return std::get<RejectReason>(r);
    }
    cycles.push_back(std::get<MaximalOuterplanar>(r).outer_cycle);
  }

  // splice block cycles into one Hamiltonian cycle, closing each splice with
  // an augmentation edge
  std::vector<Vertex> next(n, -1);
  std::vector<std::vector<int>> blocks_of(n);
  for (std::size_t i = 0; i < cycles.size(); ++i)
    for (Vertex v : cycles[i]) blocks_of[v].push_back(static_cast<int>(i));
  std::vector<char> done(cycles.size(), 0);
  std::vector<Edge> extra;
  std::deque<Vertex> queue;
  for (std::size_t i = 0; i < cycles[0].size(); ++i) {
    next[cycles[0][i]] = cycles[0][(i + 1) % cycles[0].size()];
    queue.push_back(cycles[0][i]);
  }
  done[0] = 1;
  while (!queue.empty()) {
    Vertex c = queue.front();
    queue.pop_front();
    for (int bi : blocks_of[c]) {
      if (done[bi]) continue;
      done[bi] = 1;
      auto cyc = cycles[bi];
      std::rotate(cyc.begin(), std::find(cyc.begin(), cyc.end(), c), cyc.end());
      const Vertex old = next[c];
      Vertex last = c;
      for (std::size_t k = 1; k < cyc.size(); ++k) {
        next[last] = cyc[k];
        last = cyc[k];
        queue.push_back(last);
      }
      next[last] = old;
      extra.emplace_back(last, old);
    }
  }

  std::vector<Edge> all(g.edges().begin(), g.edges().end());
  all.insert(all.end(), extra.begin(), extra.end());
  Graph h = build_graph(n, all);
  auto rec = recognize(h);
  if (!accepted(rec)) throw std::logic_error("augmented graph is not maximal outerplanar");
  const auto& ic = std::get<InnerChordalGraph>(rec);
  Drawing d = embed(ic, greedy_outerplanar(ic));
  return Drawing{std::move(d.points), g};
}

}  // namespace oor
