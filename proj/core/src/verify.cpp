#include "oor/verify.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace oor {

namespace {

int half_of(const RationalPoint& d) { return (sgn(d.y) > 0 || (sgn(d.y) == 0 && sgn(d.x) > 0)) ? 0 : 1; }

}  // namespace

std::vector<std::vector<Vertex>> geometric_rotation(const Drawing& d) {
  const Graph& g = d.graph;
  std::vector<std::vector<Vertex>> rotation(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    auto nb = g.neighbors(static_cast<Vertex>(v));
    std::vector<std::pair<RationalPoint, Vertex>> dirs;
    for (Vertex w : nb) dirs.emplace_back(d.points[w] - d.points[v], w);
    std::sort(dirs.begin(), dirs.end(), [](const auto& a, const auto& b) {
      int ha = half_of(a.first), hb = half_of(b.first);
      if (ha != hb) return ha < hb;
      return cross_sign(a.first, b.first) > 0;
    });
    for (auto& [dir, w] : dirs) rotation[v].push_back(w);
  }
  return rotation;
}

std::optional<std::pair<Edge, Edge>> find_crossing(const Drawing& d) {
  const Graph& g = d.graph;
  std::vector<std::size_t> order(g.vertex_count());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return d.points[a] < d.points[b]; });
  for (std::size_t i = 0; i + 1 < order.size(); ++i)
    if (d.points[order[i]] == d.points[order[i + 1]]) {
      Edge e(static_cast<Vertex>(order[i]), static_cast<Vertex>(order[i + 1]));
      return std::pair{e, e};
    }

  auto edges = g.edges();
  std::vector<Box> boxes(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    boxes[i] = Box::of(d.points[edges[i].u]);
    boxes[i].extend(Box::of(d.points[edges[i].v]));
  }
  std::vector<std::size_t> idx(edges.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return boxes[a].xlo < boxes[b].xlo; });
  for (std::size_t ii = 0; ii < idx.size(); ++ii) {
    const std::size_t i = idx[ii];
    for (std::size_t jj = ii + 1; jj < idx.size() && boxes[idx[jj]].xlo <= boxes[i].xhi; ++jj) {
      const std::size_t j = idx[jj];
      if (!boxes[i].overlaps(boxes[j])) continue;
      const Edge& e = edges[i];
      const Edge& f = edges[j];
      const auto &a = d.points[e.u], &b = d.points[e.v], &c = d.points[f.u], &q = d.points[f.v];
      Vertex shared = -1;
      if (e.has(f.u)) shared = f.u;
      else if (e.has(f.v)) shared = f.v;
      if (shared >= 0) {
        const auto& s = d.points[shared];
        const auto& p1 = d.points[e.other(shared)];
        const auto& p2 = d.points[f.other(shared)];
        if (orient(s, p1, p2) == 0 && sgn(dot(p1 - s, p2 - s)) > 0) return std::pair{e, f};
        continue;
      }
      if (segments_intersect(a, b, c, q)) return std::pair{std::min(e, f), std::max(e, f)};
    }
  }
  return std::nullopt;
}

DrawingAnalysis::DrawingAnalysis(const Drawing& d) : drawing_(&d) {
  const Graph& g = d.graph;
  if (d.points.size() != g.vertex_count()) throw InputError("drawing has a point count different from its vertex count");
  if (g.vertex_count() < 2 || !is_connected(g)) throw InputError("drawing analysis requires a connected graph");
  auto rotation = geometric_rotation(d);
  auto walks = face_walks(g, rotation);
  int outer = -1;
  Rational best;
  for (std::size_t i = 0; i < walks.size(); ++i) {
    std::vector<RationalPoint> ring;
    for (const Dart& dt : walks[i]) ring.push_back(d.points[dt.tail]);
    Rational area = signed_area2(ring);
    if (outer < 0 || area < best) {
      best = area;
      outer = static_cast<int>(i);
    }
  }
  embedding_ = make_embedded(g, std::move(rotation), walks[outer].front());
  faces_ = compute_faces(embedding_);
  on_outer_.assign(g.vertex_count(), 0);
  face_of_dart_.resize(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) face_of_dart_[v].assign(g.degree(static_cast<Vertex>(v)), -1);
  for (std::size_t f = 0; f < faces_.size(); ++f) {
    std::vector<RationalPoint> ring;
    Box box = Box::of(d.points[faces_[f].boundary.front().tail]);
    for (const Dart& dt : faces_[f].boundary) {
      ring.push_back(d.points[dt.tail]);
      box.extend(Box::of(d.points[dt.tail]));
      auto nb = g.neighbors(dt.tail);
      face_of_dart_[dt.tail][std::lower_bound(nb.begin(), nb.end(), dt.head) - nb.begin()] = static_cast<int>(f);
      if (faces_[f].is_outer) on_outer_[dt.tail] = 1;
    }
    if (faces_[f].is_outer) outer_ = static_cast<int>(f);
    rings_.push_back(std::move(ring));
    boxes_.push_back(box);
  }
  const auto& outer_ring = rings_[outer_];
  for (std::size_t i = 0; i < outer_ring.size(); ++i) {
    Box side = Box::of(outer_ring[i]);
    side.extend(Box::of(outer_ring[(i + 1) % outer_ring.size()]));
    outer_sides_.push_back(side);
  }
}

int DrawingAnalysis::face_left_of(Vertex tail, Vertex head) const {
  auto nb = drawing_->graph.neighbors(tail);
  auto it = std::lower_bound(nb.begin(), nb.end(), head);
  if (it == nb.end() || *it != head) throw InputError("not an edge", {tail, head});
  return face_of_dart_[tail][it - nb.begin()];
}

bool DrawingAnalysis::is_outer_edge(const Edge& e) const {
  return face_left_of(e.u, e.v) == outer_ || face_left_of(e.v, e.u) == outer_;
}

bool DrawingAnalysis::is_chord(const Edge& e) const {
  return drawing_->graph.has_edge(e.u, e.v) && on_outer_[e.u] && on_outer_[e.v] && !is_outer_edge(e);
}

std::vector<Edge> DrawingAnalysis::chords() const {
  std::vector<Edge> out;
  for (const Edge& e : drawing_->graph.edges())
    if (is_chord(e)) out.push_back(e);
  return out;
}

namespace {

// Third corner of the triangular face left of tail -> head, or -1.
Vertex face_tip(const DrawingAnalysis& a, Vertex tail, Vertex head) {
  const Face& f = a.faces()[a.face_left_of(tail, head)];
  if (f.is_outer || f.boundary.size() != 3) return -1;
  for (const Dart& d : f.boundary)
    if (d.tail != tail && d.tail != head) return d.tail;
  return -1;
}

// Vertices of the node on one side of a chord: the tip, plus the outer corner
// of the 4-clique when the tip is an inner vertex.
std::vector<Vertex> node_side(const DrawingAnalysis& a, Vertex u, Vertex v, Vertex tip) {
  std::vector<Vertex> side{tip};
  if (!a.on_outer_face(tip)) {
    for (Vertex w : a.drawing().graph.neighbors(tip))
      if (w != u && w != v) side.push_back(w);
  }
  return side;
}

}  // namespace

ChordGoodness chord_is_good(const DrawingAnalysis& a, const Edge& chord) {
  if (!a.is_chord(chord)) {
    std::ostringstream os;
    os << "edge (" << chord.u << "," << chord.v << ") is not a chord";
    throw InputError(os.str(), {chord.u, chord.v});
  }
  const auto& pts = a.drawing().points;
  ChordGoodness out;
  out.chord = chord;
  Vertex w = face_tip(a, chord.u, chord.v);
  Vertex w2 = face_tip(a, chord.v, chord.u);
  if (w < 0 || w2 < 0) return out;
  Triangle d{{pts[chord.u], pts[chord.v], pts[w]}};
  Triangle d2{{pts[chord.u], pts[chord.v], pts[w2]}};
  auto side = node_side(a, chord.u, chord.v, w);
  auto side2 = node_side(a, chord.u, chord.v, w2);
  for (int corner = 0; corner < 2; ++corner) {
    Region r = region_of(d, corner);
    Region r2 = region_of(d2, corner);
    bool there = std::all_of(side2.begin(), side2.end(), [&](Vertex x) { return r.contains(pts[x]); });
    bool back = std::all_of(side.begin(), side.end(), [&](Vertex x) { return r2.contains(pts[x]); });
    if (there != back) out.mirror_consistent = false;
    if (there && !out.good) {
      out.good = true;
      out.toward = corner == 0 ? chord.u : chord.v;
    }
  }
  return out;
}

ChordGoodness chord_is_good(const Drawing& d, const Edge& chord) {
  DrawingAnalysis a(d);
  return chord_is_good(a, chord);
}

namespace {

bool angle_less(const RationalPoint& a, const RationalPoint& b) {
  int ha = half_of(a), hb = half_of(b);
  if (ha != hb) return ha < hb;
  return cross_sign(a, b) > 0;
}

}  // namespace

bool segment_intersects_outer(const DrawingAnalysis& a, Vertex p, Vertex q) {
  if (p == q) throw InputError("segment endpoints coincide", {p, q});
  const auto& pts = a.drawing().points;
  const RationalPoint& P = pts[p];
  const RationalPoint& Q = pts[q];

  // face entered when leaving p towards q
  const auto& rot = a.embedding().rotation[p];
  if (rot.empty()) return true;
  const RationalPoint dir = Q - P;
  std::size_t k = 0;
  while (k < rot.size() && angle_less(pts[rot[k]] - P, dir)) ++k;
  if (k < rot.size() && !angle_less(dir, pts[rot[k]] - P)) throw DegenerateError("segment runs along a drawn edge");
  const Vertex before = rot[(k + rot.size() - 1) % rot.size()];
  int face = a.face_left_of(p, before);

  // walk face to face along pq
  Rational at = 0;
  std::optional<Dart> entry;
  for (std::size_t guard = 0; guard <= 2 * a.drawing().graph.edge_count() + 2; ++guard) {
    if (face == a.outer_face()) return true;
    const auto& boundary = a.faces()[face].boundary;
    if (boundary.size() == 3) {
      // convex face: the exit side follows from orientation signs alone
      const Dart* out = nullptr;
      for (const Dart& d : boundary)
        if (d.tail == q) return false;
      for (const Dart& d : boundary) {
        if (d.tail == p || d.head == p || (entry && d == *entry)) continue;
        int os = orient(P, Q, pts[d.tail]), ot = orient(P, Q, pts[d.head]);
        if (os == 0 || ot == 0) throw DegenerateError("segment passes through a vertex");
        if (os != ot) out = &d;
      }
      if (!out) throw std::logic_error("face walk lost the segment");
      entry = Dart{out->head, out->tail};
      face = a.face_left_of(out->head, out->tail);
      if (face != a.outer_face() && a.faces()[face].boundary.size() != 3)
        at = *line_intersection_param(P, Q, pts[out->tail], pts[out->head]);
      continue;
    }
    std::optional<Rational> exit;
    const Dart* through = nullptr;
    for (const Dart& d : boundary) {
      const RationalPoint& s = pts[d.tail];
      const RationalPoint& t = pts[d.head];
      if (!segments_intersect(P, Q, s, t)) continue;
      int os = orient(P, Q, s), ot = orient(P, Q, t);
      bool s_end = d.tail == p || d.tail == q, t_end = d.head == p || d.head == q;
      if (os == 0 && ot == 0 && !(s_end && t_end)) throw DegenerateError("segment runs along a drawn edge");
      if ((os == 0 && !s_end) || (ot == 0 && !t_end)) throw DegenerateError("segment passes through a vertex");
      if (os == 0 || ot == 0) continue;
      auto tp = line_intersection_param(P, Q, s, t);
      if (!tp || *tp <= at) continue;
      if (!exit || *tp < *exit) {
        exit = *tp;
        through = &d;
      }
    }
    if (!exit) return false;  // pq ends at q inside the closure of this face
    at = *exit;
    entry = Dart{through->head, through->tail};
    face = a.face_left_of(through->head, through->tail);
  }
  throw std::logic_error("face walk did not terminate");
}

bool segment_intersects_outer(const Drawing& d, Vertex p, Vertex q) {
  if (auto c = find_crossing(d)) throw InputError("drawing is not plane");
  DrawingAnalysis a(d);
  return segment_intersects_outer(a, p, q);
}

VerificationReport is_plane_oor(const Drawing& d) {
  VerificationReport r;
  const Graph& g = d.graph;
  r.crossing = find_crossing(d);
  r.planar = !r.crossing.has_value();
  if (auto t = find_collinear_triple(d.points))
    r.collinear = std::array<Vertex, 3>{static_cast<Vertex>((*t)[0]), static_cast<Vertex>((*t)[1]),
                                        static_cast<Vertex>((*t)[2])};
  r.general_position = !r.collinear.has_value() || g.vertex_count() < 3;
  if (!r.planar) {
    r.notes.push_back("drawing is not plane; face-based criteria skipped");
    return r;
  }
  if (g.vertex_count() < 2 || !is_connected(g)) {
    r.notes.push_back("graph is not connected; face-based criteria skipped");
    return r;
  }
  DrawingAnalysis a(d);

  r.local_ok = true;
  bool triangulated = true;
  for (std::size_t f = 0; f < a.faces().size(); ++f)
    if (!a.faces()[f].is_outer && a.faces()[f].boundary.size() != 3) triangulated = false;
  for (const Edge& c : a.chords()) {
    ChordGoodness cg = chord_is_good(a, c);
    r.local_ok = r.local_ok && cg.good;
    r.mirror_consistent = r.mirror_consistent && cg.mirror_consistent;
    r.chords.push_back(cg);
  }

  r.exhaustive_ok = true;
  try {
    for (std::size_t p = 0; p < g.vertex_count(); ++p) {
      for (std::size_t q = p + 1; q < g.vertex_count(); ++q) {
        if (g.has_edge(static_cast<Vertex>(p), static_cast<Vertex>(q))) continue;
        bool hit = segment_intersects_outer(a, static_cast<Vertex>(p), static_cast<Vertex>(q));
        r.exhaustive_ok = r.exhaustive_ok && hit;
        r.non_edges.push_back({static_cast<Vertex>(p), static_cast<Vertex>(q), hit});
      }
    }
  } catch (const DegenerateError& e) {
    r.exhaustive_ok = false;
    r.notes.push_back(std::string("degenerate non-edge: ") + e.what());
  }

  r.equivalence_applies = triangulated && is_biconnected(g) && r.general_position;
  r.criteria_agree = !r.equivalence_applies || r.local_ok == r.exhaustive_ok;
  if (!r.criteria_agree) r.notes.push_back("local and exhaustive criteria disagree");
  if (!r.mirror_consistent) r.notes.push_back("mirrored region containment disagrees for some chord");
  r.verdict = r.planar && r.general_position && r.local_ok && r.exhaustive_ok;
  return r;
}

}  // namespace oor
