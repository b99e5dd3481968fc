#include "oor/obstacle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "oor/verify.hpp"

namespace oor {

Graph visibility_graph(const std::vector<RationalPoint>& points, const SimplePolygon& obstacle) {
  const auto& ring = obstacle.vertices;
  std::vector<Box> sides;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    Box b = Box::of(ring[i]);
    b.extend(Box::of(ring[(i + 1) % ring.size()]));
    sides.push_back(b);
  }
  if (ring.size() >= 3)
    for (std::size_t i = 0; i < points.size(); ++i)
      if (locate(ring, points[i]) != Location::outside)
        throw InputError("point " + std::to_string(i) + " lies in the obstacle");

  std::vector<Edge> edges;
  for (std::size_t p = 0; p < points.size(); ++p) {
    for (std::size_t q = p + 1; q < points.size(); ++q) {
      Box seg = Box::of(points[p]);
      seg.extend(Box::of(points[q]));
      bool blocked = false;
      // endpoints lie outside the closed obstacle, so the open segment meets
      // it iff it meets its boundary
      for (std::size_t i = 0; i < ring.size() && !blocked; ++i)
        blocked = sides[i].overlaps(seg) &&
                  segments_intersect(points[p], points[q], ring[i], ring[(i + 1) % ring.size()]);
      if (!blocked) edges.emplace_back(static_cast<Vertex>(p), static_cast<Vertex>(q));
    }
  }
  return build_graph(points.size(), edges);
}

namespace {

RationalPoint scaled_to_unit(const RationalPoint& d) {
  Rational m = std::max(Rational(abs(d.x)), Rational(abs(d.y)));
  return RationalPoint(Rational(d.x / m), Rational(d.y / m));
}

RationalPoint left_normal(const RationalPoint& d) { return scaled_to_unit(RationalPoint(Rational(-d.y), d.x)); }

}  // namespace

SimplePolygon obstacle_candidate(const DrawingAnalysis& a, const Rational& mu, int variant) {
  const auto& walk = a.face_ring(a.outer_face());
  const std::size_t k = walk.size();
  // uneven offsets keep ring corners off the lines through drawing points
  auto offset = [&](std::size_t side) -> Rational { return mu * Rational(31 + static_cast<long>((3 * side + variant) % 5), 31); };
  const Rational skew(9 + 2 * (variant % 3), 13);

  // offset ring: each side of the outer walk pushed into the outer face
  std::vector<RationalPoint> ring;
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t in = (i + k - 1) % k;
    const RationalPoint& prev = walk[in];
    const RationalPoint& p = walk[i];
    const RationalPoint& next = walk[(i + 1) % k];
    const RationalPoint din = p - prev, dout = next - p;
    const RationalPoint nin = offset(in) * left_normal(din), nout = offset(i) * left_normal(dout);
    const int turn = cross_sign(din, dout);
    if (turn > 0) {
      // pocket: meet of the two offset lines
      RationalPoint a0 = prev + nin, b0 = p + nout;
      auto t = line_intersection_param(a0, a0 + din, b0, b0 + dout);
      ring.push_back(a0 + *t * din);
    } else if (turn < 0 && sgn(dot(din, dout)) >= 0) {
      ring.push_back(p + nin + nout);
    } else {
      ring.push_back(p + nin + (skew * offset(in)) * scaled_to_unit(din));
      ring.push_back(p + nout - (skew * offset(i)) * scaled_to_unit(dout));
    }
  }

  // the slit replaces the leftmost ring corner by two points on its sides,
  // both left of every drawing point
  std::size_t r0 = 0;
  for (std::size_t i = 1; i < ring.size(); ++i)
    if (ring[i] < ring[r0]) r0 = i;
  Rational xmin = a.drawing().points.front().x;
  for (const auto& p : a.drawing().points) xmin = std::min(xmin, p.x);
  const RationalPoint& corner = ring[r0];
  const RationalPoint& before = ring[(r0 + ring.size() - 1) % ring.size()];
  const RationalPoint& after = ring[(r0 + 1) % ring.size()];
  Rational lambda(1, 8);
  RationalPoint r0a, r0b;
  for (;; lambda /= 8) {
    r0a = corner + lambda * (after - corner);
    r0b = corner + lambda * (before - corner);
    if (r0a.x < xmin && r0b.x < xmin) break;
  }

  Rational x0 = ring[0].x, x1 = ring[0].x, y0 = ring[0].y, y1 = ring[0].y;
  for (const auto& p : ring) {
    x0 = std::min(x0, p.x), x1 = std::max(x1, p.x);
    y0 = std::min(y0, p.y), y1 = std::max(y1, p.y);
  }
  Rational margin = (x1 - x0) + (y1 - y0) + 1;
  x0 -= margin * Rational(5, 7), x1 += margin * Rational(3, 7);
  y0 -= margin * Rational(4, 9), y1 += margin * Rational(6, 11);

  SimplePolygon poly;
  auto& out = poly.vertices;
  out.push_back(r0a);
  for (std::size_t i = 1; i < ring.size(); ++i) out.push_back(ring[(r0 + i) % ring.size()]);
  out.push_back(r0b);
  // slit to the frame; its ends sit off the frame sides
  out.emplace_back(Rational(x0 + margin * Rational(1, 13)), Rational(r0b.y - margin * Rational(1, 29)));
  out.emplace_back(x0, y0);
  out.emplace_back(x1, Rational(y0 - margin * Rational(1, 17)));
  out.emplace_back(Rational(x1 + margin * Rational(1, 19)), y1);
  out.emplace_back(x0, y1);
  out.emplace_back(Rational(x0 + margin * Rational(1, 23)), Rational(r0a.y + margin * Rational(1, 31)));
  return poly;
}

namespace {

// Rough lower bound on the distance between a vertex and a non-incident edge.
double vertex_edge_clearance(const Drawing& d) {
  double best = std::numeric_limits<double>::infinity();
  for (const Edge& e : d.graph.edges()) {
    const auto &a = d.points[e.u], &b = d.points[e.v];
    double dx = b.fx - a.fx, dy = b.fy - a.fy, len2 = dx * dx + dy * dy;
    for (std::size_t v = 0; v < d.points.size(); ++v) {
      if (e.has(static_cast<Vertex>(v))) continue;
      const auto& p = d.points[v];
      double t = len2 > 0 ? ((p.fx - a.fx) * dx + (p.fy - a.fy) * dy) / len2 : 0;
      t = std::clamp(t, 0.0, 1.0);
      double qx = a.fx + t * dx - p.fx, qy = a.fy + t * dy - p.fy;
      best = std::min(best, std::sqrt(qx * qx + qy * qy));
    }
  }
  return best;
}

bool general_position(const Drawing& d, const SimplePolygon& poly) {
  std::vector<RationalPoint> all = d.points;
  all.insert(all.end(), poly.vertices.begin(), poly.vertices.end());
  return !find_collinear_triple(all);
}

}  // namespace

SimplePolygon build_obstacle(const Drawing& d) {
  if (d.graph.vertex_count() < 2) throw InputError("obstacle needs at least two points");
  if (find_crossing(d)) throw InputError("drawing is not plane");
  if (find_collinear_triple(d.points)) throw InputError("drawing is not in general position");
  if (!is_connected(d.graph)) throw InputError("drawing is not connected");
  DrawingAnalysis a(d);
  for (std::size_t p = 0; p < d.points.size(); ++p)
    for (std::size_t q = p + 1; q < d.points.size(); ++q)
      if (!d.graph.has_edge(static_cast<Vertex>(p), static_cast<Vertex>(q)) &&
          !segment_intersects_outer(a, static_cast<Vertex>(p), static_cast<Vertex>(q)))
        throw InputError("non-edge misses the outer face", {static_cast<Vertex>(p), static_cast<Vertex>(q)});

  double clear = vertex_edge_clearance(d);
  int e = 0;
  std::frexp(std::isfinite(clear) && clear > 0 ? clear : 1.0, &e);
  Rational mu = Rational(7, 9);
  mu *= e - 3 >= 0 ? Rational(mpz_class(1) << (e - 3)) : Rational(mpz_class(1), mpz_class(1) << (3 - e));

  for (int attempt = 0; attempt < 60; ++attempt) {
    if (attempt > 0 && attempt % 3 == 0) mu *= Rational(5, 11);
    SimplePolygon poly = obstacle_candidate(a, mu, attempt % 3);
    if (!is_simple(poly.vertices) || sgn(signed_area2(poly.vertices)) <= 0) continue;
    if (!general_position(d, poly)) continue;
    bool inside = false;
    for (const auto& p : d.points) inside = inside || locate(poly.vertices, p) != Location::outside;
    if (inside) continue;
    if (visibility_graph(d.points, poly) == d.graph) return poly;
  }
  throw ObstacleError("no obstacle candidate passed verification");
}

}  // namespace oor
