#include "oor/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace oor {

RationalPoint operator+(const RationalPoint& a, const RationalPoint& b) {
  return RationalPoint(Rational(a.x + b.x), Rational(a.y + b.y));
}
RationalPoint operator-(const RationalPoint& a, const RationalPoint& b) {
  return RationalPoint(Rational(a.x - b.x), Rational(a.y - b.y));
}
RationalPoint operator*(const Rational& s, const RationalPoint& a) {
  return RationalPoint(Rational(s * a.x), Rational(s * a.y));
}

Rational cross(const RationalPoint& a, const RationalPoint& b) { return a.x * b.y - a.y * b.x; }
Rational dot(const RationalPoint& a, const RationalPoint& b) { return a.x * b.x + a.y * b.y; }

namespace {

// Double approximation with relative error below 2^-52, or false when the
// value is outside the range where that bound holds.
bool approx(const Rational& q, double& out) {
  out = q.get_d();
  if (out == 0) return sgn(q) == 0;
  double m = std::fabs(out);
  return m > 1e-280 && m < 1e280;
}

}  // namespace

void RationalPoint::cache() { approx_ok = approx(x, fx) & approx(y, fy); }

int cross_sign(const RationalPoint& a, const RationalPoint& b) {
  static const RationalPoint origin(0, 0);
  return orient(origin, a, b);
}

int orient(const RationalPoint& a, const RationalPoint& b, const RationalPoint& c) {
  if (a.approx_ok && b.approx_ok && c.approx_ok) {
    double det = (b.fx - a.fx) * (c.fy - a.fy) - (b.fy - a.fy) * (c.fx - a.fx);
    double mag = (std::fabs(b.fx) + std::fabs(a.fx)) * (std::fabs(c.fy) + std::fabs(a.fy)) +
                 (std::fabs(b.fy) + std::fabs(a.fy)) * (std::fabs(c.fx) + std::fabs(a.fx));
    if (mag < 1e280 && mag > 1e-250) {
      double bound = 1e-13 * mag;
      if (det > bound) return 1;
      if (det < -bound) return -1;
    }
  }
  Rational v = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  return sgn(v);
}

namespace {

bool on_segment(const RationalPoint& a, const RationalPoint& b, const RationalPoint& p) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

}  // namespace

bool segments_intersect(const RationalPoint& a, const RationalPoint& b, const RationalPoint& c,
                        const RationalPoint& d) {
  int o1 = orient(a, b, c), o2 = orient(a, b, d), o3 = orient(c, d, a), o4 = orient(c, d, b);
  if (o1 != o2 && o3 != o4 && o1 * o2 <= 0 && o3 * o4 <= 0) {
    if (o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0) return true;
  }
  if (o1 == 0 && on_segment(a, b, c)) return true;
  if (o2 == 0 && on_segment(a, b, d)) return true;
  if (o3 == 0 && on_segment(c, d, a)) return true;
  if (o4 == 0 && on_segment(c, d, b)) return true;
  return o1 * o2 < 0 && o3 * o4 < 0;
}

std::optional<Rational> line_intersection_param(const RationalPoint& a, const RationalPoint& b,
                                                const RationalPoint& c, const RationalPoint& d) {
  RationalPoint r = b - a, s = d - c;
  Rational denom = cross(r, s);
  if (sgn(denom) == 0) return std::nullopt;
  Rational t = cross(c - a, s) / denom;
  t.canonicalize();
  return t;
}

bool HalfPlane::contains(const RationalPoint& p) const { return sgn(a * p.x + b * p.y + c) > 0; }
bool HalfPlane::contains_closed(const RationalPoint& p) const { return sgn(a * p.x + b * p.y + c) >= 0; }

HalfPlane half_plane_avoiding(const RationalPoint& p, const RationalPoint& q, const RationalPoint& r) {
  Rational a = -(q.y - p.y);
  Rational b = q.x - p.x;
  Rational c = -(a * p.x + b * p.y);
  int s = sgn(a * r.x + b * r.y + c);
  if (s == 0) throw DegenerateError("half-plane reference point lies on the boundary line");
  if (s > 0) {
    a = -a;
    b = -b;
    c = -c;
  }
  return HalfPlane{a, b, c};
}

Region region_of(const Triangle& d, int corner) {
  const RationalPoint& u = d.corners[corner];
  const RationalPoint& a = d.corners[(corner + 1) % 3];
  const RationalPoint& b = d.corners[(corner + 2) % 3];
  if (orient(u, a, b) == 0) throw DegenerateError("region_of: degenerate triangle");
  return Region{u, half_plane_avoiding(u, a, b), half_plane_avoiding(u, b, a)};
}

Region region_of(const Triangle& d, const RationalPoint& corner) {
  for (int i = 0; i < 3; ++i)
    if (d.corners[i] == corner) return region_of(d, i);
  throw std::invalid_argument("region_of: point is not a corner of the triangle");
}

Rational signed_area2(const std::vector<RationalPoint>& ring) {
  Rational s = 0;
  for (std::size_t i = 0; i < ring.size(); ++i) s += cross(ring[i], ring[(i + 1) % ring.size()]);
  return s;
}

int winding_number(const std::vector<RationalPoint>& ring, const RationalPoint& p) {
  int w = 0;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    const RationalPoint& a = ring[i];
    const RationalPoint& b = ring[(i + 1) % ring.size()];
    if (a.y <= p.y) {
      if (b.y > p.y && orient(a, b, p) > 0) ++w;
    } else {
      if (b.y <= p.y && orient(a, b, p) < 0) --w;
    }
  }
  return w;
}

Location locate(const std::vector<RationalPoint>& ring, const RationalPoint& p) {
  for (std::size_t i = 0; i < ring.size(); ++i) {
    const RationalPoint& a = ring[i];
    const RationalPoint& b = ring[(i + 1) % ring.size()];
    if (orient(a, b, p) == 0 && on_segment(a, b, p)) return Location::boundary;
  }
  return winding_number(ring, p) != 0 ? Location::inside : Location::outside;
}

bool is_simple(const std::vector<RationalPoint>& ring) {
  const std::size_t k = ring.size();
  if (k < 3) return false;
  std::vector<Box> boxes(k);
  for (std::size_t i = 0; i < k; ++i) {
    boxes[i] = Box::of(ring[i]);
    boxes[i].extend(Box::of(ring[(i + 1) % k]));
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if (!boxes[i].overlaps(boxes[j])) continue;
      const RationalPoint& a = ring[i];
      const RationalPoint& b = ring[(i + 1) % k];
      const RationalPoint& c = ring[j];
      const RationalPoint& d = ring[(j + 1) % k];
      bool adjacent = (j == i + 1) || (i == 0 && j == k - 1);
      if (!adjacent) {
        if (segments_intersect(a, b, c, d)) return false;
        continue;
      }
      // adjacent sides share one corner; they may not overlap beyond it
      const RationalPoint& shared = (j == i + 1) ? b : a;
      const RationalPoint& p = (j == i + 1) ? a : b;
      const RationalPoint& q = (j == i + 1) ? d : c;
      if (p == q) return false;
      if (orient(shared, p, q) == 0 && sgn(dot(p - shared, q - shared)) > 0) return false;
    }
  }
  return true;
}

namespace {

// Direction normalized into the half-open upper half-plane so that parallel
// directions coincide up to a positive factor.
RationalPoint canonical_direction(const RationalPoint& d) {
  if (sgn(d.y) < 0 || (sgn(d.y) == 0 && sgn(d.x) < 0)) return RationalPoint(Rational(-d.x), Rational(-d.y));
  return d;
}

}  // namespace

std::optional<std::array<std::size_t, 2>> collinear_with(const std::vector<RationalPoint>& points,
                                                          const RationalPoint& a) {
  std::vector<std::pair<RationalPoint, std::size_t>> dirs;
  dirs.reserve(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i] == a) return std::array<std::size_t, 2>{i, i};
    dirs.emplace_back(canonical_direction(points[i] - a), i);
  }
  std::sort(dirs.begin(), dirs.end(), [](const auto& l, const auto& r) { return cross_sign(l.first, r.first) > 0; });
  for (std::size_t i = 0; i + 1 < dirs.size(); ++i)
    if (cross_sign(dirs[i].first, dirs[i + 1].first) == 0) return std::array<std::size_t, 2>{dirs[i].second, dirs[i + 1].second};
  if (dirs.size() > 1 && cross_sign(dirs.front().first, dirs.back().first) == 0)
    return std::array<std::size_t, 2>{dirs.front().second, dirs.back().second};
  return std::nullopt;
}

std::optional<std::array<std::size_t, 3>> find_collinear_triple(const std::vector<RationalPoint>& points) {
  for (std::size_t i = 0; i + 2 < points.size(); ++i) {
    std::vector<RationalPoint> rest(points.begin() + static_cast<long>(i) + 1, points.end());
    if (auto hit = collinear_with(rest, points[i])) return std::array<std::size_t, 3>{i, i + 1 + (*hit)[0], i + 1 + (*hit)[1]};
  }
  return std::nullopt;
}

Box Box::of(const RationalPoint& p) {
  auto widen = [](double v, double dir) {
    v = std::nextafter(v, dir);
    return std::nextafter(v, dir);
  };
  double x = p.fx, y = p.fy;
  return Box{widen(x, -INFINITY), widen(x, INFINITY), widen(y, -INFINITY), widen(y, INFINITY)};
}

void Box::extend(const Box& o) {
  xlo = std::min(xlo, o.xlo);
  xhi = std::max(xhi, o.xhi);
  ylo = std::min(ylo, o.ylo);
  yhi = std::max(yhi, o.yhi);
}

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational parse_rational(const std::string& s) {
  Rational q;
  if (s.empty() || q.set_str(s, 10) != 0) throw InputError("malformed rational '" + s + "'");
  if (sgn(q.get_den()) == 0) throw InputError("zero denominator in rational '" + s + "'");
  q.canonicalize();
  return q;
}

}  // namespace oor
