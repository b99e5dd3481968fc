#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "oor/graph.hpp"

namespace oor {

/// Exact rational number; always kept in canonical lowest terms.
using Rational = mpq_class;

/// Exact point. Coordinates are set only through the constructors, which also
/// cache double approximations for filtered predicates.
struct RationalPoint {
  Rational x;
  Rational y;
  double fx = 0;
  double fy = 0;
  /// Both approximations have relative error below 2^-52.
  bool approx_ok = true;

  RationalPoint() = default;
  RationalPoint(Rational px, Rational py) : x(std::move(px)), y(std::move(py)) {
    x.canonicalize();
    y.canonicalize();
    cache();
  }
  RationalPoint(long px, long py) : x(px), y(py) { cache(); }

  bool operator==(const RationalPoint& o) const { return x == o.x && y == o.y; }
  bool operator<(const RationalPoint& o) const { return x < o.x || (x == o.x && y < o.y); }

 private:
  void cache();
};

RationalPoint operator+(const RationalPoint& a, const RationalPoint& b);
RationalPoint operator-(const RationalPoint& a, const RationalPoint& b);
RationalPoint operator*(const Rational& s, const RationalPoint& a);

Rational cross(const RationalPoint& a, const RationalPoint& b);
Rational dot(const RationalPoint& a, const RationalPoint& b);
/// Sign of cross(a, b), filtered like orient.
int cross_sign(const RationalPoint& a, const RationalPoint& b);

/// Sign of the turn a -> b -> c: +1 counterclockwise, -1 clockwise, 0 collinear.
/// A double evaluation answers when its error bound certifies the sign; the
/// exact rational determinant decides otherwise.
int orient(const RationalPoint& a, const RationalPoint& b, const RationalPoint& c);

/// Closed segments ab and cd share at least one point.
bool segments_intersect(const RationalPoint& a, const RationalPoint& b, const RationalPoint& c,
                        const RationalPoint& d);

/// Parameter t of the intersection point a + t (b - a) of the supporting lines
/// of ab and cd, if they are not parallel.
std::optional<Rational> line_intersection_param(const RationalPoint& a, const RationalPoint& b,
                                                const RationalPoint& c, const RationalPoint& d);

/// Open half-plane { p : a*p.x + b*p.y + c > 0 }.
struct HalfPlane {
  Rational a, b, c;

  bool contains(const RationalPoint& p) const;
  bool contains_closed(const RationalPoint& p) const;
};

/// Half-plane bounded by the line through p and q, on the side opposite to r.
HalfPlane half_plane_avoiding(const RationalPoint& p, const RationalPoint& q, const RationalPoint& r);

/// Open cone: intersection of two open half-planes whose boundary lines meet
/// at the apex.
struct Region {
  RationalPoint apex;
  HalfPlane first;
  HalfPlane second;

  bool contains(const RationalPoint& p) const { return first.contains(p) && second.contains(p); }
};

struct Triangle {
  std::array<RationalPoint, 3> corners;
};

class DegenerateError : public std::invalid_argument {
 public:
  explicit DegenerateError(const std::string& what) : std::invalid_argument(what) {}
};

/// Cone at a corner of a triangle bounded by the lines of the two sides at that
/// corner, on the sides not containing the triangle. Throws DegenerateError for
/// collinear corners.
Region region_of(const Triangle& d, int corner);
Region region_of(const Triangle& d, const RationalPoint& corner);

/// Simple polygon given by its vertex cycle (counterclockwise).
struct SimplePolygon {
  std::vector<RationalPoint> vertices;
};

/// Twice the signed area of a closed polyline.
Rational signed_area2(const std::vector<RationalPoint>& ring);

/// Winding number of a closed polyline around p (p must not lie on it).
int winding_number(const std::vector<RationalPoint>& ring, const RationalPoint& p);

/// Point strictly inside, on the boundary of, or outside a polygon ring.
enum class Location { inside, boundary, outside };
Location locate(const std::vector<RationalPoint>& ring, const RationalPoint& p);

/// True iff no two non-adjacent sides intersect and adjacent sides only share
/// their common corner.
bool is_simple(const std::vector<RationalPoint>& ring);

/// First collinear triple found among the points (indices), if any.
std::optional<std::array<std::size_t, 3>> find_collinear_triple(const std::vector<RationalPoint>& points);

/// Indices i such that points[i], a, b are collinear for a fixed new point a
/// against all pairs (a, points[i], points[j]).
std::optional<std::array<std::size_t, 2>> collinear_with(const std::vector<RationalPoint>& points,
                                                          const RationalPoint& a);

/// Conservative floating-point bounding box. Used only to skip exact tests
/// between objects that provably cannot meet.
struct Box {
  double xlo, xhi, ylo, yhi;

  static Box of(const RationalPoint& p);
  void extend(const Box& o);
  bool overlaps(const Box& o) const { return xlo <= o.xhi && o.xlo <= xhi && ylo <= o.yhi && o.ylo <= yhi; }
};

std::string to_string(const Rational& q);
Rational parse_rational(const std::string& s);

}  // namespace oor
