#include <gtest/gtest.h>

#include "oor/geometry.hpp"

namespace oor {
namespace {

RationalPoint P(long x, long y) { return {x, y}; }
RationalPoint Q(const char* x, const char* y) { return {parse_rational(x), parse_rational(y)}; }

Triangle D() { return Triangle{{P(0, 0), P(4, 0), P(0, 3)}}; }

TEST(Rational, CanonicalStrings) {
  EXPECT_EQ(to_string(parse_rational("6/4")), "3/2");
  EXPECT_EQ(to_string(parse_rational("-10/5")), "-2/1");
  EXPECT_THROW(parse_rational("1/0"), InputError);
  EXPECT_THROW(parse_rational("x"), InputError);
  EXPECT_THROW(parse_rational(""), InputError);
}

TEST(Orient, Signs) {
  EXPECT_EQ(orient(P(0, 0), P(1, 0), P(0, 1)), 1);
  EXPECT_EQ(orient(P(0, 0), P(0, 1), P(1, 0)), -1);
  EXPECT_EQ(orient(P(0, 0), P(1, 1), P(3, 3)), 0);
}

TEST(Orient, FilterFallsBackOnNearDegenerate) {
  // collinear with huge coordinates and a tiny offset: doubles cannot decide
  Rational big = Rational(1) << 200;
  RationalPoint a(Rational(0), Rational(0)), b(big, big);
  RationalPoint c(Rational(big + 1), Rational(big + 1));
  EXPECT_EQ(orient(a, b, c), 0);
  RationalPoint c2(Rational(big + 1), Rational(big + 2));
  EXPECT_EQ(orient(a, b, c2), 1);
  RationalPoint tiny(Rational(1, 3), Rational(mpz_class(1), mpz_class(1) << 1100));
  EXPECT_EQ(orient(P(0, 0), P(1, 0), tiny), 1);
}

TEST(Region, CornerCones) {
  Region r0 = region_of(D(), 0);
  EXPECT_TRUE(r0.contains(P(-1, -1)));
  EXPECT_FALSE(r0.contains(P(1, -5)));
  EXPECT_FALSE(r0.contains(P(-1, 1)));
  Region r1 = region_of(D(), P(4, 0));
  // y < 0 and 3x + 4y > 12
  EXPECT_TRUE(r1.contains(P(6, -1)));
  EXPECT_FALSE(r1.contains(P(3, -1)));
  EXPECT_FALSE(r1.contains(P(6, 1)));
  // boundary is excluded
  EXPECT_FALSE(r1.contains(P(8, -3)));
}

TEST(Region, DegenerateTriangleThrows) {
  Triangle flat{{P(0, 0), P(1, 1), P(2, 2)}};
  EXPECT_THROW(region_of(flat, 0), DegenerateError);
}

TEST(Segments, Intersections) {
  EXPECT_TRUE(segments_intersect(P(0, 0), P(2, 2), P(0, 2), P(2, 0)));
  EXPECT_TRUE(segments_intersect(P(0, 0), P(2, 0), P(1, 0), P(1, 5)));  // touching
  EXPECT_TRUE(segments_intersect(P(0, 0), P(2, 0), P(1, 0), P(3, 0)));  // overlap
  EXPECT_FALSE(segments_intersect(P(0, 0), P(1, 0), P(2, 0), P(3, 0)));
  EXPECT_FALSE(segments_intersect(P(0, 0), P(1, 1), P(0, 1), P(-1, 3)));
  auto t = line_intersection_param(P(0, 0), P(4, 0), P(1, -1), P(1, 1));
  ASSERT_TRUE(t);
  EXPECT_EQ(*t, Rational(1, 4));
  EXPECT_FALSE(line_intersection_param(P(0, 0), P(1, 0), P(0, 1), P(1, 1)));
}

TEST(Polygon, AreaWindingSimple) {
  std::vector<RationalPoint> sq{P(0, 0), P(2, 0), P(2, 2), P(0, 2)};
  EXPECT_EQ(signed_area2(sq), 8);
  EXPECT_EQ(winding_number(sq, P(1, 1)), 1);
  EXPECT_EQ(locate(sq, P(1, 1)), Location::inside);
  EXPECT_EQ(locate(sq, P(2, 1)), Location::boundary);
  EXPECT_EQ(locate(sq, P(3, 1)), Location::outside);
  EXPECT_TRUE(is_simple(sq));
  std::vector<RationalPoint> bow{P(0, 0), P(2, 2), P(2, 0), P(0, 2)};
  EXPECT_FALSE(is_simple(bow));
}

TEST(GeneralPosition, Triples) {
  EXPECT_FALSE(find_collinear_triple({P(0, 0), P(1, 0), P(0, 1)}));
  auto t = find_collinear_triple({P(0, 0), P(5, 7), P(1, 1), P(2, 2)});
  ASSERT_TRUE(t);
  EXPECT_EQ((*t)[1] + (*t)[2] + (*t)[0], 0u + 2u + 3u);
  EXPECT_TRUE(collinear_with({P(0, 0), P(1, 1)}, Q("2", "2")));
  EXPECT_FALSE(collinear_with({P(0, 0), P(1, 1)}, Q("2", "3")));
}

TEST(Box, ConservativeAroundRationals) {
  RationalPoint p = Q("1/3", "-2/7");
  Box b = Box::of(p);
  EXPECT_LE(b.xlo, 1.0 / 3);
  EXPECT_GE(b.xhi, 1.0 / 3);
  EXPECT_TRUE(b.overlaps(Box::of(p)));
}

}  // namespace
}  // namespace oor
