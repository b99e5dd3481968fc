#include <gtest/gtest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "oor/embedder.hpp"
#include "oor/orientation.hpp"
#include "oor/verify.hpp"
#include "support/oracles.hpp"

namespace oor {
namespace {

TEST(ChordGood, GoodQuadTowardA) {
  Drawing d = test::good_quad();
  auto g = chord_is_good(d, Edge(0, 2));
  EXPECT_TRUE(g.good);
  ASSERT_TRUE(g.toward);
  EXPECT_EQ(*g.toward, 0);
  EXPECT_TRUE(g.mirror_consistent);
}

TEST(ChordGood, UnitSquareNotGood) {
  Drawing d = test::unit_square();
  auto g = chord_is_good(d, Edge(0, 2));
  EXPECT_FALSE(g.good);
  EXPECT_FALSE(g.toward);
}

TEST(ChordGood, OuterEdgeIsNotAChord) { EXPECT_THROW(chord_is_good(test::good_quad(), Edge(0, 1)), InputError); }

TEST(NonEdge, SquareDiagonalCovered) {
  Drawing d = test::unit_square();
  EXPECT_FALSE(segment_intersects_outer(d, 1, 3));
  EXPECT_EQ(oracle::leaves_triangles(d, 1, 3), false);
}

TEST(NonEdge, GoodQuadDiagonalLeaves) {
  Drawing d = test::good_quad();
  EXPECT_TRUE(segment_intersects_outer(d, 1, 3));
  EXPECT_EQ(oracle::leaves_triangles(d, 1, 3), true);
}

TEST(NonEdge, ThroughVertexIsDegenerate) {
  // non-edge 02 runs along edges 01 and 12
  Drawing d = test::drawing({{0, 0}, {1, 1}, {2, 2}, {2, 0}}, test::make(4, {{0, 1}, {1, 2}, {0, 3}, {1, 3}, {2, 3}}));
  EXPECT_THROW(segment_intersects_outer(d, 0, 2), DegenerateError);
}

TEST(NonEdge, RejectsNonPlane) {
  Drawing d = test::drawing({{0, 0}, {2, 2}, {2, 0}, {0, 2}}, test::make(4, {{0, 1}, {2, 3}, {0, 2}}));
  EXPECT_THROW(segment_intersects_outer(d, 0, 3), InputError);
}

TEST(Report, SquareFailsBothCriteria) {
  auto r = is_plane_oor(test::unit_square());
  EXPECT_TRUE(r.planar);
  EXPECT_TRUE(r.general_position);
  EXPECT_FALSE(r.local_ok);
  EXPECT_FALSE(r.exhaustive_ok);
  EXPECT_TRUE(r.equivalence_applies);
  EXPECT_TRUE(r.criteria_agree);
  EXPECT_FALSE(r.verdict);
}

TEST(Report, GoodQuadPasses) {
  auto r = is_plane_oor(test::good_quad());
  EXPECT_TRUE(r.verdict);
  EXPECT_TRUE(r.criteria_agree);
  ASSERT_EQ(r.non_edges.size(), 1u);
  EXPECT_TRUE(r.non_edges[0].intersects_outer);
}

TEST(Report, TriangleVacuous) {
  auto r = is_plane_oor(test::drawing({{0, 0}, {1, 0}, {0, 1}}, test::k3()));
  EXPECT_TRUE(r.verdict);
  EXPECT_TRUE(r.non_edges.empty());
  EXPECT_TRUE(r.chords.empty());
}

TEST(Report, CrossingAndCollinear) {
  auto crossing = is_plane_oor(test::drawing({{0, 0}, {2, 2}, {2, 0}, {0, 2}}, test::make(4, {{0, 1}, {2, 3}})));
  EXPECT_FALSE(crossing.planar);
  EXPECT_TRUE(crossing.crossing);
  EXPECT_FALSE(crossing.verdict);
  auto col = is_plane_oor(test::drawing({{0, 0}, {1, 1}, {2, 2}, {3, 0}}, test::make(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}})));
  EXPECT_FALSE(col.general_position);
  EXPECT_FALSE(col.verdict);
}

TEST(Report, MovedVertexBreaksBothCriteria) {
  auto ic = std::get<InnerChordalGraph>(recognize(fan_graph(6)));
  Drawing d = embed(ic, greedy_outerplanar(ic));
  ASSERT_TRUE(is_plane_oor(d).verdict);
  // slide vertices around on a grid until some non-edge gets trapped inside
  // the triangles while the drawing stays plane
  int broken = 0;
  for (std::size_t v = 0; v < d.points.size(); ++v) {
    for (int x = -8; x <= 8; ++x) {
      for (int y = -8; y <= 8; ++y) {
        Drawing m = d;
        m.points[v] = RationalPoint(Rational(x, 2), Rational(y, 2));
        if (!oracle::is_plane(m) || !oracle::general_position(m.points)) continue;
        auto r = is_plane_oor(m);
        EXPECT_TRUE(r.criteria_agree);
        if (!r.local_ok) {
          EXPECT_FALSE(r.exhaustive_ok);
          ++broken;
        }
      }
    }
  }
  EXPECT_GT(broken, 0);
}

TEST(Rotation, MatchesEmbeddingOfEmbedOutput) {
  for (int n : {3, 6, 12}) {
    auto ic = std::get<InnerChordalGraph>(recognize(fan_graph(n)));
    Drawing d = embed(ic, greedy_outerplanar(ic));
    auto got = geometric_rotation(d);
    ASSERT_EQ(got.size(), ic.embedded.rotation.size());
    for (std::size_t v = 0; v < got.size(); ++v) {
      auto want = ic.embedded.rotation[v];
      ASSERT_EQ(got[v].size(), want.size());
      if (want.empty()) continue;
      // cyclic lists: align on the first entry
      auto it = std::find(got[v].begin(), got[v].end(), want[0]);
      ASSERT_NE(it, got[v].end());
      std::rotate(got[v].begin(), it, got[v].end());
      EXPECT_EQ(got[v], want) << "vertex " << v;
    }
    EXPECT_TRUE(oracle::realizes_rotation(d, ic.embedded));
  }
}

}  // namespace
}  // namespace oor
