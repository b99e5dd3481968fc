#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oor/embedder.hpp"
#include "oor/generators.hpp"
#include "oor/orientation.hpp"
#include "oor/verify.hpp"
#include "support/oracles.hpp"

namespace oor {
namespace {

InnerChordalGraph ic_of(const Graph& g) { return std::get<InnerChordalGraph>(recognize(g)); }

void expect_certified(const InnerChordalGraph& ic, const ChordOrientation& o) {
  int steps = 0;
  Drawing d = embed(ic, o, [&](const AttachState& s) {
    ++steps;
    EXPECT_FALSE(s.property_violation()) << "after step " << s.step;
  });
  EXPECT_GT(steps, 0);
  EXPECT_TRUE(oracle::is_plane(d));
  EXPECT_TRUE(oracle::general_position(d.points));
  EXPECT_TRUE(oracle::realizes_rotation(d, ic.embedded));
  auto r = is_plane_oor(d);
  EXPECT_TRUE(r.verdict);
  EXPECT_TRUE(r.criteria_agree);
  EXPECT_EQ(derive_orientation(d), o);
}

TEST(Embed, TriangleIsUnitCorner) {
  auto ic = ic_of(test::k3());
  Drawing d = embed(ic, {});
  ASSERT_EQ(d.points.size(), 3u);
  std::vector<RationalPoint> want{{0, 0}, {1, 0}, {0, 1}};
  EXPECT_EQ(d.points, want);
  EXPECT_TRUE(is_plane_oor(d).verdict);
}

TEST(Embed, K4RootInnerPoint) {
  auto ic = ic_of(test::k4());
  Drawing d = embed(ic, {});
  EXPECT_TRUE(is_plane_oor(d).verdict);
  Vertex m = ic.inner_vertices.at(0);
  EXPECT_EQ(d.points[m], RationalPoint(Rational(1, 4), Rational(1, 4)));
}

TEST(Embed, FanGreedy) {
  auto ic = ic_of(fan_graph(6));
  expect_certified(ic, greedy_outerplanar(ic));
}

TEST(Embed, QuadChordTowardEitherEnd) {
  auto ic = ic_of(test::quad_chord());
  for (Vertex t : {0, 2}) {
    ChordOrientation o;
    o.direction[Edge(0, 2)] = t;
    expect_certified(ic, o);
  }
}

TEST(Embed, StarAndChains) {
  for (const auto& spec : {InstanceSpec{Family::k4_star, 1, 0}, InstanceSpec{Family::k4_star, 3, 0},
                           InstanceSpec{Family::k4_chain, 2, 0}, InstanceSpec{Family::k4_chain, 6, 0}}) {
    auto ic = ic_of(generate(spec).graph);
    auto o = solve_dp(build_construction_tree(ic));
    ASSERT_TRUE(o);
    expect_certified(ic, *o);
  }
}

TEST(Embed, EveryValidOrientationOfSmallTrees) {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    auto ic = ic_of(generate({Family::random_construction_tree, 6, seed}).graph);
    if (auto o = solve_dp(build_construction_tree(ic))) expect_certified(ic, *o);
  }
}

TEST(Embed, InvalidOrientationRejected) {
  auto ic = ic_of(test::k4_star());
  ChordOrientation o;
  for (const Edge& c : ic.chords) o.direction[c] = c.u;  // not cyclic
  ASSERT_FALSE(validate_orientation(ic, o).valid);
  EXPECT_THROW(embed(ic, o), InputError);
}

TEST(Derive, GoodQuadTowardA) {
  auto o = derive_orientation(test::good_quad());
  ASSERT_EQ(o.direction.size(), 1u);
  EXPECT_EQ(o.direction.at(Edge(0, 2)), 0);
  EXPECT_TRUE(derive_orientation(test::drawing({{0, 0}, {1, 0}, {0, 1}}, test::k3())).direction.empty());
}

TEST(Derive, UnitSquareRejected) { EXPECT_THROW(derive_orientation(test::unit_square()), InputError); }

TEST(Outerplanar, PathBowtieTriangle) {
  for (const Graph& g : {test::path3(), test::bowtie(), test::k3(), test::make(2, {{0, 1}}), test::make(1, {})}) {
    auto r = represent_outerplanar(g);
    ASSERT_TRUE(accepted(r));
    const Drawing& d = std::get<Drawing>(r);
    EXPECT_EQ(d.graph, g);
    EXPECT_TRUE(oracle::is_plane(d));
    EXPECT_TRUE(oracle::general_position(d.points));
    if (g.vertex_count() < 2) continue;
    DrawingAnalysis a(d);
    for (Vertex p = 0; p < static_cast<Vertex>(d.points.size()); ++p)
      for (Vertex q = p + 1; q < static_cast<Vertex>(d.points.size()); ++q)
        if (!g.has_edge(p, q)) EXPECT_TRUE(segment_intersects_outer(a, p, q)) << p << " " << q;
  }
}

TEST(Outerplanar, TriangleUnchanged) {
  auto r = represent_outerplanar(test::k3());
  ASSERT_TRUE(accepted(r));
  std::vector<RationalPoint> want{{0, 0}, {1, 0}, {0, 1}};
  EXPECT_EQ(std::get<Drawing>(r).points, want);
}

TEST(Outerplanar, RejectsNonChordalAndK4) {
  EXPECT_EQ(std::get<RejectReason>(represent_outerplanar(cycle_graph(4))).kind, RejectKind::chordless_cycle);
  EXPECT_FALSE(accepted(represent_outerplanar(test::k4())));
  EXPECT_FALSE(accepted(represent_outerplanar(test::make(4, {{0, 1}, {2, 3}}))));
}

TEST(Outerplanar, TreeOfBlocks) {
  // triangles and bridges hanging off a central fan
  Graph g = test::make(10, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 5}, {1, 6}, {6, 7}, {6, 8}, {7, 8}, {0, 9}});
  auto r = represent_outerplanar(g);
  ASSERT_TRUE(accepted(r));
  const Drawing& d = std::get<Drawing>(r);
  EXPECT_TRUE(oracle::is_plane(d));
  DrawingAnalysis a(d);
  for (Vertex p = 0; p < 10; ++p)
    for (Vertex q = p + 1; q < 10; ++q)
      if (!g.has_edge(p, q)) EXPECT_TRUE(segment_intersects_outer(a, p, q));
}

}  // namespace
}  // namespace oor
