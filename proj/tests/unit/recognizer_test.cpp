#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>

#include "fixtures.hpp"
#include "oor/generators.hpp"

namespace oor {
namespace {

using test::make;

RejectKind kind_of(const Graph& g) { return std::get<RejectReason>(recognize(g)).kind; }

int k4_count(const ConstructionTree& t) {
  return static_cast<int>(std::count_if(t.nodes.begin(), t.nodes.end(), [](const TreeNode& n) { return n.kind == NodeKind::K4; }));
}

bool is_chordless_cycle(const Graph& g, const std::vector<Vertex>& c) {
  if (c.size() < 4) return false;
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = i + 1; j < c.size(); ++j) {
      bool consecutive = j == i + 1 || (i == 0 && j + 1 == c.size());
      if (g.has_edge(c[i], c[j]) != consecutive) return false;
    }
  return true;
}

TEST(Recognize, OctahedronInnerDegree) { EXPECT_EQ(kind_of(octahedron_graph()), RejectKind::inner_degree_violation); }

TEST(Recognize, C4ChordlessWithWitness) {
  Graph c4 = cycle_graph(4);
  auto r = std::get<RejectReason>(recognize(c4));
  EXPECT_EQ(r.kind, RejectKind::chordless_cycle);
  EXPECT_TRUE(is_chordless_cycle(c4, r.witness));
}

TEST(Recognize, LongCycleWitnessIsChordless) {
  Graph c7 = cycle_graph(7);
  auto r = std::get<RejectReason>(recognize(c7));
  EXPECT_EQ(r.kind, RejectKind::chordless_cycle);
  EXPECT_TRUE(is_chordless_cycle(c7, r.witness));
}

TEST(Recognize, NotBiconnected) {
  EXPECT_EQ(kind_of(test::path3()), RejectKind::not_biconnected);
  EXPECT_EQ(kind_of(test::bowtie()), RejectKind::not_biconnected);
  EXPECT_EQ(kind_of(make(2, {{0, 1}})), RejectKind::not_biconnected);
}

TEST(Recognize, FanSix) {
  auto r = recognize(fan_graph(6));
  ASSERT_TRUE(accepted(r));
  const auto& ic = test::accepted_ic(r);
  EXPECT_EQ(ic.chords.size(), 3u);
  EXPECT_TRUE(ic.inner_vertices.empty());
  auto t = build_construction_tree(ic);
  EXPECT_EQ(t.nodes.size(), 4u);
  EXPECT_EQ(t.edges.size(), 3u);
  for (int i = 0; i < 4; ++i) EXPECT_LE(t.tree_degree(i), 2);
  EXPECT_EQ(k4_count(t), 0);
  check_inner_chordal(ic);
}

TEST(Recognize, CanonicalOuterCycle) {
  auto rec = recognize(fan_graph(6));
  const auto& ic = test::accepted_ic(rec);
  ASSERT_EQ(ic.outer_cycle.size(), 6u);
  EXPECT_EQ(ic.outer_cycle[0], 0);
  EXPECT_EQ(ic.outer_cycle[1], 1);
}

TEST(Recognize, K4IsSingleNode) {
  auto r = recognize(test::k4());
  ASSERT_TRUE(accepted(r));
  auto t = build_construction_tree(test::accepted_ic(r));
  ASSERT_EQ(t.nodes.size(), 1u);
  EXPECT_EQ(t.nodes[0].kind, NodeKind::K4);
  EXPECT_TRUE(t.edges.empty());
}

TEST(Recognize, K4StarTree) {
  auto r = recognize(test::k4_star());
  ASSERT_TRUE(accepted(r));
  auto t = build_construction_tree(test::accepted_ic(r));
  ASSERT_EQ(t.nodes.size(), 4u);
  int center = -1;
  for (int i = 0; i < 4; ++i)
    if (t.nodes[i].kind == NodeKind::K4) center = i;
  ASSERT_GE(center, 0);
  EXPECT_EQ(t.tree_degree(center), 3);
  EXPECT_EQ(k4_count(t), 1);
}

TEST(Recognize, WheelRejected) {
  // W5: hub of degree 5 inside a 5-cycle
  Graph w = make(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {5, 0}, {5, 1}, {5, 2}, {5, 3}, {5, 4}});
  EXPECT_FALSE(accepted(recognize(w)));
}

TEST(Recognize, MergeRebuildsGraph) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Instance inst = generate({Family::random_construction_tree, 1 + static_cast<std::int64_t>(seed % 15), seed});
    auto r = recognize(inst.graph);
    ASSERT_TRUE(accepted(r)) << seed;
    const auto& ic = test::accepted_ic(r);
    check_inner_chordal(ic);
    auto t = build_construction_tree(ic);
    EXPECT_EQ(merge(t), inst.graph);
    EXPECT_EQ(k4_count(t), k4_count(*inst.tree));
    std::multiset<Edge> a, b;
    for (const auto& e : t.edges) a.insert(e.chord);
    for (const auto& e : inst.tree->edges) b.insert(e.chord);
    EXPECT_EQ(a, b);
    EXPECT_EQ(t.edges.size(), ic.chords.size());
  }
}

TEST(Peel, SingleK4) {
  auto r = peel_inner_vertices(test::k4());
  ASSERT_TRUE(accepted(r));
  const auto& p = std::get<PeelResult>(r);
  EXPECT_EQ(p.removed.size(), 1u);
  EXPECT_EQ(p.marked.size(), 1u);
  EXPECT_EQ(p.core.edge_count(), 3u);
}

TEST(Peel, FanRemovesNothing) {
  auto r = peel_inner_vertices(fan_graph(6));
  ASSERT_TRUE(accepted(r));
  EXPECT_TRUE(std::get<PeelResult>(r).removed.empty());
}

TEST(Peel, K4PlusTriangleRemovesOneSymmetricVertex) {
  // K4 on 0..3 and triangle 0 1 4 glued on edge 01; 2 and 3 are symmetric
  Graph g = make(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}, {1, 4}});
  auto r = peel_inner_vertices(g);
  ASSERT_TRUE(accepted(r));
  const auto& p = std::get<PeelResult>(r);
  ASSERT_EQ(p.removed.size(), 1u);
  EXPECT_TRUE(p.removed[0] == 2 || p.removed[0] == 3);
  EXPECT_TRUE(accepted(recognize_maximal_outerplanar(p.core)));
}

TEST(MaximalOuterplanar, Examples) {
  auto k3 = recognize_maximal_outerplanar(test::k3());
  ASSERT_TRUE(accepted(k3));
  EXPECT_EQ(std::get<MaximalOuterplanar>(k3).triangles.size(), 1u);
  auto fan = recognize_maximal_outerplanar(fan_graph(6));
  ASSERT_TRUE(accepted(fan));
  EXPECT_EQ(std::get<MaximalOuterplanar>(fan).dual_edges.size(), 3u);
  EXPECT_FALSE(accepted(recognize_maximal_outerplanar(test::k4())));
}

TEST(ChordlessCycle, FinderOnChordalAndNot) {
  EXPECT_TRUE(find_chordless_cycle(fan_graph(8)).empty());
  EXPECT_TRUE(is_chordless_cycle(cycle_graph(5), find_chordless_cycle(cycle_graph(5))));
}

}  // namespace
}  // namespace oor
