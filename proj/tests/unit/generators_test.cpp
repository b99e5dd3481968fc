#include <gtest/gtest.h>

#include <algorithm>

#include "oor/generators.hpp"
#include "oor/io.hpp"
#include "oor/orientation.hpp"

namespace oor {
namespace {

TEST(Generate, FanSix) {
  Graph g = generate({Family::fan, 6, 123}).graph;
  EXPECT_EQ(g.vertex_count(), 6u);
  EXPECT_EQ(g.edge_count(), 9u);
}

TEST(Generate, Octahedron) {
  Graph g = generate({Family::octahedron, 0, 9}).graph;
  EXPECT_EQ(g.vertex_count(), 6u);
  EXPECT_EQ(g.edge_count(), 12u);
  for (Vertex v = 0; v < 6; ++v) EXPECT_EQ(g.degree(v), 4u);
}

TEST(Generate, TripleGadgetShape) {
  Instance inst = generate({Family::triple_k4_gadget, 0, 0});
  EXPECT_EQ(inst.graph.vertex_count(), 13u);
  ASSERT_TRUE(inst.tree);
  int k4_deg3 = 0, k4 = 0;
  for (int i = 0; i < static_cast<int>(inst.tree->nodes.size()); ++i) {
    if (inst.tree->nodes[i].kind != NodeKind::K4) continue;
    ++k4;
    k4_deg3 += inst.tree->tree_degree(i) == 3;
  }
  EXPECT_EQ(k4, 3);
  EXPECT_EQ(k4_deg3, 3);
  auto ic = std::get<InnerChordalGraph>(recognize(inst.graph));
  EXPECT_FALSE(enumerate_exists(ic));
}

TEST(Generate, SizeBounds) {
  EXPECT_THROW(generate({Family::fan, 2, 0}), InputError);
  EXPECT_THROW(generate({Family::random_maximal_outerplanar, 0, 0}), InputError);
  EXPECT_THROW(generate({Family::k4_chain, 0, 0}), InputError);
  EXPECT_THROW(generate({Family::random_construction_tree, -1, 0}), InputError);
}

TEST(Generate, DeterministicBytes) {
  for (Family f : all_families()) {
    InstanceSpec spec{f, 9, 77};
    std::string a = to_json(generate(spec), spec).dump();
    std::string b = to_json(generate(spec), spec).dump();
    EXPECT_EQ(a, b) << to_string(f);
  }
  InstanceSpec s1{Family::random_maximal_outerplanar, 30, 1}, s2{Family::random_maximal_outerplanar, 30, 2};
  EXPECT_NE(generate(s1).graph, generate(s2).graph);
}

TEST(Generate, FamilyNames) {
  for (Family f : all_families()) EXPECT_EQ(parse_family(to_string(f)), f);
  EXPECT_FALSE(parse_family("wheel"));
}

TEST(Generate, RandomMaximalOuterplanarIsMaximalOuterplanar) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Graph g = generate({Family::random_maximal_outerplanar, 3 + static_cast<std::int64_t>(seed * 7), seed}).graph;
    EXPECT_EQ(g.edge_count(), 2 * g.vertex_count() - 3);
    EXPECT_TRUE(accepted(recognize_maximal_outerplanar(g)));
  }
}

TEST(Generate, TreeFamiliesRoundTrip) {
  for (Family f : {Family::k4_chain, Family::k4_star, Family::random_construction_tree, Family::triple_k4_gadget}) {
    for (std::int64_t size : {1, 4, 9}) {
      for (std::uint64_t seed = 0; seed < 5; ++seed) {
        Instance inst = generate({f, size, seed});
        ASSERT_TRUE(inst.tree);
        EXPECT_EQ(merge(*inst.tree), inst.graph);
        auto r = recognize(inst.graph);
        ASSERT_TRUE(accepted(r)) << to_string(f) << " " << size;
        auto t = build_construction_tree(std::get<InnerChordalGraph>(r));
        auto kinds = [](const ConstructionTree& t) {
          std::vector<int> k;
          for (const auto& n : t.nodes) k.push_back(n.kind == NodeKind::K4);
          std::sort(k.begin(), k.end());
          return k;
        };
        EXPECT_EQ(kinds(t), kinds(*inst.tree));
      }
    }
  }
}

}  // namespace
}  // namespace oor
