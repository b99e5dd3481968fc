#include <gtest/gtest.h>

#include <algorithm>

#include "fixtures.hpp"

namespace oor {
namespace {

using test::make;

TEST(BuildGraph, TriangleHasThreeEdges) {
  Graph g = test::k3();
  EXPECT_EQ(g.vertex_count(), 3u);
  EXPECT_EQ(g.edge_count(), 3u);
  EXPECT_TRUE(g.has_edge(2, 0));
}

TEST(BuildGraph, RejectsDuplicateEdgeNamingThePair) {
  try {
    make(4, {{0, 1}, {0, 1}});
    FAIL() << "expected InputError";
  } catch (const InputError& e) {
    ASSERT_TRUE(e.has_pair());
    EXPECT_EQ(e.pair(), std::make_pair(Vertex{0}, Vertex{1}));
  }
}

TEST(BuildGraph, RejectsSelfLoopAndRange) {
  EXPECT_THROW(make(3, {{1, 1}}), InputError);
  EXPECT_THROW(make(3, {{0, 3}}), InputError);
  EXPECT_THROW(make(3, {{-1, 0}}), InputError);
}

TEST(BuildGraph, Octahedron) {
  Graph g = octahedron_graph();
  EXPECT_EQ(g.edge_count(), 12u);
  for (Vertex v = 0; v < 6; ++v) EXPECT_EQ(g.degree(v), 4u);
}

EmbeddedGraph embed_with(Graph g, std::vector<std::vector<Vertex>> rot, Dart outer) {
  return make_embedded(std::move(g), std::move(rot), outer);
}

std::size_t dart_total(const std::vector<Face>& faces) {
  std::size_t s = 0;
  for (const Face& f : faces) s += f.boundary.size();
  return s;
}

TEST(Faces, TriangleHasTwoFaces) {
  // (0,0) (1,0) (0,1): counterclockwise neighbour order
  auto e = embed_with(test::k3(), {{1, 2}, {2, 0}, {0, 1}}, {0, 2});
  auto faces = compute_faces(e);
  ASSERT_EQ(faces.size(), 2u);
  EXPECT_EQ(dart_total(faces), 6u);
  EXPECT_EQ(std::count_if(faces.begin(), faces.end(), [](const Face& f) { return f.is_outer; }), 1);
}

TEST(Faces, K4WithInnerVertexHasFourFaces) {
  // 0 (0,0), 1 (4,0), 2 (0,4), 3 (1,1) inside
  auto e = embed_with(test::k4(), {{1, 3, 2}, {2, 3, 0}, {0, 3, 1}, {1, 2, 0}}, {0, 2});
  auto faces = compute_faces(e);
  EXPECT_EQ(faces.size(), 4u);
  EXPECT_EQ(dart_total(faces), 12u);
}

TEST(Faces, QuadWithChordHasThreeFaces) {
  // square 0 (0,0), 1 (1,0), 2 (1,1), 3 (0,1), chord 02
  auto e = embed_with(test::quad_chord(), {{1, 2, 3}, {2, 0}, {3, 0, 1}, {0, 2}}, {0, 3});
  auto faces = compute_faces(e);
  EXPECT_EQ(faces.size(), 3u);
  for (const Face& f : faces) EXPECT_EQ(f.boundary.size(), f.is_outer ? 4u : 3u);
}

TEST(Faces, FaceIdIsSmallestDart) {
  auto e = embed_with(test::k3(), {{1, 2}, {2, 0}, {0, 1}}, {0, 2});
  for (const Face& f : compute_faces(e))
    for (const Dart& d : f.boundary) EXPECT_LE(f.id(), d);
}

TEST(Faces, InconsistentRotationRejected) {
  EXPECT_THROW(embed_with(test::k3(), {{1}, {2, 0}, {0, 1}}, {0, 2}), InputError);
  // non-planar rotation of K4 violates Euler's formula
  EXPECT_THROW(compute_faces(embed_with(test::k4(), {{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}}, {0, 1})),
               InputError);
}

TEST(Connectivity, Biconnected) {
  EXPECT_TRUE(is_biconnected(test::k3()));
  EXPECT_FALSE(is_biconnected(test::path3()));
  EXPECT_FALSE(is_biconnected(test::bowtie()));
  EXPECT_FALSE(is_biconnected(make(2, {{0, 1}})));
  EXPECT_EQ(cut_vertices(test::bowtie()), std::vector<Vertex>{2});
}

TEST(Connectivity, BlocksOfBowtie) {
  auto blocks = biconnected_components(test::bowtie());
  ASSERT_EQ(blocks.size(), 2u);
  for (const auto& b : blocks) EXPECT_EQ(b.size(), 3u);
  EXPECT_EQ(biconnected_components(test::path3()).size(), 2u);
}

}  // namespace
}  // namespace oor
