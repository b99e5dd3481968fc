#include <gtest/gtest.h>

#include <regex>

#include "fixtures.hpp"
#include "oor/embedder.hpp"
#include "oor/io.hpp"
#include "oor/obstacle.hpp"
#include "oor/orientation.hpp"
#include "oor/svg.hpp"

namespace oor {
namespace {

std::size_t count(const std::string& s, const std::string& what) {
  std::size_t n = 0;
  for (auto pos = s.find(what); pos != std::string::npos; pos = s.find(what, pos + 1)) ++n;
  return n;
}

TEST(Json, GraphRoundTrip) {
  Graph g = fan_graph(6);
  Json j = to_json(g);
  EXPECT_EQ(j["n"], 6);
  EXPECT_EQ(graph_from_json(j), g);
  EXPECT_EQ(graph_from_json(parse_json(j.dump())), g);
}

TEST(Json, MalformedGraphs) {
  EXPECT_THROW(graph_from_json(parse_json(R"({"n": 3})")), InputError);
  EXPECT_THROW(graph_from_json(parse_json(R"({"n": 3, "edges": [[0, 0]]})")), InputError);
  EXPECT_THROW(graph_from_json(parse_json(R"({"n": "x", "edges": []})")), InputError);
  EXPECT_THROW(graph_from_json(parse_json(R"({"n": 3, "edges": [[0, 1, 2]]})")), InputError);
  EXPECT_THROW(parse_json("{"), InputError);
}

TEST(Json, EmbeddedGraphRotationValidated) {
  auto ic = std::get<InnerChordalGraph>(recognize(fan_graph(5)));
  Json j = to_json(ic.embedded);
  EmbeddedGraph e = embedded_from_json(j);
  EXPECT_EQ(e.rotation, ic.embedded.rotation);
  EXPECT_EQ(e.outer, ic.embedded.outer);
  j["rotation"][0] = Json::array({1});
  EXPECT_THROW(graph_from_json(j), InputError);
}

TEST(Json, DrawingUsesLowestTermsStrings) {
  Drawing d = test::drawing({{0, 0}, {1, 0}, {0, 1}}, test::k3());
  d.points[2] = RationalPoint(Rational(2, 4), Rational(-6, 3));
  Json j = to_json(d);
  EXPECT_EQ(j["points"][2][0], "1/2");
  EXPECT_EQ(j["points"][2][1], "-2/1");
  EXPECT_EQ(drawing_from_json(j), d);
}

TEST(Json, DrawingRoundTripIsBitStable) {
  auto ic = std::get<InnerChordalGraph>(recognize(fan_graph(12)));
  Drawing d = embed(ic, greedy_outerplanar(ic));
  std::string text = to_json(d).dump();
  Drawing back = drawing_from_json(parse_json(text));
  EXPECT_EQ(back, d);
  EXPECT_EQ(to_json(back).dump(), text);
  EXPECT_TRUE(is_plane_oor(back).verdict);
}

TEST(Json, BadRationals) {
  EXPECT_THROW(drawing_from_json(parse_json(R"({"points": [["1/0", "1"]], "edges": []})")), InputError);
  EXPECT_THROW(drawing_from_json(parse_json(R"({"points": [["a", "1"]], "edges": []})")), InputError);
  EXPECT_THROW(drawing_from_json(parse_json(R"({"points": [["1"]], "edges": []})")), InputError);
}

TEST(Json, OrientationRoundTrip) {
  auto ic = std::get<InnerChordalGraph>(recognize(fan_graph(6)));
  ChordOrientation o = greedy_outerplanar(ic);
  Json j = to_json(o);
  EXPECT_EQ(j["chords"][0][1], "->");
  EXPECT_EQ(orientation_from_json(j), o);
  EXPECT_THROW(orientation_from_json(parse_json(R"({"chords": [[[0, 2], "->", 5]]})")), InputError);
  EXPECT_THROW(orientation_from_json(parse_json(R"({"chords": [[[0, 2], "<-", 0]]})")), InputError);
}

TEST(Json, TreeRoundTrip) {
  auto ic = std::get<InnerChordalGraph>(recognize(generate({Family::k4_star, 1, 0}).graph));
  ConstructionTree t = build_construction_tree(ic);
  Json j = to_json(t);
  EXPECT_EQ(j["nodes"].size(), 4u);
  ConstructionTree back = tree_from_json(j);
  EXPECT_EQ(merge(back), merge(t));
  EXPECT_EQ(to_json(back), j);
}

TEST(Json, PolygonAndReason) {
  SimplePolygon p{{{0, 0}, {1, 0}, {0, 1}}};
  EXPECT_EQ(polygon_from_json(to_json(p)).vertices, p.vertices);
  auto r = std::get<RejectReason>(recognize(octahedron_graph()));
  EXPECT_EQ(to_json(r)["kind"], "inner_degree_violation");
}

TEST(Json, ReportFields) {
  Json j = to_json(is_plane_oor(test::good_quad()));
  EXPECT_EQ(j["verdict"], true);
  EXPECT_EQ(j["chords"].size(), 1u);
  EXPECT_EQ(j["non_edges"].size(), 1u);
}

TEST(Svg, SegmentCounts) {
  std::string k3 = render_svg(test::drawing({{0, 0}, {1, 0}, {0, 1}}, test::k3()));
  EXPECT_EQ(count(k3, "<line"), 3u);
  EXPECT_EQ(count(k3, "<polygon"), 0u);
  EXPECT_EQ(count(render_svg(test::good_quad()), "<line"), 5u);
}

TEST(Svg, FanWithGrayObstacleLayer) {
  auto ic = std::get<InnerChordalGraph>(recognize(fan_graph(6)));
  Drawing d = embed(ic, greedy_outerplanar(ic));
  std::string svg = render_svg(d, build_obstacle(d));
  EXPECT_EQ(count(svg, "<polygon"), 1u);
  EXPECT_EQ(count(svg, "id=\"obstacle\""), 1u);
  EXPECT_EQ(count(svg, "fill=\"#b0b0b0\""), 1u);
  EXPECT_EQ(count(svg, "<line"), 9u);
  EXPECT_EQ(count(svg, "<circle"), 6u);
  EXPECT_EQ(svg, render_svg(d, build_obstacle(d)));
}

}  // namespace
}  // namespace oor
