#include "oor/io.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace oor {

namespace {

// nlohmann throws its own type errors; callers only ever see InputError.
template <class F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed ") + what + ": " + e.what());
  }
}

Vertex vertex_from(const Json& j, std::size_t n) {
  const auto v = j.get<std::int64_t>();
  if (v < 0 || static_cast<std::size_t>(v) >= n) throw InputError("vertex " + std::to_string(v) + " out of range");
  return static_cast<Vertex>(v);
}

std::vector<std::pair<Vertex, Vertex>> edge_list(const Json& j) {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (const Json& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw InputError("edge must be a pair");
    out.emplace_back(e[0].get<Vertex>(), e[1].get<Vertex>());
  }
  return out;
}

Json edges_json(const Graph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return edges;
}

std::size_t count_from(const Json& j) {
  const auto n = j.at("n").get<std::int64_t>();
  if (n < 0) throw InputError("negative vertex count");
  return static_cast<std::size_t>(n);
}

}  // namespace

Json point_to_json(const RationalPoint& p) { return Json::array({to_string(p.x), to_string(p.y)}); }

RationalPoint point_from_json(const Json& j) {
  return guarded("point", [&] {
    if (!j.is_array() || j.size() != 2) throw InputError("point must be a pair of rationals");
    auto coord = [](const Json& c) {
      return c.is_string() ? parse_rational(c.get<std::string>()) : Rational(c.get<std::int64_t>());
    };
    return RationalPoint(coord(j[0]), coord(j[1]));
  });
}

Json to_json(const Graph& g) { return {{"n", g.vertex_count()}, {"edges", edges_json(g)}}; }

Graph graph_from_json(const Json& j) {
  if (j.contains("rotation")) return embedded_from_json(j).graph;
  return guarded("graph", [&] { return build_graph(count_from(j), edge_list(j)); });
}

Json to_json(const EmbeddedGraph& g) {
  Json j = to_json(g.graph);
  j["rotation"] = g.rotation;
  j["outer_face_edge"] = Json::array({g.outer.tail, g.outer.head, "left"});
  return j;
}

EmbeddedGraph embedded_from_json(const Json& j) {
  return guarded("embedded graph", [&] {
    const std::size_t n = count_from(j);
    Graph g = build_graph(n, edge_list(j));
    std::vector<std::vector<Vertex>> rotation;
    for (const Json& r : j.at("rotation")) {
      rotation.emplace_back();
      for (const Json& v : r) rotation.back().push_back(vertex_from(v, n));
    }
    Dart outer{};
    if (j.contains("outer_face_edge")) {
      const Json& o = j["outer_face_edge"];
      if (!o.is_array() || o.size() < 2) throw InputError("outer_face_edge must be [tail, head, side]");
      outer = {vertex_from(o[0], n), vertex_from(o[1], n)};
      if (o.size() > 2 && o[2].get<std::string>() == "right") std::swap(outer.tail, outer.head);
    } else if (g.edge_count() > 0) {
      outer = {g.edges()[0].u, g.edges()[0].v};
    }
    return make_embedded(std::move(g), std::move(rotation), outer);
  });
}

Json to_json(const InnerChordalGraph& ic) {
  Json j = to_json(ic.embedded);
  j["outer_cycle"] = ic.outer_cycle;
  j["inner_vertices"] = ic.inner_vertices;
  Json chords = Json::array();
  for (const Edge& e : ic.chords) chords.push_back({e.u, e.v});
  j["chords"] = chords;
  return j;
}

Json to_json(const ConstructionTree& t) {
  Json nodes = Json::array();
  for (const TreeNode& node : t.nodes) {
    Json n = {{"kind", node.kind == NodeKind::K4 ? "K4" : "K3"}, {"vertices", node.triangle}};
    if (node.inner) n["inner"] = *node.inner;
    nodes.push_back(n);
  }
  Json edges = Json::array();
  for (const TreeEdge& e : t.edges) edges.push_back({e.a, e.b, {e.chord.u, e.chord.v}});
  return {{"n", t.vertex_count}, {"nodes", nodes}, {"tree_edges", edges}};
}

ConstructionTree tree_from_json(const Json& j) {
  return guarded("construction tree", [&] {
    ConstructionTree t;
    std::size_t n = 0;
    for (const Json& node : j.at("nodes")) {
      TreeNode out;
      const std::string kind = node.at("kind").get<std::string>();
      if (kind != "K3" && kind != "K4") throw InputError("node kind must be K3 or K4");
      out.kind = kind == "K4" ? NodeKind::K4 : NodeKind::K3;
      const Json& vs = node.at("vertices");
      if (vs.size() != 3) throw InputError("node needs three outer vertices");
      for (int i = 0; i < 3; ++i) out.triangle[i] = vs[i].get<Vertex>();
      std::sort(out.triangle.begin(), out.triangle.end());
      if (out.kind == NodeKind::K4) out.inner = node.at("inner").get<Vertex>();
      for (Vertex v : out.vertices()) {
        if (v < 0) throw InputError("negative vertex id");
        n = std::max(n, static_cast<std::size_t>(v) + 1);
      }
      t.nodes.push_back(out);
    }
    t.vertex_count = j.contains("n") ? count_from(j) : n;
    if (n > t.vertex_count) throw InputError("vertex id beyond n");
    for (const Json& e : j.at("tree_edges")) {
      if (e.size() != 3 || e[2].size() != 2) throw InputError("tree edge must be [i, j, [u, v]]");
      int a = e[0].get<int>(), b = e[1].get<int>();
      if (a < 0 || b < 0 || static_cast<std::size_t>(std::max(a, b)) >= t.nodes.size())
        throw InputError("tree edge names a missing node");
      t.edges.push_back({std::min(a, b), std::max(a, b), Edge(e[2][0].get<Vertex>(), e[2][1].get<Vertex>())});
    }
    return t;
  });
}

Json to_json(const ChordOrientation& o) {
  Json chords = Json::array();
  for (const auto& [e, target] : o.direction) chords.push_back({{e.u, e.v}, "->", target});
  return {{"chords", chords}};
}

ChordOrientation orientation_from_json(const Json& j) {
  return guarded("orientation", [&] {
    ChordOrientation o;
    for (const Json& c : j.at("chords")) {
      if (c.size() != 3 || c[0].size() != 2 || c[1] != "->") throw InputError("chord entry must be [[u, v], \"->\", t]");
      Edge e(c[0][0].get<Vertex>(), c[0][1].get<Vertex>());
      Vertex t = c[2].get<Vertex>();
      if (!e.has(t)) throw InputError("chord target is not an endpoint", {e.u, e.v});
      if (!o.direction.emplace(e, t).second) throw InputError("chord listed twice", {e.u, e.v});
    }
    return o;
  });
}

Json to_json(const Drawing& d) {
  Json points = Json::array();
  for (const auto& p : d.points) points.push_back(point_to_json(p));
  return {{"points", points}, {"edges", edges_json(d.graph)}};
}

Drawing drawing_from_json(const Json& j) {
  return guarded("drawing", [&] {
    Drawing d;
    for (const Json& p : j.at("points")) d.points.push_back(point_from_json(p));
    d.graph = build_graph(d.points.size(), edge_list(j));
    return d;
  });
}

Json to_json(const SimplePolygon& p) {
  Json vs = Json::array();
  for (const auto& v : p.vertices) vs.push_back(point_to_json(v));
  return {{"vertices", vs}};
}

SimplePolygon polygon_from_json(const Json& j) {
  return guarded("polygon", [&] {
    SimplePolygon p;
    for (const Json& v : j.at("vertices")) p.vertices.push_back(point_from_json(v));
    return p;
  });
}

Json to_json(const RejectReason& r) {
  return {{"kind", std::string(to_string(r.kind))}, {"witness", r.witness}, {"detail", r.detail}};
}

Json to_json(const VerificationReport& r) {
  Json j;
  j["verdict"] = r.verdict;
  j["planar"] = r.planar;
  if (r.crossing) j["crossing"] = {{r.crossing->first.u, r.crossing->first.v}, {r.crossing->second.u, r.crossing->second.v}};
  j["general_position"] = r.general_position;
  if (r.collinear) j["collinear"] = *r.collinear;
  j["local_ok"] = r.local_ok;
  j["exhaustive_ok"] = r.exhaustive_ok;
  j["equivalence_applies"] = r.equivalence_applies;
  j["criteria_agree"] = r.criteria_agree;
  j["mirror_consistent"] = r.mirror_consistent;
  Json chords = Json::array();
  for (const ChordGoodness& c : r.chords) {
    Json e = {{"chord", {c.chord.u, c.chord.v}}, {"good", c.good}};
    if (c.toward) e["toward"] = *c.toward;
    chords.push_back(e);
  }
  j["chords"] = chords;
  Json pairs = Json::array();
  for (const NonEdgeCheck& p : r.non_edges) pairs.push_back({{"pair", {p.p, p.q}}, {"intersects_outer", p.intersects_outer}});
  j["non_edges"] = pairs;
  j["notes"] = r.notes;
  return j;
}

Json to_json(const Instance& inst, const InstanceSpec& spec) {
  Json j = to_json(inst.graph);
  j["family"] = std::string(to_string(spec.family));
  j["size"] = spec.size;
  j["seed"] = spec.seed;
  if (inst.tree) j["tree"] = to_json(*inst.tree);
  return j;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

std::string read_text(const std::string& path) {
  if (path.empty() || path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

}  // namespace oor
