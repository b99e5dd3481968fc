#include "oor/svg.hpp"

#include <algorithm>
#include <cstdio>

namespace oor {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

}  // namespace

std::string render_svg(const Drawing& d, const std::optional<SimplePolygon>& obstacle) {
  std::vector<const RationalPoint*> all;
  for (const auto& p : d.points) all.push_back(&p);
  if (obstacle)
    for (const auto& p : obstacle->vertices) all.push_back(&p);

  double x0 = 0, x1 = 1, y0 = 0, y1 = 1;
  if (!all.empty()) {
    x0 = x1 = all.front()->x.get_d();
    y0 = y1 = all.front()->y.get_d();
    for (const auto* p : all) {
      x0 = std::min(x0, p->x.get_d()), x1 = std::max(x1, p->x.get_d());
      y0 = std::min(y0, p->y.get_d()), y1 = std::max(y1, p->y.get_d());
    }
  }
  const double size = 800, pad = 20;
  const double span = std::max({x1 - x0, y1 - y0, 1e-300});
  const double scale = (size - 2 * pad) / span;
  auto X = [&](const RationalPoint& p) { return num(pad + (p.x.get_d() - x0) * scale); };
  // svg y grows downward
  auto Y = [&](const RationalPoint& p) { return num(pad + (y1 - p.y.get_d()) * scale); };

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(size) + "\" height=\"" + num(size) +
         "\" viewBox=\"0 0 " + num(size) + " " + num(size) + "\">\n";
  if (obstacle && !obstacle->vertices.empty()) {
    out += "<g id=\"obstacle\">\n<polygon fill=\"#b0b0b0\" stroke=\"#808080\" points=\"";
    for (std::size_t i = 0; i < obstacle->vertices.size(); ++i) {
      if (i) out += ' ';
      out += X(obstacle->vertices[i]) + "," + Y(obstacle->vertices[i]);
    }
    out += "\"/>\n</g>\n";
  }
  out += "<g id=\"edges\" stroke=\"black\" stroke-width=\"1\">\n";
  for (const Edge& e : d.graph.edges()) {
    const auto &a = d.points[e.u], &b = d.points[e.v];
    out += "<line x1=\"" + X(a) + "\" y1=\"" + Y(a) + "\" x2=\"" + X(b) + "\" y2=\"" + Y(b) + "\"/>\n";
  }
  out += "</g>\n<g id=\"vertices\" fill=\"#1f5fa8\">\n";
  for (std::size_t i = 0; i < d.points.size(); ++i)
    out += "<circle id=\"v" + std::to_string(i) + "\" cx=\"" + X(d.points[i]) + "\" cy=\"" + Y(d.points[i]) +
           "\" r=\"3\"/>\n";
  out += "</g>\n</svg>\n";
  return out;
}

}  // namespace oor
