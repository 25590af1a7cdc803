#pragma once

// Deterministic SVG rendering. Decimal conversion happens only here and only
// for display.

#include <algorithm>
#include <cstdio>
#include <string>

#include "gridlink/chain.hpp"

namespace gridlink {

struct SvgOptions {
  double scale = 32.0;   // pixels per unit
  double margin = 1.0;   // units around the bounding box
  double dot_radius = 3.0;
  double stroke_width = 2.0;
  std::string stroke = "#1f5fa8";
  bool show_steiner = true;
  bool arrow = true;
};

namespace svg_detail {

inline std::string num(double v) {
  if (v == 0.0) v = 0.0;  // drop negative zero
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace svg_detail

/// Grid dots, the chain as a polyline with an arrowhead on the last edge, and
/// hollow circles on vertices that are not grid nodes. The y axis points up.
inline std::string render_svg(const PolygonalChain& c, const SvgOptions& opt = {}) {
  using svg_detail::num;
  double min_x = 0, min_y = 0, max_x = static_cast<double>(c.n - 1), max_y = max_x;
  for (const Point& p : c.vertices) {
    min_x = std::min(min_x, p.x.to_double());
    max_x = std::max(max_x, p.x.to_double());
    min_y = std::min(min_y, p.y.to_double());
    max_y = std::max(max_y, p.y.to_double());
  }
  const double w = (max_x - min_x + 2 * opt.margin) * opt.scale;
  const double h = (max_y - min_y + 2 * opt.margin) * opt.scale;
  auto px = [&](double x) { return num((x - min_x + opt.margin) * opt.scale); };
  auto py = [&](double y) { return num((max_y - y + opt.margin) * opt.scale); };

  std::string s;
  s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(w) + "\" height=\"" + num(h) + "\" viewBox=\"0 0 " +
       num(w) + " " + num(h) + "\">\n";
  s += "<title>n=" + std::to_string(c.n) + " " + std::string(to_string(c.kind)) + " h=" +
       std::to_string(c.edge_count()) + "</title>\n";
  if (opt.arrow) {
    s += "<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"10\" refY=\"5\" markerWidth=\"8\" "
         "markerHeight=\"8\" orient=\"auto-start-reverse\"><path d=\"M0,0 L10,5 L0,10 z\" fill=\"" +
         opt.stroke + "\"/></marker></defs>\n";
  }
  s += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n<g id=\"grid\" fill=\"black\">\n";
  for (long x = 0; x < c.n; ++x) {
    for (long y = 0; y < c.n; ++y) {
      s += "<circle cx=\"" + px(static_cast<double>(x)) + "\" cy=\"" + py(static_cast<double>(y)) + "\" r=\"" +
           num(opt.dot_radius) + "\"/>\n";
    }
  }
  s += "</g>\n<polyline id=\"chain\" fill=\"none\" stroke=\"" + opt.stroke + "\" stroke-width=\"" +
       num(opt.stroke_width) + "\" stroke-linejoin=\"round\"";
  if (opt.arrow) s += " marker-end=\"url(#arrow)\"";
  s += " points=\"";
  for (std::size_t i = 0; i < c.vertices.size(); ++i) {
    if (i) s += " ";
    s += px(c.vertices[i].x.to_double()) + "," + py(c.vertices[i].y.to_double());
  }
  s += "\"/>\n";
  if (opt.show_steiner) {
    s += "<g id=\"steiner\" fill=\"white\" stroke=\"" + opt.stroke + "\" stroke-width=\"1.5\">\n";
    std::set<Point> done;
    for (const Point& p : c.vertices) {
      if (as_grid_node(p, c.n) || !done.insert(p).second) continue;
      s += "<circle cx=\"" + px(p.x.to_double()) + "\" cy=\"" + py(p.y.to_double()) + "\" r=\"" +
           num(opt.dot_radius + 1) + "\"/>\n";
    }
    s += "</g>\n";
  }
  s += "</svg>\n";
  return s;
}

}  // namespace gridlink
