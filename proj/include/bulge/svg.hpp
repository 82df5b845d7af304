#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <string>

#include "bulge/construct.hpp"
#include "bulge/geom.hpp"
#include "bulge/metrics.hpp"

namespace bulge::svg {

enum class Overlay { BaseTriangle, Centers, PerpBisectors, Circumcircle, Labels };

struct RenderOptions {
  int width_px = 480;
  int height_px = 480;
  double margin_frac = 0.08;  // in [0, 0.4)
  std::set<Overlay> overlays;
  std::string stroke = "#1f3b73";
  std::string fill = "#dbe6f6";
  std::string overlay_stroke = "#7a7a7a";
  double stroke_width = 2.0;
};

// Nine significant digits, never "-0".
inline std::string num(double v) {
  if (v == 0.0) v = 0.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

namespace detail {

struct Viewport {
  Box world;
  double scale = 1.0;
  double ox = 0.0;
  double oy = 0.0;

  Point2 map(Point2 p) const { return {ox + (p.x - world.min.x) * scale, oy + (world.max.y - p.y) * scale}; }
};

inline Viewport make_viewport(Box world, const RenderOptions& o) {
  const double bw = std::max(world.width(), 1e-300), bh = std::max(world.height(), 1e-300);
  const double avail_w = o.width_px * (1.0 - 2.0 * o.margin_frac);
  const double avail_h = o.height_px * (1.0 - 2.0 * o.margin_frac);
  Viewport v;
  v.world = world;
  v.scale = std::min(avail_w / bw, avail_h / bh);
  v.ox = 0.5 * (o.width_px - bw * v.scale);
  v.oy = 0.5 * (o.height_px - bh * v.scale);
  return v;
}

struct Disk {
  Point2 center;
  double radius;
  bool proven;  // right-angled case; otherwise exploratory
};

// Right base: the disk about the hypotenuse midpoint. Otherwise the smallest
// disk about the base circumcenter that holds the boundary (no claim attached).
inline Disk overlay_disk(const BulgingTriangle& bt) {
  if (classify_triangle(bt.triangle).kind == TriangleKind::Right) {
    const CircumDisk d = circumdisk_gap(bt);
    return {d.center, d.radius, true};
  }
  const Triangle& t = bt.triangle;
  const Point2 b = t.b() - t.a(), c = t.c() - t.a();
  const double den = 2.0 * cross(b, c);
  const Point2 o = t.a() + Point2{(c.y * dot(b, b) - b.y * dot(c, c)) / den, (b.x * dot(c, c) - c.x * dot(b, b)) / den};
  const double scale = side_lengths(t).longest();
  double r = 0.0;
  for (const ArcEdge* arc : bt.arcs()) r = std::max(r, bulge::detail::max_distance_to_arc(*arc, o, scale));
  return {o, r, false};
}

inline Point2 label_anchor(const BulgingTriangle& bt, Vertex v) {
  const Point2 p = bt.triangle.vertex(v);
  const Point2 away = p - bt.triangle.centroid();
  const double s = side_lengths(bt.triangle).longest();
  return p + away * (0.12 * s / norm(away));
}

}  // namespace detail

/// Standalone SVG 1.1 document: one closed path of three arc commands, then
/// each requested overlay in its own group. Output depends only on the inputs.
inline std::string to_svg(const BulgingTriangle& bt, const RenderOptions& opts = {}) {
  const auto has = [&](Overlay o) { return opts.overlays.count(o) != 0; };

  Box world = bounding_box(bt);
  detail::Disk disk{};
  if (has(Overlay::Circumcircle)) {
    disk = detail::overlay_disk(bt);
    world.expand(disk.center - Point2{disk.radius, disk.radius});
    world.expand(disk.center + Point2{disk.radius, disk.radius});
  }
  if (has(Overlay::Labels)) {
    for (Vertex v : kVertices) world.expand(detail::label_anchor(bt, v));
  }
  const detail::Viewport vp = detail::make_viewport(world, opts);
  const auto pt = [&](Point2 p) {
    const Point2 q = vp.map(p);
    return num(q.x) + " " + num(q.y);
  };

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + std::to_string(opts.width_px) +
         "\" height=\"" + std::to_string(opts.height_px) + "\" viewBox=\"0 0 " + std::to_string(opts.width_px) + " " +
         std::to_string(opts.height_px) + "\">\n";

  std::string d = "M " + pt(bt.arc_ab.start);
  for (const ArcEdge* arc : bt.arcs()) {
    const Point2 s = vp.map(arc->start), e = vp.map(arc->end);
    // The y-flip mirrors orientation, so work with the screen-space normal.
    const Point2 n_screen{arc->bulge_outward.x, -arc->bulge_outward.y};
    const int sweep = cross(e - s, n_screen) < 0.0 ? 1 : 0;
    const std::string r = num(arc->radius * vp.scale);
    d += " A " + r + " " + r + " 0 0 " + std::to_string(sweep) + " " + pt(arc->end);
  }
  d += " Z";
  out += "  <path class=\"bulging-triangle\" d=\"" + d + "\" fill=\"" + opts.fill + "\" stroke=\"" + opts.stroke +
         "\" stroke-width=\"" + num(opts.stroke_width) + "\"/>\n";

  const std::string thin = "fill=\"none\" stroke=\"" + opts.overlay_stroke + "\" stroke-width=\"1\"";
  const Triangle& t = bt.triangle;
  if (has(Overlay::BaseTriangle)) {
    out += "  <g class=\"base-triangle\">\n";
    out += "    <polygon points=\"" + pt(t.a()) + " " + pt(t.b()) + " " + pt(t.c()) + "\" " + thin + "/>\n";
    out += "  </g>\n";
  }
  if (has(Overlay::PerpBisectors)) {
    out += "  <g class=\"perpendicular-bisectors\">\n";
    for (const ArcEdge* arc : bt.arcs()) {
      const Point2 from = vp.map(arc->center), to = vp.map(arc->apex());
      out += "    <line x1=\"" + num(from.x) + "\" y1=\"" + num(from.y) + "\" x2=\"" + num(to.x) + "\" y2=\"" +
             num(to.y) + "\" " + thin + " stroke-dasharray=\"4 3\"/>\n";
    }
    out += "  </g>\n";
  }
  if (has(Overlay::Centers)) {
    out += "  <g class=\"centers\">\n";
    for (Edge e : kEdges) {
      const Point2 c = vp.map(bt.arc(e).center);
      out += "    <circle class=\"center-" + std::string(name(e)) + "\" cx=\"" + num(c.x) + "\" cy=\"" + num(c.y) +
             "\" r=\"3\" fill=\"" + opts.overlay_stroke + "\"/>\n";
    }
    out += "  </g>\n";
  }
  if (has(Overlay::Circumcircle)) {
    const Point2 c = vp.map(disk.center);
    out += std::string("  <g class=\"circumcircle") + (disk.proven ? "" : " exploratory") + "\">\n";
    out += "    <circle cx=\"" + num(c.x) + "\" cy=\"" + num(c.y) + "\" r=\"" + num(disk.radius * vp.scale) + "\" " +
           thin + (disk.proven ? "" : " stroke-dasharray=\"2 2\"") + "/>\n";
    out += "  </g>\n";
  }
  if (has(Overlay::Labels)) {
    out += "  <g class=\"labels\" font-family=\"serif\" font-size=\"16\" text-anchor=\"middle\">\n";
    for (Vertex v : kVertices) {
      const Point2 p = vp.map(detail::label_anchor(bt, v));
      out += "    <text x=\"" + num(p.x) + "\" y=\"" + num(p.y) + "\" dominant-baseline=\"middle\">" +
             std::string(name(v)) + "</text>\n";
    }
    out += "  </g>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace bulge::svg
