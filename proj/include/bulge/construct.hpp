#pragma once

#include <array>
#include <cmath>

#include "bulge/errors.hpp"
#include "bulge/geom.hpp"

namespace bulge {

enum class HostSide { AB, BC, CA, ThirdVertex };

constexpr HostSide host_of(Edge e) { return static_cast<HostSide>(index_of(e)); }

constexpr const char* name(HostSide h) {
  switch (h) {
    case HostSide::AB: return "AB";
    case HostSide::BC: return "BC";
    case HostSide::CA: return "CA";
    case HostSide::ThirdVertex: return "third_vertex";
  }
  return "?";
}

// Center of the arc replacing one side. It is the point on the perpendicular
// bisector of that side lying on one of the other two sides.
struct EdgeCenter {
  Point2 point{};
  HostSide host = HostSide::ThirdVertex;
  // Position along the host side measured from its first endpoint; 0 for ThirdVertex.
  double param = 0.0;
};

/// Locates the XY-center for side `edge`.
///
/// With endpoint angles tX, tY the center sits on the side joining the
/// smaller-angle endpoint to the third vertex (that side is the longer of the
/// remaining two). Angles within kAngleEps of each other are treated as a tie
/// and the third vertex itself is returned.
inline EdgeCenter edge_center(const Triangle& t, Edge edge) {
  const TriangleAngles ang = interior_angles(t);
  const Vertex vx = first_vertex(edge), vy = second_vertex(edge), vz = opposite_vertex(edge);
  const double tx = ang.at(vx), ty = ang.at(vy);
  if (std::abs(tx - ty) <= kAngleEps) return {t.vertex(vz), HostSide::ThirdVertex, 0.0};

  const Vertex small = tx < ty ? vx : vy;
  const Vertex other = tx < ty ? vy : vx;
  const Point2 s = t.vertex(small);
  const Point2 w = t.vertex(vz) - s;
  const Point2 chord = t.vertex(other) - s;
  // |S + k w - O| = |k w|  <=>  k = |O - S|^2 / (2 (O - S).w)
  const double k = dot(chord, chord) / (2.0 * dot(w, chord));
  const Edge host = edge_between(small, vz);
  const double param = first_vertex(host) == small ? k : 1.0 - k;
  return {s + k * w, host_of(host), param};
}

struct ArcParams {
  double radius = 0.0;
  double central_angle = 0.0;
};

/// Radius and central angle of the arc over a chord whose endpoint angles are
/// `angle_x` and `angle_y`: the isosceles (X, Y, center) triangle has base
/// angles min(angle_x, angle_y).
inline ArcParams arc_params(double chord_length, double angle_x, double angle_y) {
  if (!(angle_x > 0.0) || !(angle_y > 0.0) || !(angle_x + angle_y < kPi)) {
    throw InvalidAngles("endpoint angles must be positive with sum below pi");
  }
  if (!(chord_length > 0.0) || !std::isfinite(chord_length)) {
    throw InvalidInput("chord length must be positive and finite");
  }
  const double m = std::min(angle_x, angle_y);
  return {chord_length / (2.0 * std::cos(m)), kPi - 2.0 * m};
}

struct ArcEdge {
  Point2 center{};
  double radius = 0.0;
  Point2 start{};
  Point2 end{};
  double central_angle = 0.0;
  // Unit normal of the chord pointing to the side the arc bulges toward.
  Point2 bulge_outward{};

  double length() const { return radius * central_angle; }
  double start_angle() const { return std::atan2(start.y - center.y, start.x - center.x); }

  // Point at `fraction` in [0, 1] of the sweep, counter-clockwise about center.
  Point2 point_at(double fraction) const {
    const double phi = start_angle() + fraction * central_angle;
    return {center.x + radius * std::cos(phi), center.y + radius * std::sin(phi)};
  }
  Point2 apex() const { return center + radius * bulge_outward; }
};

enum class Convexity { Convex, Concave };

constexpr const char* name(Convexity c) { return c == Convexity::Convex ? "convex" : "concave"; }

struct BulgingTriangle {
  Triangle triangle;
  ArcEdge arc_ab;
  ArcEdge arc_bc;
  ArcEdge arc_ca;
  Convexity convexity = Convexity::Convex;

  const ArcEdge& arc(Edge e) const {
    switch (e) {
      case Edge::AB: return arc_ab;
      case Edge::BC: return arc_bc;
      case Edge::CA: return arc_ca;
    }
    return arc_ab;
  }
  std::array<const ArcEdge*, 3> arcs() const { return {&arc_ab, &arc_bc, &arc_ca}; }
};

namespace detail {

inline ArcEdge make_arc(const Triangle& t, const TriangleAngles& ang, Edge edge) {
  const Vertex vx = first_vertex(edge), vy = second_vertex(edge);
  const Point2 x = t.vertex(vx), y = t.vertex(vy);
  const EdgeCenter ec = edge_center(t, edge);
  const double chord = distance(x, y);
  const ArcParams p = arc_params(chord, ang.at(vx), ang.at(vy));

  ArcEdge arc;
  arc.center = ec.point;
  arc.radius = 0.5 * (distance(ec.point, x) + distance(ec.point, y));
  arc.start = x;
  arc.end = y;
  arc.central_angle = p.central_angle;
  // Triangle is CCW, so the right-hand normal of X->Y points away from the third vertex.
  const Point2 d = y - x;
  arc.bulge_outward = Point2{d.y, -d.x} * (1.0 / chord);
  return arc;
}

}  // namespace detail

inline BulgingTriangle build(const Triangle& t) {
  const TriangleAngles ang = interior_angles(t);
  const TriangleKind kind = classify_triangle(t).kind;
  return BulgingTriangle{t, detail::make_arc(t, ang, Edge::AB), detail::make_arc(t, ang, Edge::BC),
                         detail::make_arc(t, ang, Edge::CA),
                         kind == TriangleKind::Obtuse ? Convexity::Concave : Convexity::Convex};
}

inline BulgingTriangle build(Point2 p1, Point2 p2, Point2 p3) { return build(normalize(p1, p2, p3)); }

// Counter-clockwise angular offset from `from` to `to`, in [0, 2 pi).
inline double ccw_offset(double from, double to) {
  double d = std::fmod(to - from, 2.0 * kPi);
  if (d < 0.0) d += 2.0 * kPi;
  return d;
}

struct Box {
  Point2 min{};
  Point2 max{};

  double width() const { return max.x - min.x; }
  double height() const { return max.y - min.y; }
  double area() const { return width() * height(); }
  void expand(Point2 p) {
    min = {std::min(min.x, p.x), std::min(min.y, p.y)};
    max = {std::max(max.x, p.x), std::max(max.y, p.y)};
  }
};

// Tight axis-aligned box: arc endpoints plus any axis-extreme point inside a sweep.
inline Box bounding_box(const BulgingTriangle& bt) {
  Box box{bt.triangle.a(), bt.triangle.a()};
  for (const ArcEdge* arc : bt.arcs()) {
    box.expand(arc->start);
    box.expand(arc->end);
    const double a0 = arc->start_angle();
    for (int k = 0; k < 4; ++k) {
      const double dir = k * kHalfPi;
      if (ccw_offset(a0, dir) <= arc->central_angle) {
        box.expand({arc->center.x + arc->radius * std::cos(dir), arc->center.y + arc->radius * std::sin(dir)});
      }
    }
  }
  return box;
}

}  // namespace bulge
