#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>

#include "bulge/construct.hpp"
#include "bulge/errors.hpp"
#include "bulge/geom.hpp"
#include "bulge/oracles.hpp"

namespace bulge {

inline double edge_length(const ArcEdge& arc) { return arc.radius * arc.central_angle; }

struct EdgeLengths {
  double ab = 0.0;
  double bc = 0.0;
  double ca = 0.0;

  double of(Edge e) const {
    switch (e) {
      case Edge::AB: return ab;
      case Edge::BC: return bc;
      case Edge::CA: return ca;
    }
    return 0.0;
  }
  double sum() const { return ab + bc + ca; }
};

inline EdgeLengths edge_lengths(const BulgingTriangle& bt) {
  return {edge_length(bt.arc_ab), edge_length(bt.arc_bc), edge_length(bt.arc_ca)};
}

inline double segment_area(const ArcEdge& arc) {
  const double phi = arc.central_angle;
  return 0.5 * arc.radius * arc.radius * (phi - std::sin(phi));
}

/// Base triangle plus the three circular segments. Only valid when the
/// segments sit disjointly on the sides, i.e. for convex bulging triangles.
inline double area(const BulgingTriangle& bt) {
  if (bt.convexity != Convexity::Convex) throw ConcaveUnsupported();
  return bt.triangle.area() + segment_area(bt.arc_ab) + segment_area(bt.arc_bc) + segment_area(bt.arc_ca);
}

struct CircumDisk {
  Point2 center{};   // midpoint M of the hypotenuse
  double radius = 0.0;
  double max_boundary_distance = 0.0;
  Edge hypotenuse = Edge::AB;
  double hypotenuse_arc_radius = 0.0;   // |AP|
  double center_offset = 0.0;           // |MP|
  double far_point_distance = 0.0;      // |XP| = |XM| + |MP|

  bool contains_boundary() const {
    return max_boundary_distance <= radius + 1e-9 * (2.0 * radius);
  }
};

namespace detail {

// Largest distance from q to any point of the arc: the endpoints, or the
// antipode of q on the arc's circle when that point lies inside the sweep.
inline double max_distance_to_arc(const ArcEdge& arc, Point2 q, double scale) {
  double best = std::max(distance(q, arc.start), distance(q, arc.end));
  const Point2 off = arc.center - q;
  const double d = norm(off);
  if (d <= 1e-12 * scale) return std::max(best, arc.radius + d);
  const double dir = std::atan2(off.y, off.x);
  if (ccw_offset(arc.start_angle(), dir) <= arc.central_angle) best = std::max(best, d + arc.radius);
  return best;
}

}  // namespace detail

/// Disk about the hypotenuse midpoint of a right-angled base triangle, with
/// the farthest boundary distance from its center.
inline CircumDisk circumdisk_gap(const BulgingTriangle& bt) {
  const TriangleClass cls = classify_triangle(bt.triangle);
  if (cls.kind != TriangleKind::Right) throw NotRightAngled();
  const Edge hyp = opposite_edge(cls.vertex);
  const Point2 p = bt.triangle.vertex(first_vertex(hyp));
  const Point2 q = bt.triangle.vertex(second_vertex(hyp));

  CircumDisk disk;
  disk.hypotenuse = hyp;
  disk.center = midpoint(p, q);
  const double c = distance(p, q);
  disk.radius = 0.5 * c;
  for (const ArcEdge* arc : bt.arcs()) {
    disk.max_boundary_distance = std::max(disk.max_boundary_distance, detail::max_distance_to_arc(*arc, disk.center, c));
  }
  const ArcEdge& hyp_arc = bt.arc(hyp);
  disk.hypotenuse_arc_radius = hyp_arc.radius;
  disk.center_offset = distance(disk.center, hyp_arc.center);
  disk.far_point_distance = disk.radius + disk.center_offset;
  return disk;
}

/// Checks the stored convexity flag by sampling: every turn of the sampled
/// boundary must be >= -1e-9 s^2 for Convex; one below -1e-6 s^2 means Concave.
inline Convexity convexity_check(const BulgingTriangle& bt, std::uint64_t n) {
  if (n < 3) throw InvalidInput("convexity_check needs n >= 3 samples per arc");
  const auto pts = oracles::boundary_samples(bt, n);
  const double s = side_lengths(bt.triangle).longest();
  double worst = 0.0;
  const std::size_t m = pts.size();
  for (std::size_t i = 0; i < m; ++i) {
    const Point2 u = pts[i] - pts[(i + m - 1) % m];
    const Point2 v = pts[(i + 1) % m] - pts[i];
    worst = std::min(worst, cross(u, v));
  }
  if (worst >= -1e-9 * s * s) return Convexity::Convex;
  if (worst < -1e-6 * s * s) return Convexity::Concave;
  throw Inconclusive("sampled turning falls between the convex and concave bands; adjust n");
}

struct MetricsReport {
  double len_ab = 0.0;
  double len_bc = 0.0;
  double len_ca = 0.0;
  double perimeter = 0.0;
  std::optional<double> area;  // absent for concave shapes
  Convexity convexity = Convexity::Convex;
  std::optional<CircumDisk> circumdisk;  // present iff the base is right-angled
};

inline MetricsReport measure(const BulgingTriangle& bt) {
  MetricsReport r;
  const EdgeLengths len = edge_lengths(bt);
  r.len_ab = len.ab;
  r.len_bc = len.bc;
  r.len_ca = len.ca;
  r.perimeter = len.ab + len.bc + len.ca;
  r.convexity = bt.convexity;
  if (bt.convexity == Convexity::Convex) r.area = area(bt);
  if (classify_triangle(bt.triangle).kind == TriangleKind::Right) r.circumdisk = circumdisk_gap(bt);
  return r;
}

}  // namespace bulge
