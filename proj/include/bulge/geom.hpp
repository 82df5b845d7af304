#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "bulge/errors.hpp"

namespace bulge {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kHalfPi = std::numbers::pi / 2.0;

// Relative degeneracy threshold: |cross| must exceed kAreaEps * s^2.
inline constexpr double kAreaEps = 1e-12;
// Angle band used for Acute/Right/Obtuse decisions and for angle ties.
inline constexpr double kAngleEps = 1e-9;

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend constexpr Point2 operator+(Point2 p, Point2 q) { return {p.x + q.x, p.y + q.y}; }
  friend constexpr Point2 operator-(Point2 p, Point2 q) { return {p.x - q.x, p.y - q.y}; }
  friend constexpr Point2 operator*(double k, Point2 p) { return {k * p.x, k * p.y}; }
  friend constexpr Point2 operator*(Point2 p, double k) { return {k * p.x, k * p.y}; }
  friend constexpr bool operator==(Point2, Point2) = default;
};

constexpr double dot(Point2 u, Point2 v) { return u.x * v.x + u.y * v.y; }
constexpr double cross(Point2 u, Point2 v) { return u.x * v.y - u.y * v.x; }
inline double norm(Point2 v) { return std::hypot(v.x, v.y); }
inline double distance(Point2 p, Point2 q) { return norm(q - p); }
constexpr Point2 midpoint(Point2 p, Point2 q) { return {0.5 * (p.x + q.x), 0.5 * (p.y + q.y)}; }
inline bool is_finite(Point2 p) { return std::isfinite(p.x) && std::isfinite(p.y); }

enum class Vertex { A, B, C };
// Sides named by their endpoints; the first letter is the first endpoint.
enum class Edge { AB, BC, CA };

inline constexpr std::array<Vertex, 3> kVertices{Vertex::A, Vertex::B, Vertex::C};
inline constexpr std::array<Edge, 3> kEdges{Edge::AB, Edge::BC, Edge::CA};

constexpr int index_of(Vertex v) { return static_cast<int>(v); }
constexpr int index_of(Edge e) { return static_cast<int>(e); }

constexpr Vertex first_vertex(Edge e) {
  switch (e) {
    case Edge::AB: return Vertex::A;
    case Edge::BC: return Vertex::B;
    case Edge::CA: return Vertex::C;
  }
  return Vertex::A;
}

constexpr Vertex second_vertex(Edge e) {
  switch (e) {
    case Edge::AB: return Vertex::B;
    case Edge::BC: return Vertex::C;
    case Edge::CA: return Vertex::A;
  }
  return Vertex::B;
}

constexpr Vertex opposite_vertex(Edge e) {
  switch (e) {
    case Edge::AB: return Vertex::C;
    case Edge::BC: return Vertex::A;
    case Edge::CA: return Vertex::B;
  }
  return Vertex::C;
}

// The side that does not touch v.
constexpr Edge opposite_edge(Vertex v) {
  switch (v) {
    case Vertex::A: return Edge::BC;
    case Vertex::B: return Edge::CA;
    case Vertex::C: return Edge::AB;
  }
  return Edge::AB;
}

// The side joining two distinct vertices.
constexpr Edge edge_between(Vertex p, Vertex q) {
  for (Edge e : kEdges) {
    if ((first_vertex(e) == p && second_vertex(e) == q) ||
        (first_vertex(e) == q && second_vertex(e) == p)) {
      return e;
    }
  }
  return Edge::AB;
}

constexpr const char* name(Vertex v) {
  switch (v) {
    case Vertex::A: return "A";
    case Vertex::B: return "B";
    case Vertex::C: return "C";
  }
  return "?";
}

constexpr const char* name(Edge e) {
  switch (e) {
    case Edge::AB: return "AB";
    case Edge::BC: return "BC";
    case Edge::CA: return "CA";
  }
  return "?";
}

// A non-degenerate triangle stored counter-clockwise. Only normalize() builds one.
class Triangle {
 public:
  Point2 a() const { return v_[0]; }
  Point2 b() const { return v_[1]; }
  Point2 c() const { return v_[2]; }
  Point2 vertex(Vertex v) const { return v_[index_of(v)]; }

  Point2 centroid() const {
    return {(v_[0].x + v_[1].x + v_[2].x) / 3.0, (v_[0].y + v_[1].y + v_[2].y) / 3.0};
  }
  double area() const { return 0.5 * cross(v_[1] - v_[0], v_[2] - v_[0]); }

  friend bool operator==(const Triangle&, const Triangle&) = default;

 private:
  Triangle(Point2 a, Point2 b, Point2 c) : v_{a, b, c} {}
  friend Triangle normalize(Point2 p1, Point2 p2, Point2 p3);

  std::array<Point2, 3> v_;
};

// Validates and orients three points. A clockwise input keeps A and swaps B, C.
inline Triangle normalize(Point2 p1, Point2 p2, Point2 p3) {
  if (!is_finite(p1) || !is_finite(p2) || !is_finite(p3)) {
    throw InvalidInput("triangle vertices must be finite");
  }
  const double s = std::max({distance(p1, p2), distance(p2, p3), distance(p3, p1)});
  const double area2 = cross(p2 - p1, p3 - p1);
  if (!(std::abs(area2) > kAreaEps * s * s)) {
    throw DegenerateTriangle("triangle vertices are collinear or coincident");
  }
  if (area2 < 0.0) return Triangle(p1, p3, p2);
  return Triangle(p1, p2, p3);
}

inline Triangle normalize(const Triangle& t) { return normalize(t.a(), t.b(), t.c()); }

struct SideLengths {
  double a = 0.0;  // |BC|
  double b = 0.0;  // |CA|
  double c = 0.0;  // |AB|

  double longest() const { return std::max({a, b, c}); }
  double of(Edge e) const {
    switch (e) {
      case Edge::AB: return c;
      case Edge::BC: return a;
      case Edge::CA: return b;
    }
    return 0.0;
  }
};

inline SideLengths side_lengths(const Triangle& t) {
  return {distance(t.b(), t.c()), distance(t.c(), t.a()), distance(t.a(), t.b())};
}

struct TriangleAngles {
  double alpha = 0.0;  // at A
  double beta = 0.0;   // at B
  double gamma = 0.0;  // at C

  double at(Vertex v) const {
    switch (v) {
      case Vertex::A: return alpha;
      case Vertex::B: return beta;
      case Vertex::C: return gamma;
    }
    return 0.0;
  }
};

namespace detail {
inline double angle_between(Point2 u, Point2 v) { return std::atan2(std::abs(cross(u, v)), dot(u, v)); }
}  // namespace detail

inline TriangleAngles interior_angles(const Triangle& t) {
  return {detail::angle_between(t.b() - t.a(), t.c() - t.a()),
          detail::angle_between(t.c() - t.b(), t.a() - t.b()),
          detail::angle_between(t.a() - t.c(), t.b() - t.c())};
}

enum class TriangleKind { Acute, Right, Obtuse };

struct TriangleClass {
  TriangleKind kind = TriangleKind::Acute;
  // Vertex carrying the right or obtuse angle; meaningless for Acute.
  Vertex vertex = Vertex::A;

  friend bool operator==(const TriangleClass&, const TriangleClass&) = default;
};

inline TriangleClass classify_triangle(const Triangle& t) {
  const TriangleAngles ang = interior_angles(t);
  Vertex widest = Vertex::A;
  for (Vertex v : kVertices) {
    if (ang.at(v) > ang.at(widest)) widest = v;
  }
  const double max_angle = ang.at(widest);
  if (std::abs(max_angle - kHalfPi) <= kAngleEps) return {TriangleKind::Right, widest};
  if (max_angle > kHalfPi + kAngleEps) return {TriangleKind::Obtuse, widest};
  return {TriangleKind::Acute, Vertex::A};
}

constexpr const char* name(TriangleKind k) {
  switch (k) {
    case TriangleKind::Acute: return "acute";
    case TriangleKind::Right: return "right";
    case TriangleKind::Obtuse: return "obtuse";
  }
  return "?";
}

// Rotation by `angle`, uniform scale `scale` > 0, then translation by `shift`.
struct Similarity {
  double scale = 1.0;
  double angle = 0.0;
  Point2 shift{};

  Point2 apply(Point2 p) const {
    const double cs = std::cos(angle), sn = std::sin(angle);
    return {scale * (cs * p.x - sn * p.y) + shift.x, scale * (sn * p.x + cs * p.y) + shift.y};
  }
  Point2 apply_direction(Point2 v) const {
    const double cs = std::cos(angle), sn = std::sin(angle);
    return {cs * v.x - sn * v.y, sn * v.x + cs * v.y};
  }
  Triangle apply(const Triangle& t) const { return normalize(apply(t.a()), apply(t.b()), apply(t.c())); }
};

}  // namespace bulge
