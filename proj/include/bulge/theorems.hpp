#pragma once

// Executable forms of the edge inequalities and identities of bulging
// triangles: triangle inequality, angle/edge ordering, isosceles symmetry and
// the Pythagorean gap of right-angled bulging triangles.

#include <algorithm>
#include <array>
#include <cmath>
#include <utility>
#include <vector>

#include "bulge/construct.hpp"
#include "bulge/errors.hpp"
#include "bulge/geom.hpp"
#include "bulge/metrics.hpp"

namespace bulge {

struct TriangleInequality {
  bool holds = false;
  double margin = 0.0;  // min over edges of (other two) - (this one)
};

inline TriangleInequality check_triangle_inequality(const BulgingTriangle& bt) {
  if (bt.convexity != Convexity::Convex) throw ConcaveUnsupported();
  const EdgeLengths len = edge_lengths(bt);
  const double margin = std::min({len.bc + len.ca - len.ab, len.ca + len.ab - len.bc, len.ab + len.bc - len.ca});
  return {margin > 0.0, margin};
}

// One relabeling (a, b, c) of the vertices, with both ordering claims
// evaluated under it.
struct OrderingCase {
  Vertex a = Vertex::A;
  Vertex b = Vertex::B;
  Vertex c = Vertex::C;
  // angle(b) < angle(c) <= pi/2  =>  |edge ca| < |edge ab|
  bool forward_applicable = false;
  bool forward_holds = true;
  // angle(a) strictly minimal and |edge ab| > |edge ca|  =>  angle(c) > angle(b)
  bool converse_applicable = false;
  bool converse_holds = true;
};

struct OrderingReport {
  std::array<std::pair<Edge, double>, 3> by_length{};  // ascending
  std::vector<OrderingCase> cases;                      // cases[0] is the identity labeling

  bool all_hold() const {
    return std::all_of(cases.begin(), cases.end(),
                       [](const OrderingCase& k) { return k.forward_holds && k.converse_holds; });
  }
  int applicable() const {
    int n = 0;
    for (const auto& k : cases) n += static_cast<int>(k.forward_applicable) + static_cast<int>(k.converse_applicable);
    return n;
  }
};

inline OrderingReport edge_ordering_check(const BulgingTriangle& bt) {
  if (bt.convexity != Convexity::Convex) throw ConcaveUnsupported();
  const EdgeLengths len = edge_lengths(bt);
  const TriangleAngles ang = interior_angles(bt.triangle);

  OrderingReport rep;
  rep.by_length = {{{Edge::AB, len.ab}, {Edge::BC, len.bc}, {Edge::CA, len.ca}}};
  std::stable_sort(rep.by_length.begin(), rep.by_length.end(),
                   [](const auto& l, const auto& r) { return l.second < r.second; });

  std::array<Vertex, 3> perm = kVertices;
  do {
    OrderingCase k{perm[0], perm[1], perm[2]};
    const double ta = ang.at(k.a), tb = ang.at(k.b), tc = ang.at(k.c);
    const double l_ab = len.of(edge_between(k.a, k.b));
    const double l_ca = len.of(edge_between(k.c, k.a));

    k.forward_applicable = tb < tc - kAngleEps && tc <= kHalfPi + kAngleEps;
    if (k.forward_applicable) k.forward_holds = l_ca < l_ab;

    k.converse_applicable = ta < std::min(tb, tc) - kAngleEps && l_ab > l_ca;
    if (k.converse_applicable) k.converse_holds = tc > tb;

    rep.cases.push_back(k);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return rep;
}

struct IsoscelesReport {
  std::vector<Vertex> apexes;  // vertices whose two base angles agree
  bool equal = false;
  double delta = 0.0;          // worst |difference| of the two edges at an apex
};

/// The two edges meeting at an isosceles apex have equal length.
inline IsoscelesReport isoceles_edge_equality(const BulgingTriangle& bt) {
  const EdgeLengths len = edge_lengths(bt);
  const TriangleAngles ang = interior_angles(bt.triangle);
  IsoscelesReport rep;
  for (Vertex apex : kVertices) {
    const Edge opp = opposite_edge(apex);
    const Vertex y = first_vertex(opp), z = second_vertex(opp);
    if (std::abs(ang.at(y) - ang.at(z)) > kAngleEps) continue;
    rep.apexes.push_back(apex);
    rep.delta = std::max(rep.delta, std::abs(len.of(edge_between(apex, y)) - len.of(edge_between(z, apex))));
  }
  if (rep.apexes.empty()) throw NotIsosceles();
  rep.equal = rep.delta <= 1e-9 * len.sum();
  return rep;
}

namespace detail {

inline void check_legs(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b)) {
    throw BadLegs("legs must be positive and finite");
  }
}

}  // namespace detail

/// Zero of the Pythagorean gap function on [pi/4, pi/2): pi b / (2 (a + b)).
inline double theta_zero(double a, double b) {
  detail::check_legs(a, b);
  if (a > b) throw BadLegs("theta_zero expects a <= b");
  return kPi * b / (2.0 * (a + b));
}

/// Normalized gap F(t) = (b^2 - a^2)/b^2 t^2 - pi t + pi^2/4, the
/// leg-edge squares minus the hypotenuse-edge square over (a^2 + b^2).
inline double pyth_function(double a, double b, double t) {
  return (b * b - a * a) / (b * b) * t * t - kPi * t + kPi * kPi / 4.0;
}

/// Closed-form edge lengths of the bulging triangle on B(0,0), C(a,0), A(a,b).
inline EdgeLengths right_edge_lengths(double a, double b) {
  detail::check_legs(a, b);
  const double t = std::atan2(b, a);
  const double hyp2 = a * a + b * b;
  const double hyp = std::sqrt(hyp2);
  EdgeLengths len;
  // For a > b the AB-center moves from CA onto BC and the mirrored form applies.
  len.ab = a <= b ? hyp2 / b * t : hyp2 / a * (kHalfPi - t);
  len.bc = hyp * (kHalfPi - t);
  len.ca = hyp * t;
  return len;
}

enum class PythVerdict { SumDominates, Equal, HypotenuseDominates };

constexpr const char* name(PythVerdict v) {
  switch (v) {
    case PythVerdict::SumDominates: return "sum_dominates";
    case PythVerdict::Equal: return "equal";
    case PythVerdict::HypotenuseDominates: return "hypotenuse_dominates";
  }
  return "?";
}

struct PythReport {
  double a = 0.0;  // shorter leg
  double b = 0.0;  // longer leg
  double t = 0.0;  // arctan(b / a), the angle at B
  double theta0 = 0.0;
  // (|BC~|^2 + |CA~|^2) - |AB~|^2, evaluated as (a^2 + b^2) F(t)
  double gap = 0.0;
  // Same quantity from the three closed-form edge lengths.
  double gap_from_edges = 0.0;
  PythVerdict verdict = PythVerdict::Equal;

  bool paths_agree() const {
    return std::abs(gap - gap_from_edges) <= 1e-9 * (a * a + b * b) * kPi * kPi / 4.0;
  }
};

inline PythReport pyth_gap(double a, double b) {
  detail::check_legs(a, b);
  if (a > b) std::swap(a, b);
  PythReport r;
  r.a = a;
  r.b = b;
  r.t = std::atan2(b, a);
  r.theta0 = theta_zero(a, b);
  const double scale = a * a + b * b;
  r.gap = scale * pyth_function(a, b, r.t);
  const EdgeLengths len = right_edge_lengths(a, b);
  r.gap_from_edges = (len.bc * len.bc + len.ca * len.ca) - len.ab * len.ab;
  if (std::abs(r.gap) <= 1e-9 * scale) {
    r.verdict = PythVerdict::Equal;
  } else {
    r.verdict = r.gap > 0.0 ? PythVerdict::SumDominates : PythVerdict::HypotenuseDominates;
  }
  return r;
}

enum class PythBranch { InLowerBranch, InUpperBranch };

constexpr const char* name(PythBranch b) {
  return b == PythBranch::InLowerBranch ? "lower" : "upper";
}

/// Lower branch: t <= theta0 where the gap is nonnegative. Since
/// arctan(b/a) >= pi b / (2(a+b)) for a <= b, only equal legs land there.
inline PythBranch pyth_classify(double a, double b) {
  detail::check_legs(a, b);
  if (a > b) throw BadLegs("pyth_classify expects a <= b");
  const double t = std::atan2(b, a);
  const double t0 = theta_zero(a, b);
  return t <= t0 * (1.0 + 1e-12) ? PythBranch::InLowerBranch : PythBranch::InUpperBranch;
}

}  // namespace bulge
