#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "bulge/metrics.hpp"
#include "bulge/oracles.hpp"
#include "bulge/random_triangles.hpp"
#include "test_support.hpp"

namespace bulge {
namespace {

using testing::kSqrt2;
using testing::kSqrt3;
using testing::rel_near;

// Vertices on the unit circle with angle alpha at A and beta at B.
Triangle inscribed(double alpha, double beta) {
  return normalize({std::cos(2 * (alpha + beta)), std::sin(2 * (alpha + beta))}, {1.0, 0.0},
                   {std::cos(2 * alpha), std::sin(2 * alpha)});
}

TEST(EdgeLength, Examples) {
  EXPECT_NEAR(edge_length(build(testing::equilateral()).arc_ab), kPi / 3, 1e-15);
  const BulgingTriangle t = build(testing::thirty_sixty_ninety());
  EXPECT_NEAR(edge_length(t.arc_ab), 4 * kSqrt3 * kPi / 9, 1e-14);
  EXPECT_NEAR(edge_length(t.arc_ab), 2.4183991523122905, 1e-14);
  EXPECT_NEAR(edge_length(t.arc_ca), 2 * kPi / 3, 1e-14);
}

TEST(EdgeLengths, Examples) {
  const EdgeLengths iso = edge_lengths(build(testing::right_isosceles()));
  EXPECT_NEAR(iso.ab, kPi / 2, 1e-15);
  EXPECT_NEAR(iso.bc, kSqrt2 * kPi / 4, 1e-15);
  EXPECT_NEAR(iso.ca, kSqrt2 * kPi / 4, 1e-15);
  EXPECT_NEAR(iso.ab / iso.bc, kSqrt2, 1e-14);

  const EdgeLengths t = edge_lengths(build(testing::thirty_sixty_ninety()));
  EXPECT_NEAR(t.ab, 4 * kSqrt3 * kPi / 9, 1e-14);
  EXPECT_NEAR(t.bc, kPi / 3, 1e-14);
  EXPECT_NEAR(t.ca, 2 * kPi / 3, 1e-14);
  // 4 : sqrt3 : 2 sqrt3
  EXPECT_NEAR(t.ab / t.bc, 4 / kSqrt3, 1e-13);
  EXPECT_NEAR(t.ca / t.bc, 2.0, 1e-13);

  const EdgeLengths eq = edge_lengths(build(testing::equilateral()));
  EXPECT_NEAR(eq.ab, kPi / 3, 1e-15);
  EXPECT_NEAR(eq.bc, kPi / 3, 1e-15);
  EXPECT_NEAR(eq.ca, kPi / 3, 1e-15);
}

TEST(Area, Examples) {
  // Frozen from tests/oracle/derive_values.py (quadrature of the segments).
  EXPECT_NEAR(area(build(testing::equilateral())), 0.70477092301045797, 1e-15);
  EXPECT_NEAR(area(build(testing::right_isosceles())), 1.0707963267948966, 1e-15);
  EXPECT_NEAR(area(build(testing::equilateral(2.0))), 4 * (kPi - kSqrt3) / 2, 1e-14);
}

TEST(Area, RejectsConcave) { EXPECT_THROW(area(build(testing::obtuse_example())), ConcaveUnsupported); }

TEST(CircumDisk, RightIsosceles) {
  const CircumDisk d = circumdisk_gap(build(testing::right_isosceles()));
  EXPECT_EQ(d.hypotenuse, Edge::AB);
  EXPECT_NEAR(d.center.x, 0.5, 1e-15);
  EXPECT_NEAR(d.center.y, 0.5, 1e-15);
  EXPECT_NEAR(d.radius, kSqrt2 / 2, 1e-15);
  EXPECT_NEAR(d.max_boundary_distance, kSqrt2 / 2, 1e-15);
  EXPECT_TRUE(d.contains_boundary());
  // AB-arc apex is the point nearest M: r_AB - |MP|.
  const BulgingTriangle bt = build(testing::right_isosceles());
  EXPECT_NEAR(distance(bt.arc_ab.apex(), d.center), 0.29289321881345248, 1e-15);
  EXPECT_NEAR(d.hypotenuse_arc_radius, 1.0, 1e-15);
  EXPECT_NEAR(d.far_point_distance, kSqrt2, 1e-15);
}

TEST(CircumDisk, LegsOneTwo) {
  const CircumDisk d = circumdisk_gap(build(testing::right_legs(1.0, 2.0)));
  EXPECT_NEAR(d.hypotenuse_arc_radius, 1.25, 1e-15);
  EXPECT_NEAR(d.far_point_distance, 3 * std::sqrt(5.0) / 4, 1e-15);
  EXPECT_LT(d.hypotenuse_arc_radius, d.far_point_distance);
  EXPECT_TRUE(d.contains_boundary());
}

TEST(CircumDisk, RightAngleAtAnyVertex) {
  // Same right triangle relabeled so the right angle sits at A.
  const CircumDisk d = circumdisk_gap(build(normalize({1.0, 0.0}, {1.0, 2.0}, {0.0, 0.0})));
  EXPECT_NEAR(d.radius, std::sqrt(5.0) / 2, 1e-15);
  EXPECT_NEAR(d.center.x, 0.5, 1e-15);
  EXPECT_NEAR(d.center.y, 1.0, 1e-15);
}

TEST(CircumDisk, RejectsNonRight) {
  EXPECT_THROW(circumdisk_gap(build(testing::equilateral())), NotRightAngled);
  EXPECT_THROW(circumdisk_gap(build(testing::obtuse_example())), NotRightAngled);
}

TEST(ConvexityCheck, Examples) {
  EXPECT_EQ(convexity_check(build(testing::equilateral()), 64), Convexity::Convex);
  EXPECT_EQ(convexity_check(build(testing::right_isosceles()), 64), Convexity::Convex);
  EXPECT_EQ(convexity_check(build(testing::obtuse_example()), 256), Convexity::Concave);
}

TEST(ConvexityCheck, InconclusiveBetweenBands) {
  // Obtuse by 0.015 rad: the sampled dent lands between -1e-6 s^2 and -1e-9 s^2 at n = 64.
  const double base = (kPi - (kHalfPi + 0.015)) / 2;
  const BulgingTriangle bt = build(inscribed(base, base));
  for (std::uint64_t n : {64u, 256u, 1024u}) EXPECT_THROW(convexity_check(bt, n), Inconclusive) << n;
  // Too coarse to land a sample near the obtuse vertex.
  EXPECT_EQ(convexity_check(bt, 16), Convexity::Convex);
  EXPECT_EQ(bt.convexity, Convexity::Concave);

  const double deeper = (kPi - (kHalfPi + 0.03)) / 2;
  EXPECT_EQ(convexity_check(build(inscribed(deeper, deeper)), 64), Convexity::Concave);
}

TEST(ConvexityCheck, RejectsTooFewSamples) {
  EXPECT_THROW(convexity_check(build(testing::equilateral()), 2), InvalidInput);
}

TEST(Measure, ReportFields) {
  const MetricsReport r = measure(build(testing::right_isosceles()));
  EXPECT_EQ(r.perimeter, r.len_ab + r.len_bc + r.len_ca);
  ASSERT_TRUE(r.area.has_value());
  EXPECT_GT(*r.area, 0.5);
  ASSERT_TRUE(r.circumdisk.has_value());
  EXPECT_EQ(r.convexity, Convexity::Convex);

  const MetricsReport eq = measure(build(testing::equilateral()));
  EXPECT_FALSE(eq.circumdisk.has_value());

  const MetricsReport ob = measure(build(testing::obtuse_example()));
  EXPECT_FALSE(ob.area.has_value());
  EXPECT_EQ(ob.convexity, Convexity::Concave);
}

TEST(MetricsProperties, ClosedFormLengthsMatchPolyline) {
  TriangleSampler s(31);
  for (int i = 0; i < 10000; ++i) {
    const BulgingTriangle bt = build(i % 2 ? s.acute() : s.right());
    for (const ArcEdge* arc : bt.arcs()) {
      const double l = edge_length(*arc);
      for (std::uint64_t n : {16u, 1024u}) {
        const double poly = oracles::polyline_length(*arc, n);
        EXPECT_LE(std::abs(l - poly), 2.0 * l / double(n * n));
      }
    }
  }
}

TEST(MetricsProperties, AreaMatchesMonteCarlo) {
  TriangleSampler s(32);
  for (int i = 0; i < 10; ++i) {
    const BulgingTriangle bt = build(i % 2 ? s.acute() : s.right());
    const auto est = oracles::monte_carlo_area(bt, {200000, 1000u + i});
    EXPECT_LE(std::abs(est.estimate - area(bt)), 4.0 * est.std_error) << "instance " << i;
    EXPECT_GT(area(bt), bt.triangle.area());
  }
}

TEST(MetricsProperties, ScalingLaws) {
  TriangleSampler s(33);
  for (int i = 0; i < 1000; ++i) {
    const Triangle t = i % 2 ? s.acute() : s.right();
    const double k = s.uniform(0.01, 100.0);
    const BulgingTriangle small = build(t);
    const BulgingTriangle big = build(Similarity{k, 0.0, {}}.apply(t));
    const EdgeLengths l0 = edge_lengths(small), l1 = edge_lengths(big);
    EXPECT_TRUE(rel_near(l1.ab, k * l0.ab, 1e-9));
    EXPECT_TRUE(rel_near(l1.bc, k * l0.bc, 1e-9));
    EXPECT_TRUE(rel_near(l1.ca, k * l0.ca, 1e-9));
    EXPECT_TRUE(rel_near(area(big), k * k * area(small), 1e-9));
  }
}

TEST(MetricsProperties, RightLegEdgesSumToQuarterTurnOfHypotenuse) {
  TriangleSampler s(34);
  for (int i = 0; i < 1000; ++i) {
    const Triangle t = s.right();
    const Vertex rv = classify_triangle(t).vertex;
    const Edge hyp = opposite_edge(rv);
    const EdgeLengths len = edge_lengths(build(t));
    const double legs = len.sum() - len.of(hyp);
    EXPECT_TRUE(rel_near(legs, kHalfPi * side_lengths(t).of(hyp), 1e-9));
  }
}

TEST(MetricsProperties, ReuleauxHasConstantWidth) {
  const BulgingTriangle bt = build(testing::equilateral());
  const auto pts = oracles::boundary_samples(bt, 4096);
  for (int k = 0; k < 360; ++k) {
    const Point2 u{std::cos(k * kPi / 180), std::sin(k * kPi / 180)};
    double lo = 1e300, hi = -1e300;
    for (Point2 p : pts) {
      lo = std::min(lo, dot(p, u));
      hi = std::max(hi, dot(p, u));
    }
    EXPECT_NEAR(hi - lo, 1.0, 1e-6) << "direction " << k;
  }
}

TEST(MetricsProperties, NonEquilateralWidthVaries) {
  const auto pts = oracles::boundary_samples(build(testing::right_legs(1.0, 2.0)), 1024);
  double wmin = 1e300, wmax = 0.0;
  for (int k = 0; k < 180; ++k) {
    const Point2 u{std::cos(k * kPi / 180), std::sin(k * kPi / 180)};
    double lo = 1e300, hi = -1e300;
    for (Point2 p : pts) {
      lo = std::min(lo, dot(p, u));
      hi = std::max(hi, dot(p, u));
    }
    wmin = std::min(wmin, hi - lo);
    wmax = std::max(wmax, hi - lo);
  }
  EXPECT_GT(wmax - wmin, 0.1);
}

TEST(MetricsProperties, SampledConvexityMatchesFlag) {
  TriangleSampler s(35);
  for (int i = 0; i < 600; ++i) {
    const BulgingTriangle bt = build(i % 3 == 0 ? s.acute() : i % 3 == 1 ? s.right() : s.obtuse());
    EXPECT_EQ(convexity_check(bt, 64), bt.convexity) << "instance " << i;
  }
}

TEST(MetricsProperties, CircumDiskMatchesSampledBoundary) {
  TriangleSampler s(36);
  for (int i = 0; i < 300; ++i) {
    const BulgingTriangle bt = build(s.right());
    const CircumDisk d = circumdisk_gap(bt);
    double sampled = 0.0;
    for (Point2 p : oracles::boundary_samples(bt, 512)) sampled = std::max(sampled, distance(p, d.center));
    EXPECT_LE(sampled, d.max_boundary_distance * (1 + 1e-12));
    EXPECT_GE(sampled, d.max_boundary_distance * (1 - 1e-6));
  }
}

}  // namespace
}  // namespace bulge
