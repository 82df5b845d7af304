#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "bulge/geom.hpp"
#include "bulge/random_triangles.hpp"
#include "test_support.hpp"

namespace bulge {
namespace {

using testing::kSqrt3;

TEST(Normalize, KeepsCounterClockwiseInput) {
  const Triangle t = normalize({0, 0}, {1, 0}, {0.5, kSqrt3 / 2});
  EXPECT_EQ(t.a(), (Point2{0, 0}));
  EXPECT_EQ(t.b(), (Point2{1, 0}));
  EXPECT_EQ(t.c(), (Point2{0.5, kSqrt3 / 2}));
  EXPECT_GT(t.area(), 0.0);
}

TEST(Normalize, SwapsClockwiseInput) {
  const Triangle t = normalize({0, 0}, {0.5, kSqrt3 / 2}, {1, 0});
  EXPECT_EQ(t.a(), (Point2{0, 0}));
  EXPECT_EQ(t.b(), (Point2{1, 0}));
  EXPECT_EQ(t.c(), (Point2{0.5, kSqrt3 / 2}));
}

TEST(Normalize, RejectsCollinear) {
  EXPECT_THROW(normalize({0, 0}, {1, 0}, {2, 0}), DegenerateTriangle);
  EXPECT_THROW(normalize({1, 1}, {1, 1}, {2, 3}), DegenerateTriangle);
}

TEST(Normalize, RejectsNonFinite) {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  const double inf = std::numeric_limits<double>::infinity();
  EXPECT_THROW(normalize({nan, 0}, {1, 0}, {0, 1}), InvalidInput);
  EXPECT_THROW(normalize({0, 0}, {inf, 0}, {0, 1}), InvalidInput);
}

TEST(Normalize, DegeneracyThresholdIsScaleFree) {
  for (double k : {1e-9, 1.0, 1e9}) {
    EXPECT_NO_THROW(normalize({0, 0}, {k, 0}, {0, 1e-9 * k}));
    EXPECT_THROW(normalize({0, 0}, {k, 0}, {0.5 * k, 1e-13 * k}), DegenerateTriangle);
  }
}

TEST(Normalize, IsIdempotent) {
  TriangleSampler s(7);
  for (int i = 0; i < 500; ++i) {
    const Triangle t = i % 2 ? s.acute() : s.obtuse();
    EXPECT_EQ(normalize(t), t);
  }
}

TEST(SideLengths, Examples) {
  const SideLengths eq = side_lengths(testing::equilateral());
  EXPECT_NEAR(eq.a, 1.0, 1e-15);
  EXPECT_NEAR(eq.b, 1.0, 1e-15);
  EXPECT_NEAR(eq.c, 1.0, 1e-15);

  const SideLengths t = side_lengths(normalize({1, kSqrt3}, {0, 0}, {1, 0}));
  EXPECT_DOUBLE_EQ(t.a, 1.0);
  EXPECT_DOUBLE_EQ(t.b, kSqrt3);
  EXPECT_DOUBLE_EQ(t.c, 2.0);

  const SideLengths r = side_lengths(testing::right_isosceles());
  EXPECT_DOUBLE_EQ(r.a, 1.0);
  EXPECT_DOUBLE_EQ(r.b, 1.0);
  EXPECT_DOUBLE_EQ(r.c, std::sqrt(2.0));
}

TEST(InteriorAngles, Examples) {
  const TriangleAngles eq = interior_angles(testing::equilateral());
  EXPECT_NEAR(eq.alpha, kPi / 3, 1e-15);
  EXPECT_NEAR(eq.beta, kPi / 3, 1e-15);
  EXPECT_NEAR(eq.gamma, kPi / 3, 1e-15);

  const TriangleAngles t = interior_angles(testing::thirty_sixty_ninety());
  EXPECT_NEAR(t.alpha, kPi / 6, 1e-15);
  EXPECT_NEAR(t.beta, kPi / 3, 1e-15);
  EXPECT_NEAR(t.gamma, kPi / 2, 1e-15);

  const TriangleAngles r = interior_angles(testing::right_isosceles());
  EXPECT_NEAR(r.alpha, kPi / 4, 1e-15);
  EXPECT_NEAR(r.beta, kPi / 4, 1e-15);
  EXPECT_NEAR(r.gamma, kPi / 2, 1e-15);
}

TEST(ClassifyTriangle, Examples) {
  EXPECT_EQ(classify_triangle(testing::equilateral()).kind, TriangleKind::Acute);
  EXPECT_EQ(classify_triangle(testing::right_isosceles()), (TriangleClass{TriangleKind::Right, Vertex::C}));
  // dot(CB, CA) = (-1, 0).(0.8, 0.3) = -0.8 < 0, so the angle at C exceeds pi/2.
  EXPECT_EQ(classify_triangle(testing::obtuse_example()), (TriangleClass{TriangleKind::Obtuse, Vertex::C}));
  EXPECT_NEAR(interior_angles(testing::obtuse_example()).gamma, 2.7828219833192210, 1e-14);
}

TEST(ClassifyTriangle, RightAngleToleranceBand) {
  // A right angle perturbed by ~1e-12 rad still classifies Right.
  const Triangle t = normalize({1.0, 1.0}, {0.0, 0.0}, {1.0 + 1e-12, 0.0});
  EXPECT_EQ(classify_triangle(t).kind, TriangleKind::Right);
  const Triangle o = normalize({1.0, 1.0}, {0.0, 0.0}, {1.0 - 1e-6, 0.0});
  EXPECT_EQ(classify_triangle(o).kind, TriangleKind::Obtuse);
}

TEST(GeomProperties, AngleSumAndLawOfSines) {
  TriangleSampler s(11);
  for (int i = 0; i < 3000; ++i) {
    const Triangle t = i % 3 == 0 ? s.acute() : i % 3 == 1 ? s.right() : s.obtuse();
    const TriangleAngles ang = interior_angles(t);
    EXPECT_NEAR(ang.alpha + ang.beta + ang.gamma, kPi, 1e-12);
    for (Vertex v : kVertices) {
      EXPECT_GT(ang.at(v), 0.0);
      EXPECT_LT(ang.at(v), kPi);
    }
    const SideLengths len = side_lengths(t);
    const double k = len.a / std::sin(ang.alpha);
    EXPECT_TRUE(testing::rel_near(len.b / std::sin(ang.beta), k, 1e-9));
    EXPECT_TRUE(testing::rel_near(len.c / std::sin(ang.gamma), k, 1e-9));
    EXPECT_LT(len.a, len.b + len.c);
    EXPECT_LT(len.b, len.c + len.a);
    EXPECT_LT(len.c, len.a + len.b);
  }
}

TEST(GeomProperties, SimilarityInvariance) {
  TriangleSampler s(12);
  for (int i = 0; i < 2000; ++i) {
    const Triangle t = i % 3 == 0 ? s.acute() : i % 3 == 1 ? s.right() : s.obtuse();
    const Similarity sim = s.similarity();
    const Triangle u = sim.apply(t);
    const TriangleAngles a0 = interior_angles(t), a1 = interior_angles(u);
    for (Vertex v : kVertices) EXPECT_TRUE(testing::rel_near(a0.at(v), a1.at(v), 1e-9));
    const SideLengths l0 = side_lengths(t), l1 = side_lengths(u);
    EXPECT_TRUE(testing::rel_near(l1.a, sim.scale * l0.a, 1e-9));
    EXPECT_TRUE(testing::rel_near(l1.b, sim.scale * l0.b, 1e-9));
    EXPECT_TRUE(testing::rel_near(l1.c, sim.scale * l0.c, 1e-9));
    EXPECT_EQ(classify_triangle(t), classify_triangle(u));
  }
}

}  // namespace
}  // namespace bulge
