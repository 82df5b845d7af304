#pragma once

// Seeded generators for property suites and `verify --random`. Only the
// exactly specified std::mt19937_64 engine is used, with doubles taken from
// the top 53 bits, so streams are identical on every platform.

#include <cmath>
#include <cstdint>
#include <random>

#include "bulge/geom.hpp"

namespace bulge {

class TriangleSampler {
 public:
  explicit TriangleSampler(std::uint64_t seed) : rng_(seed) {}

  // Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * static_cast<double>(rng_() >> 11) * 0x1.0p-53; }

  // Random rotation, scale in [0.1, 10) (log-uniform) and shift in [-10, 10)^2.
  Similarity similarity() {
    Similarity s;
    s.angle = uniform(0.0, 2.0 * kPi);
    s.scale = std::exp(uniform(std::log(0.1), std::log(10.0)));
    s.shift = {uniform(-10.0, 10.0), uniform(-10.0, 10.0)};
    return s;
  }

  // All angles in [margin, pi/2 - margin].
  Triangle acute(double margin = 0.05) {
    for (;;) {
      const double alpha = uniform(margin, kHalfPi - margin);
      const double beta = uniform(margin, kHalfPi - margin);
      const double gamma = kPi - alpha - beta;
      if (gamma >= margin && gamma <= kHalfPi - margin) return from_angles(alpha, beta);
    }
  }

  // Obtuse angle in [pi/2 + 0.2, pi - 0.3], the other two at least 0.15.
  Triangle obtuse() {
    for (;;) {
      const double wide = uniform(kHalfPi + 0.2, kPi - 0.3);
      const double alpha = uniform(0.15, kPi - wide - 0.15);
      const double beta = kPi - wide - alpha;
      if (beta < 0.15) continue;
      switch (rng_() % 3) {
        case 0: return from_angles(wide, alpha);
        case 1: return from_angles(alpha, wide);
        default: return from_angles(alpha, beta);
      }
    }
  }

  struct Legs {
    double a = 1.0;
    double b = 1.0;
  };

  // Leg ratio b/a log-uniform in [1/20, 20], a in [0.1, 10).
  Legs legs() {
    const double a = std::exp(uniform(std::log(0.1), std::log(10.0)));
    const double ratio = std::exp(uniform(-std::log(20.0), std::log(20.0)));
    return {a, a * ratio};
  }

  // Right angle at a random vertex, placed by a random similarity.
  Triangle right() { return right(legs()); }

  Triangle right(Legs l) {
    const Similarity s = similarity();
    const Point2 b = s.apply(Point2{0.0, 0.0}), c = s.apply(Point2{l.a, 0.0}), a = s.apply(Point2{l.a, l.b});
    switch (rng_() % 3) {
      case 0: return normalize(a, b, c);
      case 1: return normalize(b, c, a);
      default: return normalize(c, a, b);
    }
  }

  // Angle alpha at A, beta at B; vertices on a circle of random placement.
  Triangle from_angles(double alpha, double beta) {
    // Inscribed angle theorem: B at 0, C at 2 alpha, A at 2 alpha + 2 beta.
    const Point2 b{1.0, 0.0};
    const Point2 c{std::cos(2.0 * alpha), std::sin(2.0 * alpha)};
    const Point2 a{std::cos(2.0 * (alpha + beta)), std::sin(2.0 * (alpha + beta))};
    const Similarity s = similarity();
    return normalize(s.apply(a), s.apply(b), s.apply(c));
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace bulge
