#pragma once

#include <cmath>

#include "bulge/bulge.hpp"

namespace bulge::testing {

inline const double kSqrt2 = std::sqrt(2.0);
inline const double kSqrt3 = std::sqrt(3.0);

inline Triangle equilateral(double side = 1.0) {
  return normalize({0.0, 0.0}, {side, 0.0}, {0.5 * side, 0.5 * kSqrt3 * side});
}

// Right angle at C with B(0,0), C(a,0), A(a,b).
inline Triangle right_legs(double a, double b) { return normalize({a, b}, {0.0, 0.0}, {a, 0.0}); }

inline Triangle right_isosceles() { return right_legs(1.0, 1.0); }
inline Triangle thirty_sixty_ninety() { return right_legs(1.0, kSqrt3); }
inline Triangle obtuse_example() { return normalize({1.8, 0.3}, {0.0, 0.0}, {1.0, 0.0}); }

inline bool rel_near(double x, double y, double rel) {
  return std::abs(x - y) <= rel * std::max(std::abs(x), std::abs(y));
}

}  // namespace bulge::testing
