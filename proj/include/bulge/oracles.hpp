#pragma once

// Brute-force checkers for the closed forms in metrics.hpp. Nothing here
// reuses the closed-form length or area code paths.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <thread>
#include <vector>

#include "bulge/construct.hpp"
#include "bulge/errors.hpp"
#include "bulge/geom.hpp"

namespace bulge::oracles {

struct SampleConfig {
  std::uint64_t n = 1;
  std::uint64_t seed = 0;
};

/// Sum of chords over `n` equal-angle subdivisions of the arc. The sweep and
/// radius are re-derived from the endpoints, not taken from the stored fields.
inline double polyline_length(const ArcEdge& arc, std::uint64_t n) {
  if (n < 1) throw InvalidInput("polyline_length needs n >= 1");
  const double r = distance(arc.center, arc.start);
  const double a0 = std::atan2(arc.start.y - arc.center.y, arc.start.x - arc.center.x);
  const double a1 = std::atan2(arc.end.y - arc.center.y, arc.end.x - arc.center.x);
  const double sweep = ccw_offset(a0, a1);
  Point2 prev = arc.start;
  double total = 0.0;
  for (std::uint64_t k = 1; k <= n; ++k) {
    const double phi = a0 + sweep * static_cast<double>(k) / static_cast<double>(n);
    const Point2 p{arc.center.x + r * std::cos(phi), arc.center.y + r * std::sin(phi)};
    total += distance(prev, p);
    prev = p;
  }
  return total;
}

namespace detail {

inline bool in_triangle(const Triangle& t, Point2 p) {
  return cross(t.b() - t.a(), p - t.a()) >= 0.0 && cross(t.c() - t.b(), p - t.b()) >= 0.0 &&
         cross(t.a() - t.c(), p - t.c()) >= 0.0;
}

inline bool in_segment(const ArcEdge& arc, Point2 p) {
  const Point2 d = p - arc.center;
  if (dot(d, d) > arc.radius * arc.radius) return false;
  return dot(p - midpoint(arc.start, arc.end), arc.bulge_outward) > 0.0;
}

inline bool member(const BulgingTriangle& bt, Point2 p) {
  return in_triangle(bt.triangle, p) || in_segment(bt.arc_ab, p) || in_segment(bt.arc_bc, p) ||
         in_segment(bt.arc_ca, p);
}

// SplitMix64 finalizer; keyed by (seed, counter) so samples are order-free.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

constexpr double unit_from(std::uint64_t seed, std::uint64_t counter) {
  const std::uint64_t h = mix64(seed * 0x9e3779b97f4a7c15ULL + mix64(counter + 0x632be59bd9b4e019ULL));
  return static_cast<double>(h >> 11) * 0x1.0p-53;
}

inline void require_convex(const BulgingTriangle& bt) {
  if (bt.convexity != Convexity::Convex) throw ConcaveUnsupported();
}

}  // namespace detail

/// Triangle (inclusive) or any bulge segment: inside the arc's circle and
/// strictly beyond its chord.
inline bool point_in_bulging(const BulgingTriangle& bt, Point2 p) {
  detail::require_convex(bt);
  return detail::member(bt, p);
}

struct AreaEstimate {
  double estimate = 0.0;
  double std_error = 0.0;
  std::uint64_t hits = 0;
  std::uint64_t samples = 0;
};

/// Rejection sampling over the bounding box. Sample i uses counters 2i and
/// 2i+1, so the hit count is identical for any `threads`.
inline AreaEstimate monte_carlo_area(const BulgingTriangle& bt, SampleConfig cfg, unsigned threads = 0) {
  detail::require_convex(bt);
  if (cfg.n < 1) throw InvalidInput("monte_carlo_area needs n >= 1");
  const Box box = bounding_box(bt);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, cfg.n));

  auto count = [&](std::uint64_t lo, std::uint64_t hi) {
    std::uint64_t hits = 0;
    for (std::uint64_t i = lo; i < hi; ++i) {
      const Point2 p{box.min.x + box.width() * detail::unit_from(cfg.seed, 2 * i),
                     box.min.y + box.height() * detail::unit_from(cfg.seed, 2 * i + 1)};
      hits += detail::member(bt, p) ? 1 : 0;
    }
    return hits;
  };

  std::vector<std::uint64_t> partial(threads, 0);
  if (threads == 1) {
    partial[0] = count(0, cfg.n);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) {
      const std::uint64_t lo = cfg.n * w / threads, hi = cfg.n * (w + 1) / threads;
      pool.emplace_back([&, w, lo, hi] { partial[w] = count(lo, hi); });
    }
    for (auto& th : pool) th.join();
  }
  std::uint64_t hits = 0;
  for (auto h : partial) hits += h;

  const double p = static_cast<double>(hits) / static_cast<double>(cfg.n);
  return {box.area() * p, box.area() * std::sqrt(p * (1.0 - p) / static_cast<double>(cfg.n)), hits, cfg.n};
}

/// Counter-clockwise boundary walk: arc AB, then BC, then CA. Each arc
/// contributes its start vertex and n_per_arc - 1 interior points, so the
/// shared endpoints appear once and the first point is vertex A.
inline std::vector<Point2> boundary_samples(const BulgingTriangle& bt, std::uint64_t n_per_arc) {
  if (n_per_arc < 2) throw InvalidInput("boundary_samples needs n_per_arc >= 2");
  std::vector<Point2> out;
  out.reserve(3 * n_per_arc);
  for (const ArcEdge* arc : bt.arcs()) {
    out.push_back(arc->start);
    for (std::uint64_t k = 1; k < n_per_arc; ++k) {
      out.push_back(arc->point_at(static_cast<double>(k) / static_cast<double>(n_per_arc)));
    }
  }
  return out;
}

}  // namespace bulge::oracles
