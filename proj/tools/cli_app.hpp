#pragma once

// Command-line front end. Kept in a header so the test suites can drive
// run() in-process; bulge_main.cpp only forwards argv.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "bulge/bulge.hpp"
#include "report_json.hpp"

namespace bulge::cli {

inline constexpr const char* kSchema = "bulge-report/1";

inline double deg(double rad) { return rad * 180.0 / kPi; }

struct TriangleInput {
  std::vector<double> vertices;
  std::vector<double> sides;
  std::vector<double> right_legs;
  std::string report_path;

  void add_to(CLI::App* sub) {
    sub->add_option("--vertices", vertices, "Vertices A, B, C as x1 y1 x2 y2 x3 y3")->expected(6);
    sub->add_option("--sides", sides, "Side lengths a=|BC| b=|CA| c=|AB|")->expected(3);
    sub->add_option("--right", right_legs, "Right triangle legs a b: B(0,0), C(a,0), A(a,b)")->expected(2);
    sub->add_option("--input", report_path, "Read the triangle from a JSON report ('-' = stdin)");
  }

  bool any() const {
    return !vertices.empty() || !sides.empty() || !right_legs.empty() || !report_path.empty();
  }

  Json echo() const {
    Json j;
    if (!vertices.empty()) {
      j["kind"] = "vertices";
      j["values"] = vertices;
    } else if (!sides.empty()) {
      j["kind"] = "sides";
      j["values"] = sides;
    } else if (!right_legs.empty()) {
      j["kind"] = "right_legs";
      j["values"] = right_legs;
    } else {
      j["kind"] = "report";
      j["path"] = report_path;
    }
    return j;
  }

  Triangle resolve(std::istream& in) const {
    const int given = static_cast<int>(!vertices.empty()) + static_cast<int>(!sides.empty()) +
                      static_cast<int>(!right_legs.empty()) + static_cast<int>(!report_path.empty());
    if (given != 1) throw InvalidInput("give exactly one of --vertices, --sides, --right, --input");
    if (!vertices.empty()) {
      return normalize({vertices[0], vertices[1]}, {vertices[2], vertices[3]}, {vertices[4], vertices[5]});
    }
    if (!sides.empty()) return from_sides(sides[0], sides[1], sides[2]);
    if (!right_legs.empty()) {
      const double a = right_legs[0], b = right_legs[1];
      if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b)) {
        throw InvalidInput("--right legs must be positive");
      }
      return normalize({a, b}, {0.0, 0.0}, {a, 0.0});
    }
    return from_report(in);
  }

  static Triangle from_sides(double a, double b, double c) {
    for (double s : {a, b, c}) {
      if (!(s > 0.0) || !std::isfinite(s)) throw InvalidInput("--sides must be positive");
    }
    if (!(a < b + c && b < c + a && c < a + b)) throw InvalidInput("--sides violate the strict triangle inequality");
    const double x = (a * a + c * c - b * b) / (2.0 * a);
    const double y = std::sqrt(std::max(0.0, c * c - x * x));
    return normalize({x, y}, {0.0, 0.0}, {a, 0.0});
  }

  Triangle from_report(std::istream& in) const {
    Json j;
    try {
      if (report_path == "-") {
        j = Json::parse(in);
      } else {
        std::ifstream f(report_path);
        if (!f) throw InvalidInput("cannot open " + report_path);
        j = Json::parse(f);
      }
      const auto& t = j.at("triangle");
      auto pt = [&](const char* k) { return Point2{t.at(k).at(0).get<double>(), t.at(k).at(1).get<double>()}; };
      return normalize(pt("a"), pt("b"), pt("c"));
    } catch (const Json::exception& e) {
      throw InvalidInput(std::string("malformed report: ") + e.what());
    }
  }
};

inline Json point_json(Point2 p) { return Json::array({p.x, p.y}); }

inline Json triangle_json(const Triangle& t) {
  Json j;
  j["a"] = point_json(t.a());
  j["b"] = point_json(t.b());
  j["c"] = point_json(t.c());
  return j;
}

inline Json geometry_json(const BulgingTriangle& bt) {
  Json j;
  j["triangle"] = triangle_json(bt.triangle);
  const TriangleClass cls = classify_triangle(bt.triangle);
  j["classification"]["kind"] = name(cls.kind);
  if (cls.kind == TriangleKind::Acute) {
    j["classification"]["vertex"] = nullptr;
  } else {
    j["classification"]["vertex"] = name(cls.vertex);
  }
  const TriangleAngles ang = interior_angles(bt.triangle);
  j["angles_deg"] = {{"alpha", deg(ang.alpha)}, {"beta", deg(ang.beta)}, {"gamma", deg(ang.gamma)}};
  Json arcs = Json::array();
  for (Edge e : kEdges) {
    const ArcEdge& arc = bt.arc(e);
    const EdgeCenter ec = edge_center(bt.triangle, e);
    Json a;
    a["edge"] = name(e);
    a["center"] = point_json(arc.center);
    a["host"] = name(ec.host);
    a["host_param"] = ec.param;
    a["radius"] = arc.radius;
    a["central_angle_deg"] = deg(arc.central_angle);
    a["start"] = point_json(arc.start);
    a["end"] = point_json(arc.end);
    a["bulge_outward"] = point_json(arc.bulge_outward);
    arcs.push_back(a);
  }
  j["arcs"] = arcs;
  j["convexity"] = name(bt.convexity);
  return j;
}

// The two legs adjacent to the right angle, shorter first.
inline std::pair<double, double> right_legs_of(const Triangle& t) {
  const Vertex v = classify_triangle(t).vertex;
  const Edge hyp = opposite_edge(v);
  const double l1 = distance(t.vertex(v), t.vertex(first_vertex(hyp)));
  const double l2 = distance(t.vertex(v), t.vertex(second_vertex(hyp)));
  return {std::min(l1, l2), std::max(l1, l2)};
}

inline Json metrics_json(const MetricsReport& m) {
  Json j;
  j["len_ab"] = m.len_ab;
  j["len_bc"] = m.len_bc;
  j["len_ca"] = m.len_ca;
  j["perimeter"] = m.perimeter;
  if (m.area) {
    j["area"] = *m.area;
  } else {
    j["area"] = nullptr;
  }
  j["convexity"] = name(m.convexity);
  if (m.circumdisk) {
    const CircumDisk& d = *m.circumdisk;
    j["circumdisk"] = {{"center", point_json(d.center)},
                       {"radius", d.radius},
                       {"max_boundary_distance", d.max_boundary_distance}};
  } else {
    j["circumdisk"] = nullptr;
  }
  return j;
}

inline Json theorems_json(const BulgingTriangle& bt) {
  Json j;
  const bool convex = bt.convexity == Convexity::Convex;
  if (convex) {
    const TriangleInequality ti = check_triangle_inequality(bt);
    j["triangle_inequality"] = {{"holds", ti.holds}, {"margin", ti.margin}};
    const OrderingReport ord = edge_ordering_check(bt);
    Json by_len = Json::array();
    for (const auto& [e, l] : ord.by_length) by_len.push_back({{"edge", name(e)}, {"length", l}});
    j["edge_ordering"] = {{"ascending", by_len}, {"applicable", ord.applicable()}, {"all_hold", ord.all_hold()}};
  } else {
    j["triangle_inequality"] = nullptr;
    j["edge_ordering"] = nullptr;
  }
  try {
    const IsoscelesReport iso = isoceles_edge_equality(bt);
    Json apexes = Json::array();
    for (Vertex v : iso.apexes) apexes.push_back(name(v));
    j["isosceles"] = {{"apexes", apexes}, {"equal", iso.equal}, {"delta", iso.delta}};
  } catch (const NotIsosceles&) {
    j["isosceles"] = nullptr;
  }
  if (classify_triangle(bt.triangle).kind == TriangleKind::Right) {
    const auto [a, b] = right_legs_of(bt.triangle);
    const PythReport p = pyth_gap(a, b);
    j["pythagorean"] = {{"a", p.a},
                        {"b", p.b},
                        {"t_deg", deg(p.t)},
                        {"theta0_deg", deg(p.theta0)},
                        {"gap", p.gap},
                        {"gap_from_edges", p.gap_from_edges},
                        {"paths_agree", p.paths_agree()},
                        {"verdict", name(p.verdict)},
                        {"branch", name(pyth_classify(p.a, p.b))}};
    const CircumDisk d = circumdisk_gap(bt);
    j["circumdisk"] = {{"hypotenuse", name(d.hypotenuse)},
                       {"radius", d.radius},
                       {"max_boundary_distance", d.max_boundary_distance},
                       {"gap", d.radius - d.max_boundary_distance},
                       {"contains_boundary", d.contains_boundary()},
                       {"hypotenuse_arc_radius", d.hypotenuse_arc_radius},
                       {"far_point_distance", d.far_point_distance}};
  } else {
    j["pythagorean"] = nullptr;
    j["circumdisk"] = nullptr;
  }
  return j;
}

inline Json header(const char* command) {
  Json j;
  j["schema"] = kSchema;
  j["tool_version"] = kVersion;
  j["command"] = command;
  return j;
}

// ---------------------------------------------------------------------------
// verify

enum Check : int {
  kConstruction,
  kConvexitySampling,
  kTriangleInequality,
  kEdgeOrdering,
  kIsoscelesEdges,
  kPolylineLengths,
  kPythagoreanTwoPath,
  kPythagoreanSign,
  kRightEdgeSum,
  kCircumdisk,
  kMonteCarloArea,
  kCheckCount
};

inline constexpr const char* kCheckNames[kCheckCount] = {
    "construction",   "convexity_sampling", "triangle_inequality", "edge_ordering",
    "isosceles_edges", "polyline_lengths",  "pythagorean_two_path", "pythagorean_sign",
    "right_edge_sum", "circumdisk",         "monte_carlo_area"};

struct InstanceOutcome {
  std::uint32_t evaluated = 0;  // bit per Check
  std::uint32_t failed = 0;

  void record(Check c, bool ok) {
    evaluated |= 1u << c;
    if (!ok) failed |= 1u << c;
  }
};

inline bool construction_ok(const BulgingTriangle& bt) {
  const TriangleAngles ang = interior_angles(bt.triangle);
  for (Edge e : kEdges) {
    const ArcEdge& arc = bt.arc(e);
    const double r = arc.radius;
    if (std::abs(distance(arc.center, arc.start) - r) > 1e-9 * r) return false;
    if (std::abs(distance(arc.center, arc.end) - r) > 1e-9 * r) return false;
    if (!(arc.central_angle > 0.0 && arc.central_angle < kPi)) return false;
    const double chord = distance(arc.start, arc.end);
    if (std::abs(chord - 2.0 * r * std::sin(arc.central_angle / 2.0)) > 1e-9 * chord) return false;
    const ArcParams p = arc_params(chord, ang.at(first_vertex(e)), ang.at(second_vertex(e)));
    if (std::abs(p.radius - r) > 1e-9 * r) return false;
    const Point2 mid = midpoint(arc.start, arc.end);
    const Point2 third = bt.triangle.vertex(opposite_vertex(e));
    if (!(dot(arc.apex() - mid, arc.bulge_outward) > 0.0 && dot(third - mid, arc.bulge_outward) < 0.0)) return false;
  }
  return true;
}

struct VerifyConfig {
  std::uint64_t mc_samples = 0;
  std::uint64_t seed = 1;
};

inline InstanceOutcome verify_instance(const Triangle& t, const VerifyConfig& cfg, std::uint64_t index) {
  InstanceOutcome out;
  const BulgingTriangle bt = build(t);
  out.record(kConstruction, construction_ok(bt));

  bool convex_sampled = false;
  try {
    convex_sampled = convexity_check(bt, 64) == Convexity::Convex;
  } catch (const Inconclusive&) {
  }
  out.record(kConvexitySampling, convex_sampled);
  out.record(kTriangleInequality, check_triangle_inequality(bt).holds);
  out.record(kEdgeOrdering, edge_ordering_check(bt).all_hold());
  try {
    out.record(kIsoscelesEdges, isoceles_edge_equality(bt).equal);
  } catch (const NotIsosceles&) {
  }

  constexpr std::uint64_t kSegments = 1024;
  bool poly_ok = true;
  for (const ArcEdge* arc : bt.arcs()) {
    const double closed = edge_length(*arc);
    const double poly = oracles::polyline_length(*arc, kSegments);
    poly_ok = poly_ok && std::abs(closed - poly) <= 2.0 * closed / double(kSegments * kSegments);
  }
  out.record(kPolylineLengths, poly_ok);

  const TriangleClass cls = classify_triangle(t);
  if (cls.kind == TriangleKind::Right) {
    const auto [a, b] = right_legs_of(t);
    const PythReport p = pyth_gap(a, b);
    out.record(kPythagoreanTwoPath, p.paths_agree());
    out.record(kPythagoreanSign, p.t >= p.theta0 * (1.0 - 1e-12) && p.gap <= 1e-9 * (a * a + b * b));

    const Edge hyp = opposite_edge(cls.vertex);
    const EdgeLengths len = edge_lengths(bt);
    const double hyp_len = distance(t.vertex(first_vertex(hyp)), t.vertex(second_vertex(hyp)));
    const double legs_sum = len.sum() - len.of(hyp);
    const double expected = kHalfPi * hyp_len;
    out.record(kRightEdgeSum, std::abs(legs_sum - expected) <= 1e-9 * expected && len.of(hyp) < legs_sum);
    out.record(kCircumdisk, circumdisk_gap(bt).contains_boundary());
  }

  if (cfg.mc_samples > 0) {
    const auto est = oracles::monte_carlo_area(bt, {cfg.mc_samples, cfg.seed ^ (index * 0x9e3779b97f4a7c15ULL)}, 1);
    out.record(kMonteCarloArea, std::abs(est.estimate - area(bt)) <= 4.0 * est.std_error);
  }
  return out;
}

// Evaluates in parallel; results land in instance order.
inline std::vector<InstanceOutcome> verify_all(const std::vector<Triangle>& tris, const VerifyConfig& cfg,
                                               unsigned threads) {
  std::vector<InstanceOutcome> out(tris.size());
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, tris.size()))));
  auto work = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) out[i] = verify_instance(tris[i], cfg, i);
  };
  if (threads == 1) {
    work(0, tris.size());
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) {
      pool.emplace_back(work, tris.size() * w / threads, tris.size() * (w + 1) / threads);
    }
    for (auto& th : pool) th.join();
  }
  return out;
}

// ---------------------------------------------------------------------------

inline void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InvalidInput("cannot write " + path);
  f << text;
}

inline std::uint64_t default_seed() {
  if (const char* env = std::getenv("BULGE_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw InvalidInput("BULGE_SEED must be an unsigned integer");
    }
  }
  return 1;
}

inline std::optional<svg::Overlay> overlay_from(const std::string& s) {
  if (s == "base") return svg::Overlay::BaseTriangle;
  if (s == "centers") return svg::Overlay::Centers;
  if (s == "bisectors") return svg::Overlay::PerpBisectors;
  if (s == "circumcircle") return svg::Overlay::Circumcircle;
  if (s == "labels") return svg::Overlay::Labels;
  return std::nullopt;
}

/// Exit codes: 0 success, 1 a verified claim failed, 2 invalid input.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err, std::istream& in = std::cin) {
  CLI::App app{"Bulging triangles: construction, metrics and theorem checks", "bulge"};
  app.set_version_flag("--version", std::string("bulge ") + kVersion);
  app.require_subcommand(1);

  TriangleInput input;

  auto* build_cmd = app.add_subcommand("build", "Construct the bulging triangle and print its arcs");
  input.add_to(build_cmd);
  std::string build_json = "-";
  build_cmd->add_option("--json", build_json, "Report destination ('-' = stdout)");

  auto* measure_cmd = app.add_subcommand("measure", "Edge lengths, area, circumdisk and theorem results");
  TriangleInput measure_input;
  measure_input.add_to(measure_cmd);
  std::string measure_json = "-";
  bool require_area = false;
  measure_cmd->add_option("--json", measure_json, "Report destination ('-' = stdout)");
  measure_cmd->add_flag("--area", require_area, "Fail unless the area is defined (convex shapes)");

  auto* verify_cmd = app.add_subcommand("verify", "Check every claim on one triangle or on random instances");
  TriangleInput verify_input;
  verify_input.add_to(verify_cmd);
  std::uint64_t random_count = 0;
  std::optional<std::uint64_t> seed_opt;
  std::string kind = "all";
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  VerifyConfig vcfg;
  std::string verify_json = "-";
  verify_cmd->add_option("--random", random_count, "Number of random instances");
  verify_cmd->add_option("--seed", seed_opt, "Seed (default: $BULGE_SEED or 1)");
  verify_cmd->add_option("--kind", kind, "Random family")->check(CLI::IsMember({"acute", "right", "all"}));
  verify_cmd->add_option("--threads", threads, "Worker threads; results do not depend on it")
      ->check(CLI::Range(1u, 1024u));
  verify_cmd->add_option("--mc", vcfg.mc_samples, "Monte Carlo area samples per instance (0 = off)");
  verify_cmd->add_option("--json", verify_json, "Summary destination ('-' = stdout)");

  auto* sweep_cmd = app.add_subcommand("sweep", "Pythagorean gap over a range of the longer leg");
  double leg_a = 1.0, b_from = 1.0, b_to = 5.0;
  std::uint64_t steps = 401;
  std::string csv_path = "-";
  sweep_cmd->add_option("--leg-a", leg_a, "Fixed leg a")->required();
  sweep_cmd->add_option("--b-from", b_from, "First b")->required();
  sweep_cmd->add_option("--b-to", b_to, "Last b")->required();
  sweep_cmd->add_option("--steps", steps, "Grid points, ends included")->required();
  sweep_cmd->add_option("--csv", csv_path, "CSV destination ('-' = stdout)");

  auto* render_cmd = app.add_subcommand("render", "Write an SVG figure");
  TriangleInput render_input;
  render_input.add_to(render_cmd);
  std::string svg_path = "-";
  std::vector<std::string> overlays;
  svg::RenderOptions ropts;
  render_cmd->add_option("--out", svg_path, "SVG destination ('-' = stdout)");
  render_cmd->add_option("--overlay", overlays, "base, centers, bisectors, circumcircle, labels or all");
  render_cmd->add_option("--width", ropts.width_px, "Width in pixels")->check(CLI::Range(16, 16384));
  render_cmd->add_option("--height", ropts.height_px, "Height in pixels")->check(CLI::Range(16, 16384));
  render_cmd->add_option("--margin", ropts.margin_frac, "Margin fraction in [0, 0.4)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "bulge: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*build_cmd) {
      const BulgingTriangle bt = build(input.resolve(in));
      Json doc = header("build");
      doc["input"] = input.echo();
      doc.update(geometry_json(bt));
      emit(build_json, dump(doc), out);
      return 0;
    }

    if (*measure_cmd) {
      const BulgingTriangle bt = build(measure_input.resolve(in));
      if (require_area && bt.convexity != Convexity::Convex) throw ConcaveUnsupported();
      Json doc = header("measure");
      doc["input"] = measure_input.echo();
      doc.update(geometry_json(bt));
      doc["metrics"] = metrics_json(measure(bt));
      doc["theorems"] = theorems_json(bt);
      emit(measure_json, dump(doc), out);
      return 0;
    }

    if (*verify_cmd) {
      vcfg.seed = seed_opt ? *seed_opt : default_seed();
      std::vector<Triangle> tris;
      Json doc = header("verify");
      if (random_count > 0) {
        if (verify_input.any()) {
          throw InvalidInput("--random cannot be combined with a triangle input");
        }
        TriangleSampler sampler(vcfg.seed);
        tris.reserve(random_count);
        for (std::uint64_t i = 0; i < random_count; ++i) {
          const bool right = kind == "right" || (kind == "all" && (sampler.engine()() & 1u));
          tris.push_back(right ? sampler.right() : sampler.acute());
        }
        doc["random"] = {{"count", random_count}, {"kind", kind}};
      } else {
        const Triangle t = verify_input.resolve(in);
        if (classify_triangle(t).kind == TriangleKind::Obtuse) throw ConcaveUnsupported();
        tris.push_back(t);
        doc["input"] = verify_input.echo();
      }
      doc["seed"] = vcfg.seed;
      doc["mc_samples"] = vcfg.mc_samples;

      const auto outcomes = verify_all(tris, vcfg, threads);
      Json checks;
      Json violations = Json::array();
      std::uint64_t evaluated[kCheckCount] = {}, failed[kCheckCount] = {};
      for (std::size_t i = 0; i < outcomes.size(); ++i) {
        for (int c = 0; c < kCheckCount; ++c) {
          if (outcomes[i].evaluated & (1u << c)) ++evaluated[c];
          if (outcomes[i].failed & (1u << c)) {
            ++failed[c];
            violations.push_back({{"instance", i}, {"check", kCheckNames[c]}, {"triangle", triangle_json(tris[i])}});
          }
        }
      }
      for (int c = 0; c < kCheckCount; ++c) {
        checks[kCheckNames[c]] = {{"evaluated", evaluated[c]}, {"failed", failed[c]}};
      }
      doc["instances"] = tris.size();
      doc["checks"] = checks;
      doc["violations"] = violations;
      doc["passed"] = violations.empty();
      emit(verify_json, dump(doc), out);
      if (!violations.empty()) {
        err << "bulge: " << violations.size() << " violated claim(s); first at instance "
            << violations[0]["instance"].get<std::uint64_t>() << " (" << violations[0]["check"].get<std::string>()
            << ")\n";
        return 1;
      }
      return 0;
    }

    if (*sweep_cmd) {
      if (!(leg_a > 0.0) || !(b_from > 0.0) || !(b_to > 0.0)) throw InvalidInput("legs must be positive");
      if (steps < 1) throw InvalidInput("--steps must be at least 1");
      std::string csv = "b,t,theta0,gap\n";
      for (std::uint64_t i = 0; i < steps; ++i) {
        const double b = steps == 1 ? b_from : b_from + (b_to - b_from) * double(i) / double(steps - 1);
        const PythReport p = pyth_gap(leg_a, b);
        csv += format_real(b) + "," + format_real(deg(p.t)) + "," + format_real(deg(p.theta0)) + "," +
               format_real(p.gap) + "\n";
      }
      emit(csv_path, csv, out);
      return 0;
    }

    if (*render_cmd) {
      if (!(ropts.margin_frac >= 0.0 && ropts.margin_frac < 0.4)) throw InvalidInput("--margin must be in [0, 0.4)");
      for (const std::string& o : overlays) {
        if (o == "all") {
          ropts.overlays = {svg::Overlay::BaseTriangle, svg::Overlay::Centers, svg::Overlay::PerpBisectors,
                            svg::Overlay::Circumcircle, svg::Overlay::Labels};
          continue;
        }
        const auto ov = overlay_from(o);
        if (!ov) throw InvalidInput("unknown overlay '" + o + "'");
        ropts.overlays.insert(*ov);
      }
      const BulgingTriangle bt = build(render_input.resolve(in));
      emit(svg_path, svg::to_svg(bt, ropts), out);
      return 0;
    }
  } catch (const Error& e) {
    err << "bulge: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace bulge::cli
