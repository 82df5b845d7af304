// Writes a handful of reference drawings as SVG files.
//
//   figures [out_dir]

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "bulge/bulge.hpp"

namespace {

using bulge::svg::Overlay;

struct Figure {
  std::string file;
  bulge::Triangle triangle;
  std::set<Overlay> overlays;
};

}  // namespace

int main(int argc, char** argv) {
  const std::filesystem::path dir = argc > 1 ? argv[1] : "figures";
  std::filesystem::create_directories(dir);

  const double h = std::sqrt(3.0) / 2;
  const std::vector<Figure> figures = {
      {"reuleaux.svg", bulge::normalize({0, 0}, {1, 0}, {0.5, h}), {Overlay::BaseTriangle, Overlay::Centers}},
      {"acute_construction.svg", bulge::normalize({0.9, 1.6}, {0, 0}, {2, 0}),
       {Overlay::BaseTriangle, Overlay::PerpBisectors, Overlay::Centers, Overlay::Labels}},
      {"right_isosceles.svg", bulge::normalize({1, 1}, {0, 0}, {1, 0}), {Overlay::BaseTriangle, Overlay::Labels}},
      {"thirty_sixty_ninety.svg", bulge::normalize({1, std::sqrt(3.0)}, {0, 0}, {1, 0}),
       {Overlay::BaseTriangle, Overlay::Centers, Overlay::Labels}},
      {"obtuse_concave.svg", bulge::normalize({1.8, 0.3}, {0, 0}, {1, 0}), {Overlay::BaseTriangle, Overlay::Labels}},
      {"right_circumcircle.svg", bulge::normalize({1, 2}, {0, 0}, {1, 0}),
       {Overlay::BaseTriangle, Overlay::Circumcircle, Overlay::Labels}},
  };

  for (const Figure& f : figures) {
    bulge::svg::RenderOptions opts;
    opts.overlays = f.overlays;
    const std::filesystem::path path = dir / f.file;
    std::ofstream(path, std::ios::binary) << bulge::svg::to_svg(bulge::build(f.triangle), opts);
    std::cout << path.string() << "\n";
  }
  return 0;
}
