#pragma once

#include "bulge/construct.hpp"
#include "bulge/errors.hpp"
#include "bulge/geom.hpp"
#include "bulge/metrics.hpp"
#include "bulge/oracles.hpp"
#include "bulge/random_triangles.hpp"
#include "bulge/svg.hpp"
#include "bulge/theorems.hpp"

namespace bulge {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace bulge
