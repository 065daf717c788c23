// Static SVG pictures of a polygon, the tropical fan of its dual curve, and
// the dual polygon.
#pragma once

#include "plucker/fan.hpp"
#include "plucker/lattice.hpp"

#include <string>

namespace plucker {

/// Polygon drawn over its lattice grid.
std::string polygon_svg(const LatticePolygon& p, const std::string& title = "P");

/// Rays from the origin with their weights as labels.
std::string fan_svg(const WeightedFan& fan, const std::string& title = "dual fan");

/// Three panels side by side: P, the dual fan and the dual polygon.
std::string render_svg(const LatticePolygon& p);

}  // namespace plucker
