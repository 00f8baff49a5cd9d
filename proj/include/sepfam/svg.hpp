#pragma once

#include <string>

#include "sepfam/geometry.hpp"
#include "sepfam/separators.hpp"

namespace sepfam {

// Standalone SVG picture of the point set, each point a labelled dot. When a
// family is given, every separator is drawn as a translucent colored region:
// halfplanes are clipped to the canvas, discs become circles, polygons are
// filled outlines. Coordinates are converted to double here and nowhere else;
// the picture is for eyeballs, not proofs.
std::string render_svg(const PointSet& pts, const SeparatingFamily* fam = nullptr);

}  // namespace sepfam
