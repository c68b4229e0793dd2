#pragma once

#include "weights.hpp"

namespace wtrop {

// Static figure of one subdivision: the polygon, its cells with apex
// triangles shaded, edge length labels for non-unit edges, and the weight
// badge. Byte-deterministic for fixed input.
std::string render_svg(const Subdivision& sub, const Classification& cls, const WeightedCount& wc,
                       const LatticePolygon& poly);

}  // namespace wtrop
