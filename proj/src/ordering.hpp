#pragma once

#include "geometry.hpp"

namespace wtrop {

// Integer linear functional lambda(x, y) = a*x + b*y used to order the
// lattice points of a polygon. A direction is generic for a polygon when
// lambda is injective on its lattice points.
struct Direction {
  std::int64_t a = 0;
  std::int64_t b = 0;

  std::string to_string() const;
  friend bool operator==(const Direction&, const Direction&) = default;
};

inline std::int64_t lambda_value(Direction d, LatticePoint p) { return d.a * p.x + d.b * p.y; }

// (H+1, -1) with H the bounding-box height; induces "x ascending, y
// descending" and is injective on any polygon of that height.
Direction default_direction(const LatticePolygon& poly);

// Throws std::invalid_argument naming one tied pair if lambda is not
// injective on the polygon's lattice points.
void validate_direction(Direction dir, const LatticePolygon& poly);

// All lattice points of the polygon sorted by strictly increasing lambda.
std::vector<LatticePoint> ordered_points(const LatticePolygon& poly, Direction dir);

}  // namespace wtrop
