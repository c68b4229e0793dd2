#pragma once

#include <map>

#include "geometry.hpp"
#include "ordering.hpp"
#include "paths.hpp"

namespace wtrop {

// A complete nodal tiling of the polygon together with the apex triangles
// attached to the path's V-indices. Equality includes the V-assignment: the
// same cell set with a different apex designation is a different object.
struct Subdivision {
  std::vector<Cell> cells;          // canonically sorted
  std::map<int, Cell> v_triangles;  // V-index j -> T_j

  friend bool operator==(const Subdivision&, const Subdivision&) = default;
  friend auto operator<=>(const Subdivision&, const Subdivision&) = default;
};

// Growth state: the placed cells plus the two lambda-monotone frontiers, one
// per side of the path. The unfilled region on each side is exactly what
// lies between that frontier and the polygon boundary.
struct PartialSubdivision {
  std::vector<Cell> placed;
  std::map<int, Cell> v_triangles;
  std::vector<LatticePoint> front_left;
  std::vector<LatticePoint> front_right;
  std::int64_t remaining_double_area = 0;
};

// One seed per combination of apex choices for the V-indices; empty when some
// V-index admits no apex (the path/marking pair is inconsistent).
std::vector<PartialSubdivision> enumerate_seeds(const LatticePath& path, const Marking& marking,
                                                const LatticePolygon& poly, Direction dir);

// Cuts the eligible convex corner of minimal lambda: up to two successors,
// the triangle on the corner and the parallelogram built on its segments.
// Empty result with area remaining is a dead branch.
std::vector<PartialSubdivision> peel(const PartialSubdivision& state, const LatticePolygon& poly,
                                     Direction dir);

// Depth-first exhaustion of seeds x peel branching; canonical sorted list of
// every complete tiling reached. Duplicates are an internal error.
std::vector<Subdivision> complete(const LatticePath& path, const Marking& marking,
                                  const LatticePolygon& poly, Direction dir);

// Area identity and shared-edge consistency; throws internal_error.
void validate_subdivision(const Subdivision& sub, const LatticePolygon& poly);

}  // namespace wtrop
