#pragma once

#include "subdiv.hpp"

namespace wtrop {

// Number of rational plane curves of degree d through 3d-1 generic points,
// by the classical recursion
//   N_d = sum_{d1+d2=d} N_d1 N_d2 (d1^2 d2^2 C(3d-4,3d1-2) - d1^3 d2 C(3d-4,3d1-1)).
// Exact with overflow checks; d in 1..8.
std::int64_t kontsevich(int d);

// Same recursion summed with d1 descending; must agree with kontsevich().
std::int64_t kontsevich_descending(int d);

// Enumerates every edge-to-edge tiling of the polygon by lattice triangles
// and parallelograms that contains each path segment as a full cell edge,
// together with every admissible apex designation for the V-indices. An
// exhaustive anchored cover search over precomputed candidate cells; shares
// no logic with the frontier-peeling completer it cross-checks.
// Guard: refuses polygons with more than 12 lattice points.
std::vector<Subdivision> brute_force_completions(const LatticePath& path, const Marking& marking,
                                                 const LatticePolygon& poly, Direction dir);

}  // namespace wtrop
