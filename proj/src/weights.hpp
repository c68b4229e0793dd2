#pragma once

#include "tropdual.hpp"

namespace wtrop {

// Signed multiplicity of a consistent subdivision:
//   w = (-1)^(a+b) * 2^(-c) * prod(factors)
// with a the interior lattice points inside triangles, b the triangles whose
// edges are all even, c the triangles of even double area, and factors the
// double areas of triangles that have even area or are apex triangles.
struct WeightedCount {
  std::int64_t welschinger = 0;
  std::int64_t complex_mult = 1;
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t c = 0;
  std::vector<std::int64_t> factors;

  friend bool operator==(const WeightedCount&, const WeightedCount&) = default;
};

WeightedCount welschinger_weight(const Subdivision& sub, const Classification& cls);

// Product of triangle double areas; cross-check plumbing for the complex
// (Gromov-Witten) count, not part of the real-count formula.
std::int64_t complex_multiplicity(const Subdivision& sub);

}  // namespace wtrop
