#include "weights.hpp"

#include <limits>

namespace wtrop {

namespace {

std::int64_t to_i64(__int128 v, const char* what) {
  internal_check(v <= std::numeric_limits<std::int64_t>::max() &&
                     v >= std::numeric_limits<std::int64_t>::min(),
                 what);
  return static_cast<std::int64_t>(v);
}

}  // namespace

WeightedCount welschinger_weight(const Subdivision& sub, const Classification& cls) {
  internal_check(cls.status == ConsistencyStatus::Consistent,
                 "weight requested for an inconsistent subdivision");

  std::set<Cell> apex_triangles;
  for (const auto& [j, tri] : sub.v_triangles) {
    (void)j;
    apex_triangles.insert(tri);
  }

  WeightedCount wc;
  __int128 product = 1;
  __int128 complex_product = 1;
  for (const auto& cell : sub.cells) {
    if (cell.kind() != CellKind::Triangle) continue;
    const std::int64_t area = cell.double_area();
    complex_product *= area;
    internal_check(complex_product <= std::numeric_limits<std::int64_t>::max(),
                   "complex multiplicity overflow");
    wc.a += cell.interior_lattice_count();
    int even_edges = 0;
    for (const auto& seg : cell.edges()) even_edges += seg.length() % 2 == 0 ? 1 : 0;
    if (even_edges == 3) ++wc.b;
    const bool even_area = area % 2 == 0;
    if (even_area) ++wc.c;
    if (even_area || apex_triangles.contains(cell)) {
      product *= area;
      internal_check(product <= std::numeric_limits<std::int64_t>::max(),
                     "welschinger factor overflow");
      wc.factors.push_back(area);
    }
  }
  wc.complex_mult = to_i64(complex_product, "complex multiplicity overflow");

  if (cls.zero_weight) {
    wc.welschinger = 0;
    return wc;
  }

  for (std::int64_t k = 0; k < wc.c; ++k) {
    internal_check(product % 2 == 0, "2^c does not divide the factor product");
    product /= 2;
  }
  const std::int64_t sign = (wc.a + wc.b) % 2 == 0 ? 1 : -1;
  wc.welschinger = sign * to_i64(product, "welschinger weight overflow");

  if (cls.gmax.extended_ids.empty() && sub.v_triangles.empty()) {
    // No even extended edge anywhere: all triangles odd, so the product is
    // empty and the weight is a bare sign.
    internal_check(wc.b == 0 && wc.c == 0 && wc.factors.empty(),
                   "odd-only subdivision with even bookkeeping");
  }
  return wc;
}

std::int64_t complex_multiplicity(const Subdivision& sub) {
  __int128 product = 1;
  for (const auto& cell : sub.cells) {
    if (cell.kind() != CellKind::Triangle) continue;
    product *= cell.double_area();
    internal_check(product <= std::numeric_limits<std::int64_t>::max(),
                   "complex multiplicity overflow");
  }
  return to_i64(product, "complex multiplicity overflow");
}

}  // namespace wtrop
