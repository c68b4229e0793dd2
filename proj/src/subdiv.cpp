#include "subdiv.hpp"

#include <algorithm>

namespace wtrop {

namespace {

struct CornerRef {
  bool valid = false;
  int side = 0;  // 0 = left frontier, 1 = right frontier
  std::size_t idx = 0;
  std::int64_t lambda = 0;
};

// Eligible corner: strictly convex toward the unfilled side. The left
// frontier has its region on the left of the v_0 -> v_n traversal, so a left
// turn opens toward it; symmetrically for the right frontier.
CornerRef find_min_corner(const PartialSubdivision& st, Direction dir) {
  CornerRef best;
  const auto scan = [&](const std::vector<LatticePoint>& f, int side) {
    for (std::size_t i = 1; i + 1 < f.size(); ++i) {
      const std::int64_t turn = cross(f[i] - f[i - 1], f[i + 1] - f[i]);
      const bool eligible = side == 0 ? turn > 0 : turn < 0;
      if (!eligible) continue;
      const std::int64_t lam = lambda_value(dir, f[i]);
      if (!best.valid || lam < best.lambda) best = {true, side, i, lam};
    }
  };
  scan(st.front_left, 0);
  scan(st.front_right, 1);
  return best;
}

void check_frontier_monotone(const std::vector<LatticePoint>& f, Direction dir) {
  for (std::size_t i = 1; i < f.size(); ++i) {
    internal_check(lambda_value(dir, f[i - 1]) < lambda_value(dir, f[i]),
                   "frontier lost lambda-monotonicity");
  }
}

}  // namespace

std::vector<PartialSubdivision> enumerate_seeds(const LatticePath& path, const Marking& marking,
                                                const LatticePolygon& poly, Direction dir) {
  const int n = path.n();
  internal_check(static_cast<int>(marking.w_set.size()) + marking.r_imag == n,
                 "marking does not match path length");

  PartialSubdivision base;
  base.front_left = path.vertices;
  base.front_right = path.vertices;
  base.remaining_double_area = poly.double_area();

  if (marking.v_set.empty()) return {base};

  // Apex candidates per V-index, in lambda order. Any lattice point strictly
  // between the segment ends in lambda and off the segment works; the
  // triangle is then automatically non-degenerate and inside the polygon.
  std::vector<int> v_indices(marking.v_set.begin(), marking.v_set.end());
  std::vector<std::vector<LatticePoint>> candidates;
  const std::vector<LatticePoint> ordered = ordered_points(poly, dir);
  for (int j : v_indices) {
    const auto [vj_prev, vj] = path.segment(j);
    if (path.segment_length(j) % 2 == 0) {
      throw std::invalid_argument("V-index " + std::to_string(j) + " sits on an even segment");
    }
    const std::int64_t lo = lambda_value(dir, vj_prev);
    const std::int64_t hi = lambda_value(dir, vj);
    std::vector<LatticePoint> apexes;
    for (const auto& p : ordered) {
      const std::int64_t lam = lambda_value(dir, p);
      if (lam <= lo) continue;
      if (lam >= hi) break;
      if (segment_contains(vj_prev, vj, p)) continue;
      apexes.push_back(p);
    }
    if (apexes.empty()) return {};
    candidates.push_back(std::move(apexes));
  }

  std::vector<PartialSubdivision> seeds;
  std::vector<std::size_t> pick(v_indices.size(), 0);
  while (true) {
    PartialSubdivision seed = base;
    bool ok = true;
    for (std::size_t k = 0; k < v_indices.size() && ok; ++k) {
      const int j = v_indices[k];
      const auto [vj_prev, vj] = path.segment(j);
      const LatticePoint apex = candidates[k][pick[k]];
      const Cell tri = Cell::triangle(vj_prev, apex, vj);
      for (const auto& placedCell : seed.placed) {
        if (interiors_intersect(tri, placedCell)) {
          ok = false;  // unreachable for lambda-separated slabs; kept as a filter
          break;
        }
      }
      if (!ok) break;
      const std::int64_t side = cross(vj - vj_prev, apex - vj_prev);
      internal_check(side != 0, "apex collinear with its segment");
      auto& front = side > 0 ? seed.front_left : seed.front_right;
      const auto at = std::find(front.begin(), front.end(), vj_prev);
      internal_check(at != front.end() && std::next(at) != front.end() && *std::next(at) == vj,
                     "apex segment missing from frontier");
      front.insert(at + 1, apex);
      seed.placed.push_back(tri);
      seed.v_triangles.emplace(j, tri);
      seed.remaining_double_area -= tri.double_area();
      internal_check(seed.remaining_double_area >= 0, "seed area underflow");
    }
    if (ok) {
      check_frontier_monotone(seed.front_left, dir);
      check_frontier_monotone(seed.front_right, dir);
      seeds.push_back(std::move(seed));
    }
    // Advance the apex combination lexicographically.
    std::size_t k = pick.size();
    while (k > 0) {
      --k;
      if (++pick[k] < candidates[k].size()) break;
      pick[k] = 0;
      if (k == 0) return seeds;
    }
    if (pick.size() == 0) return seeds;
  }
}

std::vector<PartialSubdivision> peel(const PartialSubdivision& state, const LatticePolygon& poly,
                                     Direction dir) {
  internal_check(state.remaining_double_area > 0, "peel called on a complete state");
  const CornerRef c = find_min_corner(state, dir);
  if (!c.valid) return {};

  const auto& front = c.side == 0 ? state.front_left : state.front_right;
  const LatticePoint a = front[c.idx - 1];
  const LatticePoint p = front[c.idx];
  const LatticePoint b = front[c.idx + 1];

  std::vector<PartialSubdivision> out;

  {
    const Cell tri = Cell::triangle(a, p, b);
    PartialSubdivision nx = state;
    auto& f = c.side == 0 ? nx.front_left : nx.front_right;
    f.erase(f.begin() + static_cast<std::ptrdiff_t>(c.idx));
    nx.placed.push_back(tri);
    nx.remaining_double_area -= tri.double_area();
    internal_check(nx.remaining_double_area >= 0, "triangle overfills the polygon");
    out.push_back(std::move(nx));
  }

  const LatticePoint q = a + b - p;
  if (poly.contains(q)) {
    const Cell par = Cell::parallelogram(a, p, b);
    PartialSubdivision nx = state;
    auto& f = c.side == 0 ? nx.front_left : nx.front_right;
    f[c.idx] = q;
    internal_check(lambda_value(dir, a) < lambda_value(dir, q) &&
                       lambda_value(dir, q) < lambda_value(dir, b),
                   "parallelogram corner broke monotonicity");
    nx.placed.push_back(par);
    nx.remaining_double_area -= par.double_area();
    internal_check(nx.remaining_double_area >= 0, "parallelogram overfills the polygon");
    out.push_back(std::move(nx));
  }

  return out;
}

namespace {

void complete_dfs(PartialSubdivision state, const LatticePolygon& poly, Direction dir,
                  std::vector<Subdivision>& results) {
  if (state.remaining_double_area == 0) {
    Subdivision sub;
    sub.cells = std::move(state.placed);
    std::sort(sub.cells.begin(), sub.cells.end());
    sub.v_triangles = std::move(state.v_triangles);
    results.push_back(std::move(sub));
    return;
  }
  for (auto& nx : peel(state, poly, dir)) {
    complete_dfs(std::move(nx), poly, dir, results);
  }
}

}  // namespace

std::vector<Subdivision> complete(const LatticePath& path, const Marking& marking,
                                  const LatticePolygon& poly, Direction dir) {
  std::vector<Subdivision> results;
  for (auto& seed : enumerate_seeds(path, marking, poly, dir)) {
    complete_dfs(std::move(seed), poly, dir, results);
  }
  std::sort(results.begin(), results.end());
  for (std::size_t i = 1; i < results.size(); ++i) {
    internal_check(!(results[i - 1] == results[i]), "duplicate subdivision from distinct branches");
  }
  for (const auto& sub : results) validate_subdivision(sub, poly);
  return results;
}

void validate_subdivision(const Subdivision& sub, const LatticePolygon& poly) {
  std::int64_t total = 0;
  std::map<Segment, int> edge_count;
  for (const auto& cell : sub.cells) {
    total += cell.double_area();
    for (const auto& e : cell.edges()) ++edge_count[e];
  }
  internal_check(total == poly.double_area(), "cell areas do not sum to the polygon area");
  for (const auto& [seg, cnt] : edge_count) {
    if (cnt == 1) {
      internal_check(poly.boundary_contains_segment(seg.a, seg.b),
                     "unmatched interior edge in subdivision");
    } else {
      internal_check(cnt == 2, "edge shared by more than two cells");
      internal_check(!poly.boundary_contains_segment(seg.a, seg.b),
                     "boundary edge shared by two cells");
    }
  }
  for (const auto& [j, tri] : sub.v_triangles) {
    (void)j;
    internal_check(std::binary_search(sub.cells.begin(), sub.cells.end(), tri),
                   "designated apex triangle missing from the cell set");
  }
}

}  // namespace wtrop
