#include "oracles.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <map>
#include <numeric>

namespace wtrop {

namespace {

__int128 checked_mul(__int128 a, __int128 b) {
  const __int128 r = a * b;
  if (a != 0) internal_check(r / a == b, "kontsevich overflow");
  return r;
}

std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  __int128 c = 1;
  for (int i = 1; i <= k; ++i) c = checked_mul(c, n - k + i) / i;
  internal_check(c <= std::numeric_limits<std::int64_t>::max(), "binomial overflow");
  return static_cast<std::int64_t>(c);
}

std::int64_t kontsevich_impl(int d, bool ascending) {
  if (d < 1) throw std::invalid_argument("kontsevich degree must be >= 1");
  if (d > 8) throw std::invalid_argument("kontsevich degree capped at 8");
  std::vector<__int128> n(static_cast<std::size_t>(d) + 1, 0);
  n[1] = 1;
  for (int m = 2; m <= d; ++m) {
    __int128 total = 0;
    std::vector<int> parts;
    for (int d1 = 1; d1 < m; ++d1) parts.push_back(d1);
    if (!ascending) std::reverse(parts.begin(), parts.end());
    for (int d1 : parts) {
      const int d2 = m - d1;
      const __int128 nn = checked_mul(n[static_cast<std::size_t>(d1)],
                                      n[static_cast<std::size_t>(d2)]);
      const __int128 t1 = checked_mul(
          checked_mul(static_cast<__int128>(d1) * d1, static_cast<__int128>(d2) * d2),
          binomial(3 * m - 4, 3 * d1 - 2));
      const __int128 t2 = checked_mul(
          checked_mul(checked_mul(static_cast<__int128>(d1) * d1, d1), d2),
          binomial(3 * m - 4, 3 * d1 - 1));
      total += checked_mul(nn, t1 - t2);
    }
    n[static_cast<std::size_t>(m)] = total;
  }
  internal_check(n[static_cast<std::size_t>(d)] <= std::numeric_limits<std::int64_t>::max() &&
                     n[static_cast<std::size_t>(d)] >= 0,
                 "kontsevich value overflow");
  return static_cast<std::int64_t>(n[static_cast<std::size_t>(d)]);
}

// ---- angular machinery for the cover search ------------------------------

// Primitive direction vector.
LatticePoint prim(LatticePoint v) {
  internal_check(!(v.x == 0 && v.y == 0), "zero direction");
  const std::int64_t g = std::gcd(std::abs(v.x), std::abs(v.y));
  return {v.x / g, v.y / g};
}

int angular_half(LatticePoint v) { return (v.y > 0 || (v.y == 0 && v.x > 0)) ? 0 : 1; }

bool angle_less(LatticePoint u, LatticePoint v) {
  if (angular_half(u) != angular_half(v)) return angular_half(u) < angular_half(v);
  return cross(u, v) > 0;
}

// A wedge of directions from `start` counterclockwise to `end`, of angle in
// (0, pi]; `full` marks the whole circle.
struct Wedge {
  LatticePoint start, end;
  bool full = false;
};

// Is direction m inside the closed CCW wedge [start, end] of angle <= pi?
bool wedge_contains(const Wedge& w, LatticePoint m) {
  if (w.full) return true;
  return cross(w.start, m) >= 0 && cross(m, w.end) >= 0;
}

// Direction strictly inside the CCW sector from r1 to r2.
LatticePoint sector_middle(LatticePoint r1, LatticePoint r2) {
  const std::int64_t c = cross(r1, r2);
  if (c > 0) return r1 + r2;
  if (c < 0) return LatticePoint{0, 0} - (r1 + r2);
  // Opposite rays: the sector is the half turn on the CCW side of r1.
  internal_check(dot(r1, r2) < 0, "degenerate sector");
  return rotate90(r1);
}

// The wedge of the cell at point p, when p lies on its boundary; full when p
// is strictly inside; nullopt when p is outside the cell.
std::optional<Wedge> cell_wedge_at(const Cell& cell, LatticePoint p) {
  if (!cell.contains(p)) return std::nullopt;
  const auto& cs = cell.corners();
  const std::size_t m = cs.size();
  for (std::size_t i = 0; i < m; ++i) {
    if (cs[i] == p) {
      const LatticePoint nxt = cs[(i + 1) % m];
      const LatticePoint prv = cs[(i + m - 1) % m];
      return Wedge{prim(nxt - p), prim(prv - p), false};
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    const LatticePoint u = cs[i];
    const LatticePoint v = cs[(i + 1) % m];
    if (segment_contains(u, v, p)) {
      return Wedge{prim(v - p), prim(u - p), false};
    }
  }
  return Wedge{{0, 0}, {0, 0}, true};
}

// The polygon's wedge at one of its lattice points.
Wedge polygon_wedge_at(const LatticePolygon& poly, LatticePoint p) {
  if (!poly.boundary_contains(p)) return Wedge{{0, 0}, {0, 0}, true};
  const auto& vs = poly.vertices();
  const std::size_t m = vs.size();
  for (std::size_t i = 0; i < m; ++i) {
    if (vs[i] == p) {
      return Wedge{prim(vs[(i + 1) % m] - p), prim(vs[(i + m - 1) % m] - p), false};
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    const LatticePoint u = vs[i];
    const LatticePoint v = vs[(i + 1) % m];
    if (segment_contains(u, v, p)) return Wedge{prim(v - p), prim(u - p), false};
  }
  throw internal_error("boundary point not located on any side");
}

struct Anchor {
  bool found = false;
  LatticePoint point;
  LatticePoint ray;       // start direction of the first uncovered arc
  bool no_coverage = false;  // nothing placed touches the point yet
};

// First uncovered angular arc at p, if any. Sector decomposition over all
// wedge boundary rays, each sector tested against the coverage by its middle
// direction.
std::optional<Anchor> uncovered_arc_at(const LatticePolygon& poly,
                                       const std::vector<Cell>& placed, LatticePoint p) {
  const Wedge domain = polygon_wedge_at(poly, p);
  std::vector<Wedge> covered;
  for (const auto& cell : placed) {
    if (auto w = cell_wedge_at(cell, p)) {
      if (w->full) return std::nullopt;  // strictly inside a placed cell
      covered.push_back(*w);
    }
  }

  std::vector<LatticePoint> rays;
  if (!domain.full) {
    rays.push_back(domain.start);
    rays.push_back(domain.end);
  }
  for (const auto& w : covered) {
    rays.push_back(w.start);
    rays.push_back(w.end);
  }
  if (rays.empty()) {
    // Interior point with no incident coverage at all.
    return Anchor{true, p, {0, 0}, true};
  }
  std::sort(rays.begin(), rays.end(), angle_less);
  rays.erase(std::unique(rays.begin(), rays.end()), rays.end());

  // Order sectors starting from the domain start so the first uncovered arc
  // is canonical.
  std::size_t base = 0;
  if (!domain.full) {
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (rays[i] == domain.start) base = i;
    }
  }
  const std::size_t m = rays.size();
  for (std::size_t k = 0; k < m; ++k) {
    const LatticePoint r1 = rays[(base + k) % m];
    const LatticePoint r2 = rays[(base + k + 1) % m];
    if (m == 1) {
      // Single ray: the whole circle around it; probe both sides.
      for (const LatticePoint probe : {rotate90(r1), LatticePoint{0, 0} - r1}) {
        bool in_domain = domain.full || wedge_contains(domain, probe);
        if (!in_domain) continue;
        bool cov = false;
        for (const auto& w : covered) cov = cov || wedge_contains(w, probe);
        if (!cov) return Anchor{true, p, r1, covered.empty()};
      }
      break;
    }
    if (r1 == r2) continue;
    const LatticePoint mid = sector_middle(r1, r2);
    const bool in_domain = domain.full || wedge_contains(domain, mid);
    if (!in_domain) continue;
    bool cov = false;
    for (const auto& w : covered) cov = cov || wedge_contains(w, mid);
    if (!cov) return Anchor{true, p, r1, covered.empty()};
  }
  return std::nullopt;
}

struct CoverSearch {
  const LatticePolygon& poly;
  Direction dir;
  std::vector<Cell> candidates;
  std::vector<LatticePoint> points_by_lambda;
  std::int64_t target_area = 0;
  std::vector<Cell> placed;
  std::int64_t placed_area = 0;
  std::vector<std::vector<Cell>> tilings;

  void run() {
    placed.clear();
    placed_area = 0;
    recurse();
  }

  std::optional<Anchor> find_anchor() const {
    for (const auto& p : points_by_lambda) {
      if (auto a = uncovered_arc_at(poly, placed, p)) return a;
    }
    return std::nullopt;
  }

  bool disjoint_from_placed(const Cell& cell) const {
    for (const auto& other : placed) {
      if (interiors_intersect(cell, other)) return false;
    }
    return true;
  }

  void recurse() {
    if (placed_area == target_area) {
      tilings.push_back(placed);
      return;
    }
    const auto anchor = find_anchor();
    internal_check(anchor.has_value(), "area remains but no exposed point");
    for (const auto& cell : candidates) {
      const auto w = cell_wedge_at(cell, anchor->point);
      if (!w) continue;
      if (anchor->no_coverage) {
        // The covering cell may have the point anywhere on or inside it.
        if (!w->full && !(w->start == anchor->ray) &&
            !poly.boundary_contains(anchor->point)) {
          // Interior zero-coverage anchor: accept any incident cell; the
          // emitted tilings are deduplicated downstream.
        } else if (!w->full && !(w->start == anchor->ray)) {
          continue;  // boundary anchor: the covering wedge must open at the arc start
        }
      } else {
        if (w->full || !(w->start == anchor->ray)) continue;
      }
      if (placed_area + cell.double_area() > target_area) continue;
      if (!disjoint_from_placed(cell)) continue;
      placed.push_back(cell);
      placed_area += cell.double_area();
      recurse();
      placed_area -= cell.double_area();
      placed.pop_back();
    }
  }
};

bool edge_matched(const std::vector<Cell>& cells, const LatticePolygon& poly) {
  std::map<Segment, int> count;
  for (const auto& cell : cells) {
    for (const auto& seg : cell.edges()) ++count[seg];
  }
  for (const auto& [seg, c] : count) {
    if (c == 1) {
      if (!poly.boundary_contains_segment(seg.a, seg.b)) return false;
    } else if (c != 2 || poly.boundary_contains_segment(seg.a, seg.b)) {
      return false;
    }
  }
  return true;
}

bool has_full_edge(const std::vector<Cell>& cells, const Segment& seg) {
  for (const auto& cell : cells) {
    for (const auto& e : cell.edges()) {
      if (e == seg) return true;
    }
  }
  return false;
}

}  // namespace

std::int64_t kontsevich(int d) { return kontsevich_impl(d, /*ascending=*/true); }
std::int64_t kontsevich_descending(int d) { return kontsevich_impl(d, /*ascending=*/false); }

std::vector<Subdivision> brute_force_completions(const LatticePath& path, const Marking& marking,
                                                 const LatticePolygon& poly, Direction dir) {
  const auto& pts = poly.lattice_points();
  if (pts.size() > 12) {
    throw std::invalid_argument("brute-force completer refuses more than 12 lattice points");
  }

  CoverSearch search{poly, dir};
  search.target_area = poly.double_area();
  search.points_by_lambda = ordered_points(poly, dir);

  // Candidate cells: every lattice triangle and parallelogram with corners in
  // the polygon. Convexity puts each such cell inside the polygon.
  std::set<Cell> cand;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      for (std::size_t k = j + 1; k < pts.size(); ++k) {
        if (cross(pts[j] - pts[i], pts[k] - pts[i]) == 0) continue;
        cand.insert(Cell::triangle(pts[i], pts[j], pts[k]));
        for (const auto& [a, p, b] :
             {std::array{pts[i], pts[j], pts[k]}, std::array{pts[j], pts[i], pts[k]},
              std::array{pts[i], pts[k], pts[j]}}) {
          if (poly.contains(a + b - p)) cand.insert(Cell::parallelogram(a, p, b));
        }
      }
    }
  }
  search.candidates.assign(cand.begin(), cand.end());
  search.run();

  std::set<Subdivision> out;
  for (auto& cells : search.tilings) {
    std::sort(cells.begin(), cells.end());
    bool keep = edge_matched(cells, poly);
    for (int i = 1; keep && i <= path.n(); ++i) {
      const auto [a, b] = path.segment(i);
      keep = has_full_edge(cells, Segment::of(a, b));
    }
    if (!keep) continue;

    // Every admissible apex designation per V-index.
    std::vector<std::vector<Cell>> choices;
    bool feasible = true;
    for (int j : marking.v_set) {
      const auto [a, b] = path.segment(j);
      const Segment seg = Segment::of(a, b);
      std::vector<Cell> here;
      for (const auto& cell : cells) {
        if (cell.kind() != CellKind::Triangle) continue;
        bool has_seg = false;
        for (const auto& e : cell.edges()) has_seg = has_seg || e == seg;
        if (!has_seg) continue;
        LatticePoint apex{};
        for (const auto& c : cell.corners()) {
          if (c != a && c != b) apex = c;
        }
        const std::int64_t lam = lambda_value(dir, apex);
        if (lam > lambda_value(dir, a) && lam < lambda_value(dir, b)) here.push_back(cell);
      }
      if (here.empty()) {
        feasible = false;
        break;
      }
      choices.push_back(std::move(here));
    }
    if (!feasible) continue;

    std::vector<int> v_indices(marking.v_set.begin(), marking.v_set.end());
    std::vector<std::size_t> pick(v_indices.size(), 0);
    while (true) {
      Subdivision sub;
      sub.cells = cells;
      for (std::size_t k = 0; k < v_indices.size(); ++k) {
        sub.v_triangles.emplace(v_indices[k], choices[k][pick[k]]);
      }
      out.insert(std::move(sub));
      std::size_t k = pick.size();
      bool advanced = false;
      while (k > 0) {
        --k;
        if (++pick[k] < choices[k].size()) {
          advanced = true;
          break;
        }
        pick[k] = 0;
      }
      if (!advanced) break;
    }
  }
  return {out.begin(), out.end()};
}

}  // namespace wtrop
