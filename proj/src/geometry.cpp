#include "geometry.hpp"

#include <algorithm>
#include <numeric>

namespace wtrop {

namespace {

// Degrees are capped so that every double area and cross product stays far
// inside 64-bit range.
constexpr std::int64_t kCoordBound = 1'000'000;
constexpr int kMaxDegree = 64;

void check_coord(LatticePoint p) {
  if (p.x < -kCoordBound || p.x > kCoordBound || p.y < -kCoordBound || p.y > kCoordBound) {
    throw std::invalid_argument("lattice coordinate out of range: " + to_string(p));
  }
}

std::int64_t shoelace_twice(const std::vector<LatticePoint>& cycle) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const LatticePoint a = cycle[i];
    const LatticePoint b = cycle[(i + 1) % cycle.size()];
    s += cross(a, b);
  }
  return s;
}

// Rotate the cycle so that the lexicographically least corner comes first.
std::vector<LatticePoint> rotate_to_least(std::vector<LatticePoint> cycle) {
  auto least = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), least, cycle.end());
  return cycle;
}

std::int64_t interior_count_by_scan(const std::vector<LatticePoint>& ccw) {
  std::int64_t minx = ccw[0].x, maxx = ccw[0].x, miny = ccw[0].y, maxy = ccw[0].y;
  for (const auto& v : ccw) {
    minx = std::min(minx, v.x);
    maxx = std::max(maxx, v.x);
    miny = std::min(miny, v.y);
    maxy = std::max(maxy, v.y);
  }
  std::int64_t count = 0;
  for (std::int64_t x = minx; x <= maxx; ++x) {
    for (std::int64_t y = miny; y <= maxy; ++y) {
      const LatticePoint p{x, y};
      bool strict = true;
      for (std::size_t i = 0; i < ccw.size() && strict; ++i) {
        const LatticePoint a = ccw[i];
        const LatticePoint b = ccw[(i + 1) % ccw.size()];
        strict = cross(b - a, p - a) > 0;
      }
      if (strict) ++count;
    }
  }
  return count;
}

}  // namespace

std::string to_string(LatticePoint p) {
  return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

std::int64_t lattice_length(LatticePoint p, LatticePoint q) {
  if (p == q) {
    throw std::invalid_argument("degenerate segment at " + to_string(p));
  }
  const LatticePoint d = q - p;
  return std::gcd(std::abs(d.x), std::abs(d.y));
}

LatticePoint primitive_direction(LatticePoint from, LatticePoint to) {
  const std::int64_t g = lattice_length(from, to);
  const LatticePoint d = to - from;
  return {d.x / g, d.y / g};
}

bool segment_contains(LatticePoint a, LatticePoint b, LatticePoint p) {
  if (cross(b - a, p - a) != 0) return false;
  return dot(p - a, p - b) <= 0;
}

Cell Cell::triangle(LatticePoint a, LatticePoint b, LatticePoint c) {
  check_coord(a);
  check_coord(b);
  check_coord(c);
  const std::int64_t orient = cross(b - a, c - a);
  if (orient == 0) {
    throw std::invalid_argument("degenerate triangle " + wtrop::to_string(a) + wtrop::to_string(b) +
                                wtrop::to_string(c));
  }
  std::vector<LatticePoint> cyc = orient > 0 ? std::vector<LatticePoint>{a, b, c}
                                             : std::vector<LatticePoint>{a, c, b};
  return Cell(CellKind::Triangle, rotate_to_least(std::move(cyc)));
}

Cell Cell::parallelogram(LatticePoint a, LatticePoint p, LatticePoint b) {
  check_coord(a);
  check_coord(p);
  check_coord(b);
  if (cross(p - a, b - p) == 0) {
    throw std::invalid_argument("degenerate parallelogram on " + wtrop::to_string(a) +
                                wtrop::to_string(p) + wtrop::to_string(b));
  }
  const LatticePoint q = a + b - p;
  std::vector<LatticePoint> cyc{a, p, b, q};
  if (shoelace_twice(cyc) < 0) std::reverse(cyc.begin(), cyc.end());
  return Cell(CellKind::Parallelogram, rotate_to_least(std::move(cyc)));
}

std::int64_t Cell::double_area() const {
  const std::int64_t s = shoelace_twice(corners_);
  internal_check(s > 0, "cell with non-positive area");
  return s;
}

std::int64_t Cell::interior_lattice_count() const { return interior_count_by_scan(corners_); }

std::vector<Segment> Cell::edges() const {
  std::vector<Segment> out;
  out.reserve(corners_.size());
  for (std::size_t i = 0; i < corners_.size(); ++i) {
    out.push_back(Segment::of(corners_[i], corners_[(i + 1) % corners_.size()]));
  }
  return out;
}

std::vector<std::pair<LatticePoint, LatticePoint>> Cell::directed_edges() const {
  std::vector<std::pair<LatticePoint, LatticePoint>> out;
  out.reserve(corners_.size());
  for (std::size_t i = 0; i < corners_.size(); ++i) {
    out.emplace_back(corners_[i], corners_[(i + 1) % corners_.size()]);
  }
  return out;
}

bool Cell::contains(LatticePoint p) const {
  for (std::size_t i = 0; i < corners_.size(); ++i) {
    const LatticePoint a = corners_[i];
    const LatticePoint b = corners_[(i + 1) % corners_.size()];
    if (cross(b - a, p - a) < 0) return false;
  }
  return true;
}

bool Cell::strictly_contains(LatticePoint p) const {
  for (std::size_t i = 0; i < corners_.size(); ++i) {
    const LatticePoint a = corners_[i];
    const LatticePoint b = corners_[(i + 1) % corners_.size()];
    if (cross(b - a, p - a) <= 0) return false;
  }
  return true;
}

bool Cell::has_corner(LatticePoint p) const {
  return std::find(corners_.begin(), corners_.end(), p) != corners_.end();
}

std::string Cell::to_string() const {
  std::string s = kind_ == CellKind::Triangle ? "T[" : "P[";
  for (const auto& c : corners_) s += wtrop::to_string(c);
  return s + "]";
}

bool interiors_intersect(const Cell& a, const Cell& b) {
  const auto separated_by_edge_of = [](const Cell& p, const Cell& q) {
    for (const auto& [u, v] : p.directed_edges()) {
      bool all_outside = true;
      for (const auto& w : q.corners()) {
        if (cross(v - u, w - u) > 0) {
          all_outside = false;
          break;
        }
      }
      if (all_outside) return true;
    }
    return false;
  };
  return !separated_by_edge_of(a, b) && !separated_by_edge_of(b, a);
}

LatticePolygon LatticePolygon::from_vertices(std::vector<LatticePoint> listed) {
  for (const auto& v : listed) check_coord(v);

  // Prune coincident neighbours (cyclically).
  std::vector<LatticePoint> verts;
  for (const auto& v : listed) {
    if (verts.empty() || verts.back() != v) verts.push_back(v);
  }
  while (verts.size() > 1 && verts.front() == verts.back()) verts.pop_back();

  if (verts.size() < 3 || shoelace_twice(verts) == 0) {
    throw std::invalid_argument("degenerate polygon (double area 0)");
  }
  if (shoelace_twice(verts) < 0) std::reverse(verts.begin(), verts.end());

  // Prune collinear middle vertices until the cycle is strictly convex.
  bool changed = true;
  while (changed && verts.size() > 3) {
    changed = false;
    for (std::size_t i = 0; i < verts.size(); ++i) {
      const LatticePoint prev = verts[(i + verts.size() - 1) % verts.size()];
      const LatticePoint cur = verts[i];
      const LatticePoint next = verts[(i + 1) % verts.size()];
      if (cross(cur - prev, next - cur) == 0) {
        verts.erase(verts.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }

  for (std::size_t i = 0; i < verts.size(); ++i) {
    const LatticePoint prev = verts[(i + verts.size() - 1) % verts.size()];
    const LatticePoint cur = verts[i];
    const LatticePoint next = verts[(i + 1) % verts.size()];
    if (cross(cur - prev, next - cur) <= 0) {
      throw std::invalid_argument("polygon is not strictly convex");
    }
  }
  for (std::size_t i = 0; i < verts.size(); ++i) {
    for (std::size_t j = i + 1; j < verts.size(); ++j) {
      if (verts[i] == verts[j]) throw std::invalid_argument("repeated polygon vertex");
    }
  }

  LatticePolygon poly;
  poly.verts_ = rotate_to_least(std::move(verts));
  poly.double_area_ = shoelace_twice(poly.verts_);

  std::int64_t minx = poly.verts_[0].x, maxx = poly.verts_[0].x;
  std::int64_t miny = poly.verts_[0].y, maxy = poly.verts_[0].y;
  for (const auto& v : poly.verts_) {
    minx = std::min(minx, v.x);
    maxx = std::max(maxx, v.x);
    miny = std::min(miny, v.y);
    maxy = std::max(maxy, v.y);
  }
  for (std::int64_t x = minx; x <= maxx; ++x) {
    for (std::int64_t y = miny; y <= maxy; ++y) {
      if (poly.contains({x, y})) poly.points_.push_back({x, y});
    }
  }
  return poly;
}

std::int64_t LatticePolygon::boundary_lattice_count() const {
  std::int64_t total = 0;
  for (std::size_t i = 0; i < verts_.size(); ++i) {
    total += lattice_length(verts_[i], verts_[(i + 1) % verts_.size()]);
  }
  return total;
}

std::int64_t LatticePolygon::interior_lattice_count() const {
  return static_cast<std::int64_t>(points_.size()) - boundary_lattice_count();
}

bool LatticePolygon::contains(LatticePoint p) const {
  for (std::size_t i = 0; i < verts_.size(); ++i) {
    const LatticePoint a = verts_[i];
    const LatticePoint b = verts_[(i + 1) % verts_.size()];
    if (cross(b - a, p - a) < 0) return false;
  }
  return true;
}

bool LatticePolygon::boundary_contains(LatticePoint p) const {
  for (std::size_t i = 0; i < verts_.size(); ++i) {
    if (segment_contains(verts_[i], verts_[(i + 1) % verts_.size()], p)) return true;
  }
  return false;
}

bool LatticePolygon::boundary_contains_segment(LatticePoint a, LatticePoint b) const {
  for (std::size_t i = 0; i < verts_.size(); ++i) {
    const LatticePoint u = verts_[i];
    const LatticePoint v = verts_[(i + 1) % verts_.size()];
    if (segment_contains(u, v, a) && segment_contains(u, v, b)) return true;
  }
  return false;
}

std::int64_t LatticePolygon::bounding_height() const {
  std::int64_t miny = verts_[0].y, maxy = verts_[0].y;
  for (const auto& v : verts_) {
    miny = std::min(miny, v.y);
    maxy = std::max(maxy, v.y);
  }
  return maxy - miny;
}

std::int64_t double_area(const Cell& c) { return c.double_area(); }
std::int64_t double_area(const LatticePolygon& p) { return p.double_area(); }
std::int64_t interior_lattice_count(const Cell& c) { return c.interior_lattice_count(); }
std::int64_t interior_lattice_count(const LatticePolygon& p) { return p.interior_lattice_count(); }

std::string surface_kind_name(SurfaceKind kind) {
  switch (kind) {
    case SurfaceKind::P2: return "p2";
    case SurfaceKind::P1xP1: return "p1xp1";
    case SurfaceKind::Bl1: return "bl1";
    case SurfaceKind::Bl2: return "bl2";
    case SurfaceKind::Bl3: return "bl3";
  }
  throw internal_error("unknown surface kind");
}

std::vector<int> SurfaceDivisorSpec::degrees() const {
  switch (kind) {
    case SurfaceKind::P2: return {d};
    case SurfaceKind::P1xP1: return {d1, d2};
    case SurfaceKind::Bl1: return {d, d1};
    case SurfaceKind::Bl2: return {d, d1, d2};
    case SurfaceKind::Bl3: return {d, d1, d2, d3};
  }
  throw internal_error("unknown surface kind");
}

std::string SurfaceDivisorSpec::to_string() const {
  std::string s = surface_kind_name(kind) + "(";
  const auto ds = degrees();
  for (std::size_t i = 0; i < ds.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(ds[i]);
  }
  return s + ")";
}

LatticePolygon polygon_for_surface(const SurfaceDivisorSpec& spec) {
  const auto bad = [&spec](const std::string& why) {
    return std::invalid_argument("invalid surface spec " + spec.to_string() + ": " + why);
  };
  for (int deg : spec.degrees()) {
    if (deg < 0) throw bad("negative degree");
    if (deg > kMaxDegree) throw bad("degree above cap " + std::to_string(kMaxDegree));
  }

  std::vector<LatticePoint> listed;
  const std::int64_t d = spec.d, d1 = spec.d1, d2 = spec.d2, d3 = spec.d3;
  switch (spec.kind) {
    case SurfaceKind::P2:
      if (d < 1) throw bad("degree must be >= 1");
      listed = {{0, 0}, {0, d}, {d, 0}};
      break;
    case SurfaceKind::P1xP1:
      if (d1 < 1 || d2 < 1) throw bad("bidegree components must be >= 1");
      listed = {{0, 0}, {d2, 0}, {d2, d1}, {0, d1}};
      break;
    case SurfaceKind::Bl1:
      if (d < 1) throw bad("degree must be >= 1");
      listed = {{0, 0}, {d - d1, 0}, {d - d1, d1}, {0, d}};
      break;
    case SurfaceKind::Bl2:
      if (d < 1) throw bad("degree must be >= 1");
      listed = {{0, 0}, {d - d1, 0}, {d - d1, d1}, {d2, d - d2}, {0, d - d2}};
      break;
    case SurfaceKind::Bl3:
      if (d < 1) throw bad("degree must be >= 1");
      listed = {{d3, 0}, {d - d1, 0}, {d - d1, d1}, {d2, d - d2}, {0, d - d2}, {0, d3}};
      break;
  }

  try {
    return LatticePolygon::from_vertices(std::move(listed));
  } catch (const std::invalid_argument& e) {
    throw bad(e.what());
  }
}

}  // namespace wtrop
