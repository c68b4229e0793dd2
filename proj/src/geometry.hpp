#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace wtrop {

// Violated internal invariants throw internal_error; bad user input throws
// std::invalid_argument. The C API maps these to distinct status codes.
class internal_error : public std::logic_error {
 public:
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

inline void internal_check(bool ok, const char* what) {
  if (!ok) throw internal_error(what);
}

struct LatticePoint {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend constexpr bool operator==(const LatticePoint&, const LatticePoint&) = default;
  friend constexpr auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

constexpr LatticePoint operator+(LatticePoint a, LatticePoint b) { return {a.x + b.x, a.y + b.y}; }
constexpr LatticePoint operator-(LatticePoint a, LatticePoint b) { return {a.x - b.x, a.y - b.y}; }
constexpr std::int64_t cross(LatticePoint a, LatticePoint b) { return a.x * b.y - a.y * b.x; }
constexpr std::int64_t dot(LatticePoint a, LatticePoint b) { return a.x * b.x + a.y * b.y; }
constexpr LatticePoint rotate90(LatticePoint v) { return {-v.y, v.x}; }

std::string to_string(LatticePoint p);

// gcd(|dx|, |dy|); equals the number of lattice points on the segment minus one.
std::int64_t lattice_length(LatticePoint p, LatticePoint q);
LatticePoint primitive_direction(LatticePoint from, LatticePoint to);
bool segment_contains(LatticePoint a, LatticePoint b, LatticePoint p);

// Canonical undirected lattice segment.
struct Segment {
  LatticePoint a, b;

  static Segment of(LatticePoint p, LatticePoint q) {
    return p <= q ? Segment{p, q} : Segment{q, p};
  }
  std::int64_t length() const { return lattice_length(a, b); }
  friend bool operator==(const Segment&, const Segment&) = default;
  friend auto operator<=>(const Segment&, const Segment&) = default;
};

enum class CellKind { Triangle, Parallelogram };

// Lattice triangle or parallelogram; corners stored counterclockwise starting
// from the lexicographically least corner.
class Cell {
 public:
  static Cell triangle(LatticePoint a, LatticePoint b, LatticePoint c);
  // Built on the segments [a,p] and [p,b]; the fourth corner is a + b - p.
  static Cell parallelogram(LatticePoint a, LatticePoint p, LatticePoint b);

  CellKind kind() const { return kind_; }
  const std::vector<LatticePoint>& corners() const { return corners_; }
  std::int64_t double_area() const;
  std::int64_t interior_lattice_count() const;
  std::vector<Segment> edges() const;
  std::vector<std::pair<LatticePoint, LatticePoint>> directed_edges() const;
  bool contains(LatticePoint p) const;
  bool strictly_contains(LatticePoint p) const;
  bool has_corner(LatticePoint p) const;
  std::string to_string() const;

  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell&, const Cell&) = default;

 private:
  Cell(CellKind kind, std::vector<LatticePoint> corners)
      : kind_(kind), corners_(std::move(corners)) {}

  CellKind kind_;
  std::vector<LatticePoint> corners_;
};

// True iff the interiors of two convex cells meet (separating-axis test).
bool interiors_intersect(const Cell& a, const Cell& b);

// Strictly convex lattice polygon, counterclockwise, lexicographically least
// vertex first. Construction prunes coincident and collinear listed vertices.
class LatticePolygon {
 public:
  static LatticePolygon from_vertices(std::vector<LatticePoint> listed);

  const std::vector<LatticePoint>& vertices() const { return verts_; }
  std::int64_t double_area() const { return double_area_; }
  std::int64_t boundary_lattice_count() const;
  std::int64_t interior_lattice_count() const;
  const std::vector<LatticePoint>& lattice_points() const { return points_; }
  bool contains(LatticePoint p) const;
  bool boundary_contains(LatticePoint p) const;
  bool boundary_contains_segment(LatticePoint a, LatticePoint b) const;
  std::int64_t bounding_height() const;

 private:
  LatticePolygon() = default;

  std::vector<LatticePoint> verts_;
  std::vector<LatticePoint> points_;  // all of the polygon's lattice points, lex order
  std::int64_t double_area_ = 0;
};

std::int64_t double_area(const Cell& c);
std::int64_t double_area(const LatticePolygon& p);
std::int64_t interior_lattice_count(const Cell& c);
std::int64_t interior_lattice_count(const LatticePolygon& p);

enum class SurfaceKind { P2, P1xP1, Bl1, Bl2, Bl3 };

std::string surface_kind_name(SurfaceKind kind);

struct SurfaceDivisorSpec {
  SurfaceKind kind = SurfaceKind::P2;
  int d = 0;   // P2, Bl1..Bl3
  int d1 = 0;  // P1xP1 bidegree / first blown-up multiplicity
  int d2 = 0;
  int d3 = 0;

  std::vector<int> degrees() const;
  std::string to_string() const;
  friend bool operator==(const SurfaceDivisorSpec&, const SurfaceDivisorSpec&) = default;
};

LatticePolygon polygon_for_surface(const SurfaceDivisorSpec& spec);

}  // namespace wtrop
