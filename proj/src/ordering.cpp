#include "ordering.hpp"

#include <algorithm>

namespace wtrop {

namespace {

constexpr std::int64_t kDirectionBound = 1'000'000'000;

}  // namespace

std::string Direction::to_string() const {
  return std::to_string(a) + ":" + std::to_string(b);
}

Direction default_direction(const LatticePolygon& poly) {
  return Direction{poly.bounding_height() + 1, -1};
}

void validate_direction(Direction dir, const LatticePolygon& poly) {
  if (dir.a == 0 && dir.b == 0) {
    throw std::invalid_argument("direction (0:0) is not a linear functional");
  }
  if (std::abs(dir.a) > kDirectionBound || std::abs(dir.b) > kDirectionBound) {
    throw std::invalid_argument("direction " + dir.to_string() + " out of range");
  }
  const auto& pts = poly.lattice_points();
  std::vector<std::pair<std::int64_t, LatticePoint>> vals;
  vals.reserve(pts.size());
  for (const auto& p : pts) vals.emplace_back(lambda_value(dir, p), p);
  std::sort(vals.begin(), vals.end());
  for (std::size_t i = 1; i < vals.size(); ++i) {
    if (vals[i - 1].first == vals[i].first) {
      throw std::invalid_argument("non-generic direction " + dir.to_string() + ": lambda" +
                                  to_string(vals[i - 1].second) + "=lambda" +
                                  to_string(vals[i].second));
    }
  }
}

std::vector<LatticePoint> ordered_points(const LatticePolygon& poly, Direction dir) {
  const auto& pts = poly.lattice_points();
  std::vector<std::pair<std::int64_t, LatticePoint>> vals;
  vals.reserve(pts.size());
  for (const auto& p : pts) vals.emplace_back(lambda_value(dir, p), p);
  std::sort(vals.begin(), vals.end());
  std::vector<LatticePoint> out;
  out.reserve(vals.size());
  for (std::size_t i = 0; i < vals.size(); ++i) {
    if (i > 0 && vals[i - 1].first == vals[i].first) {
      throw std::invalid_argument("direction " + dir.to_string() +
                                  " is not generic for this polygon");
    }
    out.push_back(vals[i].second);
  }
  return out;
}

}  // namespace wtrop
