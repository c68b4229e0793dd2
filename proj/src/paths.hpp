#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <utility>

#include "geometry.hpp"
#include "ordering.hpp"

namespace wtrop {

// Lambda-increasing broken line v_0..v_n through lattice points of the
// polygon, from the lambda-minimal to the lambda-maximal point. Segment i
// (1-based) is [v_{i-1}, v_i].
struct LatticePath {
  std::vector<LatticePoint> vertices;

  int n() const { return static_cast<int>(vertices.size()) - 1; }
  std::pair<LatticePoint, LatticePoint> segment(int i) const {
    return {vertices.at(static_cast<std::size_t>(i - 1)), vertices.at(static_cast<std::size_t>(i))};
  }
  std::int64_t segment_length(int i) const {
    const auto [a, b] = segment(i);
    return lattice_length(a, b);
  }
  friend bool operator==(const LatticePath&, const LatticePath&) = default;
};

// Index sets over the path segments: W carries the real point constraints,
// V the imaginary points that become trivalent vertices (apex triangles).
// V is forced: exactly the non-W indices whose segment has odd length.
struct Marking {
  int r_real = 0;
  int r_imag = 0;
  std::set<int> w_set;
  std::set<int> v_set;

  int s_imag_vertices() const { return static_cast<int>(v_set.size()); }
  friend bool operator==(const Marking&, const Marking&) = default;
};

// Returns std::nullopt only if some index outside W and V has a segment of
// odd length, which the forced construction of V rules out; the branch is
// kept as a guard.
std::optional<Marking> derive_marking(const LatticePath& path, const std::set<int>& w_set,
                                      int r_imag);

// Lazily enumerates the strictly lambda-increasing point sequences of length
// n+1 from the lambda-minimum to the lambda-maximum, in lexicographic order
// of the chosen interior points.
class PathEnumerator {
 public:
  PathEnumerator(const LatticePolygon& poly, Direction dir, int n);

  // Total number of paths, saturated at uint64 max.
  std::uint64_t count() const;
  // Fills `out` and its 0-based rank; false when exhausted.
  bool next(LatticePath& out, std::uint64_t& rank);
  void reset();

 private:
  std::vector<LatticePoint> ordered_;
  int n_ = 0;
  int middle_ = 0;               // number of selectable interior points
  std::vector<int> comb_;        // current (n-1)-combination of middle indices
  bool exhausted_ = false;
  bool started_ = false;
  std::uint64_t rank_ = 0;
};

}  // namespace wtrop
