#pragma once

#include <set>

#include "subdiv.hpp"

namespace wtrop {

// Weighted dual graph of a subdivision. Node i is cell i (3-valent for a
// triangle, 4-valent for a parallelogram); node vinf() absorbs every
// unbounded end. Each edge is dual to one subdivision edge and carries its
// lattice length as weight.
struct DualEdge {
  int node_a = -1;
  int node_b = -1;  // may be vinf()
  Segment seg;
  std::int64_t weight = 0;
};

struct DualCurve {
  std::vector<Cell> cells;
  std::vector<DualEdge> edges;
  std::vector<std::vector<int>> incident;  // node -> edge ids (includes vinf slot)

  int vinf() const { return static_cast<int>(cells.size()); }
  bool is_triangle_node(int node) const {
    return node >= 0 && node < vinf() &&
           cells[static_cast<std::size_t>(node)].kind() == CellKind::Triangle;
  }
};

DualCurve dual_graph(const Subdivision& sub, const LatticePolygon& poly);

// Maximal straight chain of dual edges joined through parallelogram nodes;
// constant weight, endpoints at triangle nodes or vinf.
struct ExtendedEdge {
  std::vector<int> edge_ids;
  std::vector<Segment> segments;  // dual subdivision edges, in chain order
  std::int64_t weight = 0;
  int end_a = -1;
  int end_b = -1;
};

std::vector<ExtendedEdge> extended_edges(const DualCurve& curve);

// |V(S)| - 1 - #parallelograms; equals the rank for nodal curves.
std::int64_t virtual_rank(const Subdivision& sub);

// Split every 4-valent node into two pass-through strands and test
// connectivity away from vinf. When reducible, asserts that the component
// boundary cycles close up (their polygons Minkowski-sum to the polygon).
bool is_irreducible(const DualCurve& curve, const LatticePolygon& poly);

// First Betti number of the split graph over its bounded edges: the genus of
// the parametrized curve. Zero for rational curves.
std::int64_t split_genus(const DualCurve& curve);

struct GmaxGraph {
  std::set<int> extended_ids;
};

// Grows from the extended edges carrying the even-segment marked points
// (indices outside W and V), extending at bivalent triangle nodes until the
// fixpoint. Every member edge has even weight.
GmaxGraph build_gmax(const DualCurve& curve, const std::vector<ExtendedEdge>& extended,
                     const LatticePath& path, const Marking& marking);

enum class ConsistencyStatus { Consistent, Inconsistent };

struct Classification {
  ConsistencyStatus status = ConsistencyStatus::Inconsistent;
  std::string reason;
  int s_imag_vertices = 0;
  bool zero_weight = false;
  GmaxGraph gmax;
  std::vector<ExtendedEdge> extended;
  std::vector<int> w_indices_on_even_edges;  // diagnostics only
};

// Checks, in order: boundary edges of length 1 or 2; rank equal to
// |boundary lattice points| - 1 - r'' + s''; irreducibility; then builds
// G_max and flags zero weight when an even extended edge lies outside it.
Classification classify(const Subdivision& sub, const LatticePath& path, const Marking& marking,
                        const LatticePolygon& poly);

}  // namespace wtrop
