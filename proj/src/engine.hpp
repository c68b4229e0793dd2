#pragma once

#include <optional>

#include "weights.hpp"

namespace wtrop {

struct EngineOptions {
  std::optional<Direction> direction;
  std::optional<std::set<int>> marking_w;
  int jobs = 1;
  bool collect_records = false;
  bool with_svg = false;
};

// One completed subdivision of one path, with its classification and weight.
struct SubdivisionRecord {
  std::uint64_t path_rank = 0;
  std::uint32_t index_in_path = 0;
  LatticePath path;
  Marking marking;
  Subdivision subdivision;
  Classification classification;
  WeightedCount weight;
  std::string svg;
};

struct InvariantResult {
  SurfaceDivisorSpec spec;
  int r_real = 0;
  int r_imag = 0;
  Direction direction;
  std::set<int> marking_w;
  std::uint64_t paths_total = 0;
  std::uint64_t subdivisions_total = 0;
  std::uint64_t consistent_count = 0;
  std::uint64_t zero_weight_count = 0;
  std::int64_t welschinger = 0;
  std::vector<SubdivisionRecord> records;  // populated when collect_records
};

// Admissibility data for a surface spec.
struct SurfaceInfo {
  std::int64_t boundary_points = 0;  // |boundary of the polygon ∩ Z^2|
  std::int64_t lattice_points = 0;
  int r_imag_max = 0;  // largest r'' with r' >= 0
};
SurfaceInfo surface_info(const SurfaceDivisorSpec& spec);

// Sum of the signed multiplicities of all consistent completions of all
// lambda-increasing paths; independent of the worker count.
InvariantResult welschinger_invariant(const SurfaceDivisorSpec& spec, int r_imag,
                                      const EngineOptions& options = {});

struct ComplexCountResult {
  std::uint64_t paths_total = 0;
  std::uint64_t subdivisions_total = 0;
  std::uint64_t counted = 0;
  std::int64_t total = 0;
};

// Total multiplicity of the rational complex curve count; P2 only, where the
// recursion oracle exists to check it. Experimental cross-check plumbing.
ComplexCountResult complex_count(const SurfaceDivisorSpec& spec, const EngineOptions& options = {});

struct InvarianceRun {
  Direction direction;
  std::set<int> marking_w;
  std::int64_t welschinger = 0;
};

struct InvarianceReport {
  std::vector<InvarianceRun> runs;
  bool agree = false;
  std::int64_t value = 0;
};

// Runs the invariant over the cartesian product of directions and W
// placements; disagreement is a correctness failure.
InvarianceReport invariance_report(const SurfaceDivisorSpec& spec, int r_imag,
                                   const std::vector<Direction>& directions,
                                   const std::vector<std::set<int>>& w_choices, int jobs = 1);

}  // namespace wtrop
