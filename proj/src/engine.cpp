#include "engine.hpp"

#include <algorithm>
#include <mutex>
#include <thread>

#include "svg.hpp"

namespace wtrop {

namespace {

struct Shard {
  std::int64_t weight_sum = 0;
  std::uint64_t subdivisions = 0;
  std::uint64_t consistent = 0;
  std::uint64_t zero_weight = 0;
  std::vector<SubdivisionRecord> records;
};

struct RunContext {
  const LatticePolygon& poly;
  Direction dir;
  std::set<int> w_set;
  int r_imag;
  bool collect_records;
  bool with_svg;
  bool complex_mode;  // rank-n + irreducible filter, complex multiplicities
};

void process_path(const RunContext& ctx, std::uint64_t rank, const LatticePath& path,
                  Shard& shard) {
  const auto marking = derive_marking(path, ctx.w_set, ctx.r_imag);
  if (!marking) return;
  const auto subs = complete(path, *marking, ctx.poly, ctx.dir);
  std::uint32_t index_in_path = 0;
  for (const auto& sub : subs) {
    ++shard.subdivisions;
    if (ctx.complex_mode) {
      // Complex count: the curves meet the toric boundary transversally, so
      // every boundary edge must be unit; then rank, irreducibility, and
      // genus zero. No sign or zero rule applies.
      const std::int64_t required = ctx.poly.boundary_lattice_count() - 1;
      const DualCurve curve = dual_graph(sub, ctx.poly);
      bool unit_ends = true;
      for (const auto& e : curve.edges) {
        if ((e.node_a == curve.vinf() || e.node_b == curve.vinf()) && e.weight != 1) {
          unit_ends = false;
          break;
        }
      }
      if (unit_ends && virtual_rank(sub) == required && is_irreducible(curve, ctx.poly) &&
          split_genus(curve) == 0) {
        ++shard.consistent;
        shard.weight_sum += complex_multiplicity(sub);
      }
      ++index_in_path;
      continue;
    }
    const Classification cls = classify(sub, path, *marking, ctx.poly);
    WeightedCount wc;
    if (cls.status == ConsistencyStatus::Consistent) {
      wc = welschinger_weight(sub, cls);
      ++shard.consistent;
      if (cls.zero_weight) ++shard.zero_weight;
      shard.weight_sum += wc.welschinger;
    } else {
      wc.complex_mult = complex_multiplicity(sub);
    }
    if (ctx.collect_records) {
      SubdivisionRecord rec;
      rec.path_rank = rank;
      rec.index_in_path = index_in_path;
      rec.path = path;
      rec.marking = *marking;
      rec.subdivision = sub;
      rec.classification = cls;
      rec.weight = wc;
      if (ctx.with_svg) rec.svg = render_svg(sub, cls, wc, ctx.poly);
      shard.records.push_back(std::move(rec));
    }
    ++index_in_path;
  }
}

// Paths are handed out from a shared enumerator; integer reductions make the
// result independent of which worker takes which path.
std::uint64_t run_over_paths(const RunContext& ctx, int n, int jobs, Shard& total) {
  PathEnumerator paths(ctx.poly, ctx.dir, n);
  std::uint64_t paths_total = 0;
  jobs = std::max(1, jobs);
  if (jobs == 1) {
    LatticePath path;
    std::uint64_t rank = 0;
    while (paths.next(path, rank)) {
      ++paths_total;
      process_path(ctx, rank, path, total);
    }
    return paths_total;
  }

  std::mutex feed_mutex;
  std::vector<Shard> shards(static_cast<std::size_t>(jobs));
  std::vector<std::thread> workers;
  std::exception_ptr failure;
  std::mutex failure_mutex;
  for (int w = 0; w < jobs; ++w) {
    workers.emplace_back([&, w] {
      try {
        LatticePath path;
        std::uint64_t rank = 0;
        while (true) {
          {
            std::lock_guard<std::mutex> lock(feed_mutex);
            if (!paths.next(path, rank)) break;
            ++paths_total;
          }
          process_path(ctx, rank, path, shards[static_cast<std::size_t>(w)]);
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& t : workers) t.join();
  if (failure) std::rethrow_exception(failure);

  for (auto& s : shards) {
    total.weight_sum += s.weight_sum;
    total.subdivisions += s.subdivisions;
    total.consistent += s.consistent;
    total.zero_weight += s.zero_weight;
    for (auto& r : s.records) total.records.push_back(std::move(r));
  }
  std::sort(total.records.begin(), total.records.end(),
            [](const SubdivisionRecord& a, const SubdivisionRecord& b) {
              return std::tie(a.path_rank, a.index_in_path) <
                     std::tie(b.path_rank, b.index_in_path);
            });
  return paths_total;
}

std::set<int> default_w(int r_real) {
  std::set<int> w;
  for (int i = 1; i <= r_real; ++i) w.insert(i);
  return w;
}

}  // namespace

SurfaceInfo surface_info(const SurfaceDivisorSpec& spec) {
  const LatticePolygon poly = polygon_for_surface(spec);
  SurfaceInfo info;
  info.boundary_points = poly.boundary_lattice_count();
  info.lattice_points = static_cast<std::int64_t>(poly.lattice_points().size());
  info.r_imag_max = static_cast<int>((info.boundary_points - 1) / 2);
  return info;
}

InvariantResult welschinger_invariant(const SurfaceDivisorSpec& spec, int r_imag,
                                      const EngineOptions& options) {
  const LatticePolygon poly = polygon_for_surface(spec);
  const std::int64_t constraints = poly.boundary_lattice_count() - 1;
  if (r_imag < 0) throw std::invalid_argument("r'' must be non-negative");
  const std::int64_t r_real = constraints - 2 * static_cast<std::int64_t>(r_imag);
  if (r_real < 0) {
    throw std::invalid_argument("r''=" + std::to_string(r_imag) + " leaves r'=" +
                                std::to_string(r_real) + " < 0 for " + spec.to_string());
  }
  const int n = static_cast<int>(r_real) + r_imag;

  const Direction dir = options.direction.value_or(default_direction(poly));
  validate_direction(dir, poly);

  const std::set<int> w_set =
      options.marking_w.value_or(default_w(static_cast<int>(r_real)));
  if (static_cast<std::int64_t>(w_set.size()) != r_real) {
    throw std::invalid_argument("marking must pick exactly r'=" + std::to_string(r_real) +
                                " indices");
  }
  for (int i : w_set) {
    if (i < 1 || i > n) {
      throw std::invalid_argument("marking index " + std::to_string(i) + " outside 1.." +
                                  std::to_string(n));
    }
  }

  RunContext ctx{poly,  dir,  w_set, r_imag, options.collect_records,
                 options.with_svg, /*complex_mode=*/false};
  Shard total;
  const std::uint64_t paths_total = run_over_paths(ctx, n, options.jobs, total);

  InvariantResult res;
  res.spec = spec;
  res.r_real = static_cast<int>(r_real);
  res.r_imag = r_imag;
  res.direction = dir;
  res.marking_w = w_set;
  res.paths_total = paths_total;
  res.subdivisions_total = total.subdivisions;
  res.consistent_count = total.consistent;
  res.zero_weight_count = total.zero_weight;
  res.welschinger = total.weight_sum;
  res.records = std::move(total.records);
  return res;
}

ComplexCountResult complex_count(const SurfaceDivisorSpec& spec, const EngineOptions& options) {
  if (spec.kind != SurfaceKind::P2) {
    throw std::invalid_argument("complex count is implemented for p2 only");
  }
  const LatticePolygon poly = polygon_for_surface(spec);
  const int n = static_cast<int>(poly.boundary_lattice_count()) - 1;
  const Direction dir = options.direction.value_or(default_direction(poly));
  validate_direction(dir, poly);

  RunContext ctx{poly, dir, default_w(n), /*r_imag=*/0, false, false, /*complex_mode=*/true};
  Shard total;
  ComplexCountResult res;
  res.paths_total = run_over_paths(ctx, n, options.jobs, total);
  res.subdivisions_total = total.subdivisions;
  res.counted = total.consistent;
  res.total = total.weight_sum;
  return res;
}

InvarianceReport invariance_report(const SurfaceDivisorSpec& spec, int r_imag,
                                   const std::vector<Direction>& directions,
                                   const std::vector<std::set<int>>& w_choices, int jobs) {
  InvarianceReport report;
  for (const auto& dir : directions) {
    for (const auto& w : w_choices) {
      EngineOptions opt;
      opt.direction = dir;
      opt.marking_w = w;
      opt.jobs = jobs;
      const InvariantResult r = welschinger_invariant(spec, r_imag, opt);
      report.runs.push_back({dir, w, r.welschinger});
    }
  }
  report.agree = true;
  if (!report.runs.empty()) {
    report.value = report.runs.front().welschinger;
    for (const auto& run : report.runs) report.agree = report.agree && run.welschinger == report.value;
  }
  return report;
}

}  // namespace wtrop
