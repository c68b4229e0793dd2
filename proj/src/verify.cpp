#include "verify.hpp"

#include <algorithm>

#include "oracles.hpp"

namespace wtrop {

namespace {

void add_case(VerifyReport& report, const std::string& name, const std::string& expected,
              const std::string& got) {
  report.cases.push_back({name, expected, got, expected == got});
}

void add_value_case(VerifyReport& report, const std::string& name, std::int64_t expected,
                    std::int64_t got) {
  add_case(report, name, std::to_string(expected), std::to_string(got));
}

std::int64_t invariant(const SurfaceDivisorSpec& spec, int r_imag, int jobs) {
  EngineOptions opt;
  opt.jobs = jobs;
  return welschinger_invariant(spec, r_imag, opt).welschinger;
}

VerifyReport suite_paper(int jobs) {
  VerifyReport report;
  report.suite = "paper";

  const SurfaceDivisorSpec cubic{SurfaceKind::P2, 3};
  for (int r2 = 0; r2 <= 4; ++r2) {
    add_value_case(report, "W_" + std::to_string(r2) + "(p2,3)", 8 - 2 * r2,
                   invariant(cubic, r2, jobs));
  }
  for (int r2 = 0; r2 <= 1; ++r2) {
    add_value_case(report, "W_" + std::to_string(r2) + "(p2,1)", 1,
                   invariant({SurfaceKind::P2, 1}, r2, jobs));
  }
  for (int r2 = 0; r2 <= 2; ++r2) {
    add_value_case(report, "W_" + std::to_string(r2) + "(p2,2)", 1,
                   invariant({SurfaceKind::P2, 2}, r2, jobs));
  }
  for (int r2 = 0; r2 <= 1; ++r2) {
    SurfaceDivisorSpec quadric{SurfaceKind::P1xP1};
    quadric.d1 = 1;
    quadric.d2 = 1;
    add_value_case(report, "W_" + std::to_string(r2) + "(p1xp1,(1,1))", 1,
                   invariant(quadric, r2, jobs));
  }
  for (int r2 = 0; r2 <= 1; ++r2) {
    SurfaceDivisorSpec bl3{SurfaceKind::Bl3, 2, 1, 1, 1};
    add_value_case(report, "W_" + std::to_string(r2) + "(bl3,2-1-1-1)", 1,
                   invariant(bl3, r2, jobs));
  }
  return report;
}

VerifyReport suite_invariance(int jobs) {
  VerifyReport report;
  report.suite = "invariance";

  const SurfaceDivisorSpec cubic{SurfaceKind::P2, 3};
  const std::vector<Direction> dirs{{4, -1}, {5, -1}, {5, 1}};
  const std::vector<std::set<int>> ws{{1, 2, 3, 4}, {3, 4, 5, 6}, {1, 2, 5, 6},
                                      {2, 3, 4, 5}, {1, 3, 4, 6}};
  const InvarianceReport inv = invariance_report(cubic, 2, dirs, ws, jobs);
  for (const auto& run : inv.runs) {
    std::string w = "{";
    for (int i : run.marking_w) w += std::to_string(i) + ",";
    w += "}";
    add_value_case(report, "W_2(p2,3) lambda=" + run.direction.to_string() + " W=" + w, 4,
                   run.welschinger);
  }
  add_case(report, "all runs agree", "true", inv.agree ? "true" : "false");
  return report;
}

VerifyReport suite_oracle(int jobs) {
  VerifyReport report;
  report.suite = "oracle";

  const std::vector<std::int64_t> known{1, 1, 12, 620};
  for (int d = 1; d <= 8; ++d) {
    add_value_case(report, "kontsevich(" + std::to_string(d) + ") summation order",
                   kontsevich(d), kontsevich_descending(d));
  }
  for (int d = 1; d <= 4; ++d) {
    add_value_case(report, "kontsevich(" + std::to_string(d) + ")",
                   known[static_cast<std::size_t>(d - 1)], kontsevich(d));
  }
  for (int d = 1; d <= 4; ++d) {
    EngineOptions opt;
    opt.jobs = jobs;
    add_value_case(report, "complex_count(p2," + std::to_string(d) + ")", kontsevich(d),
                   complex_count({SurfaceKind::P2, d}, opt).total);
  }

  // Frontier completer against the brute-force cover search.
  std::vector<SurfaceDivisorSpec> small;
  small.push_back({SurfaceKind::P2, 1});
  small.push_back({SurfaceKind::P2, 2});
  {
    SurfaceDivisorSpec s{SurfaceKind::P1xP1};
    s.d1 = 1;
    s.d2 = 1;
    small.push_back(s);
  }
  for (const auto& spec : small) {
    const LatticePolygon poly = polygon_for_surface(spec);
    const Direction dir = default_direction(poly);
    const int constraints = static_cast<int>(poly.boundary_lattice_count()) - 1;
    for (int r2 = 0; 2 * r2 <= constraints; ++r2) {
      const int r1 = constraints - 2 * r2;
      const int n = r1 + r2;
      std::set<int> w;
      for (int i = 1; i <= r1; ++i) w.insert(i);
      PathEnumerator paths(poly, dir, n);
      LatticePath path;
      std::uint64_t rank = 0;
      std::uint64_t mismatches = 0, total = 0;
      while (paths.next(path, rank)) {
        const auto mk = derive_marking(path, w, r2);
        if (!mk) continue;
        ++total;
        const auto fast = complete(path, *mk, poly, dir);
        const auto slow = brute_force_completions(path, *mk, poly, dir);
        if (fast != slow) ++mismatches;
      }
      add_case(report,
               "completions " + spec.to_string() + " r2=" + std::to_string(r2) + " (" +
                   std::to_string(total) + " paths)",
               "0 mismatches", std::to_string(mismatches) + " mismatches");
    }
  }
  return report;
}

}  // namespace

VerifyReport run_verify_suite(const std::string& suite, int jobs) {
  VerifyReport report;
  if (suite == "paper") {
    report = suite_paper(jobs);
  } else if (suite == "invariance") {
    report = suite_invariance(jobs);
  } else if (suite == "oracle") {
    report = suite_oracle(jobs);
  } else {
    throw std::invalid_argument("unknown verify suite '" + suite +
                                "' (expected paper, invariance, or oracle)");
  }
  report.pass = std::all_of(report.cases.begin(), report.cases.end(),
                            [](const VerifyCase& c) { return c.pass; });
  return report;
}

nlohmann::json to_json(const VerifyReport& report) {
  nlohmann::json cases = nlohmann::json::array();
  for (const auto& c : report.cases) {
    cases.push_back(nlohmann::json{
        {"name", c.name}, {"expected", c.expected}, {"got", c.got}, {"pass", c.pass}});
  }
  return nlohmann::json{
      {"schema", 1}, {"suite", report.suite}, {"cases", cases}, {"pass", report.pass}};
}

std::string verify_report_text(const VerifyReport& report) {
  std::string out = "suite " + report.suite + "\n";
  for (const auto& c : report.cases) {
    out += std::string(c.pass ? "PASS" : "FAIL") + "  " + c.name + ": expected " + c.expected +
           ", got " + c.got + "\n";
  }
  out += report.pass ? "all cases passed\n" : "some cases FAILED\n";
  return out;
}

}  // namespace wtrop
