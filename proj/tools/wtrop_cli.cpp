// Command-line front end; talks to the engine exclusively through the C API.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <vector>

#include "wtrop.h"

namespace {

struct RunDeleter {
  void operator()(wtrop_run* r) const { wtrop_run_free(r); }
};
using RunPtr = std::unique_ptr<wtrop_run, RunDeleter>;

struct OwnedString {
  char* s = nullptr;
  ~OwnedString() { wtrop_string_free(s); }
  std::string str() const { return s == nullptr ? std::string() : std::string(s); }
};

[[noreturn]] void die(wtrop_status status) {
  std::cerr << "wtrop: " << wtrop_last_error() << "\n";
  std::exit(status == WTROP_OK ? 3 : static_cast<int>(status));
}

void require_ok(wtrop_status status) {
  if (status != WTROP_OK) die(status);
}

struct CommonOptions {
  std::string surface = "p2";
  int degree = 0;
  int d1 = 0;
  int d2 = 0;
  int d3 = 0;
  int r2 = 0;
  std::string lambda;
  std::string marking;
  int jobs = 0;
  std::string format = "text";
};

void add_surface_flags(CLI::App* cmd, CommonOptions& opt) {
  cmd->add_option("--surface", opt.surface, "Surface: p2, p1xp1, bl1, bl2, bl3")
      ->check(CLI::IsMember({"p2", "p1xp1", "bl1", "bl2", "bl3"}));
  cmd->add_option("--degree", opt.degree, "Degree d (p2, bl1..bl3)");
  cmd->add_option("--d1", opt.d1, "First bidegree / blown-up multiplicity");
  cmd->add_option("--d2", opt.d2, "Second bidegree / blown-up multiplicity");
  cmd->add_option("--d3", opt.d3, "Third blown-up multiplicity");
}

void add_run_flags(CLI::App* cmd, CommonOptions& opt) {
  cmd->add_option("--lambda", opt.lambda, "Direction a:b overriding the default");
  cmd->add_option("--marking", opt.marking, "Comma-separated 1-based W indices");
  cmd->add_option("--jobs", opt.jobs, "Worker count (default: WTROP_JOBS or 1)");
  cmd->add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
}

int effective_jobs(int flag_value) {
  if (flag_value > 0) return flag_value;
  if (const char* env = std::getenv("WTROP_JOBS")) {
    const int v = std::atoi(env);
    if (v >= 1) return v;
  }
  return 1;
}

RunPtr build_run(const CommonOptions& opt, bool with_r2 = true) {
  RunPtr run(wtrop_run_new());
  if (!run) {
    std::cerr << "wtrop: out of memory\n";
    std::exit(3);
  }
  wtrop_surface kind = WTROP_SURFACE_P2;
  if (opt.surface == "p1xp1") kind = WTROP_SURFACE_P1XP1;
  if (opt.surface == "bl1") kind = WTROP_SURFACE_BL1;
  if (opt.surface == "bl2") kind = WTROP_SURFACE_BL2;
  if (opt.surface == "bl3") kind = WTROP_SURFACE_BL3;
  require_ok(wtrop_run_set_surface(run.get(), kind, opt.degree, opt.d1, opt.d2, opt.d3));
  if (with_r2) require_ok(wtrop_run_set_imaginary_pairs(run.get(), opt.r2));
  if (!opt.lambda.empty()) {
    const auto colon = opt.lambda.find(':');
    if (colon == std::string::npos) {
      std::cerr << "wtrop: --lambda expects a:b\n";
      std::exit(2);
    }
    std::int64_t a = 0, b = 0;
    try {
      a = std::stoll(opt.lambda.substr(0, colon));
      b = std::stoll(opt.lambda.substr(colon + 1));
    } catch (const std::exception&) {
      std::cerr << "wtrop: --lambda expects integers a:b\n";
      std::exit(2);
    }
    require_ok(wtrop_run_set_lambda(run.get(), a, b));
  }
  if (!opt.marking.empty()) {
    std::vector<int32_t> indices;
    std::stringstream ss(opt.marking);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        indices.push_back(std::stoi(item));
      } catch (const std::exception&) {
        std::cerr << "wtrop: --marking expects comma-separated integers\n";
        std::exit(2);
      }
    }
    require_ok(wtrop_run_set_marking(run.get(), indices.data(), indices.size()));
  }
  require_ok(wtrop_run_set_jobs(run.get(), effective_jobs(opt.jobs)));
  return run;
}

std::string surface_line(const CommonOptions& opt) {
  std::string s = "surface=" + opt.surface;
  if (opt.surface == "p2") {
    s += " degree=" + std::to_string(opt.degree);
  } else if (opt.surface == "p1xp1") {
    s += " d1=" + std::to_string(opt.d1) + " d2=" + std::to_string(opt.d2);
  } else {
    s += " degree=" + std::to_string(opt.degree) + " d1=" + std::to_string(opt.d1);
    if (opt.surface != "bl1") s += " d2=" + std::to_string(opt.d2);
    if (opt.surface == "bl3") s += " d3=" + std::to_string(opt.d3);
  }
  return s;
}

int cmd_compute(const CommonOptions& opt, bool complex_mode) {
  RunPtr run = build_run(opt);
  if (complex_mode) {
    int64_t total = 0;
    require_ok(wtrop_complex_count(run.get(), &total));
    if (opt.format == "json") {
      nlohmann::json j{{"schema", 1}, {"mode", "complex"}, {"degree", opt.degree}, {"count", total}};
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "N=" << total << "\n";
    }
    return 0;
  }

  wtrop_result* raw = nullptr;
  require_ok(wtrop_compute(run.get(), &raw));
  std::unique_ptr<wtrop_result, decltype(&wtrop_result_free)> res(raw, wtrop_result_free);
  if (opt.format == "json") {
    OwnedString js{wtrop_result_json(res.get())};
    std::cout << js.str() << "\n";
  } else {
    OwnedString lambda{wtrop_result_lambda(res.get())};
    std::cout << surface_line(opt) << "\n";
    std::cout << "r2=" << wtrop_result_r_imag(res.get()) << " r1=" << wtrop_result_r_real(res.get())
              << " lambda=" << lambda.str() << "\n";
    std::cout << "paths=" << wtrop_result_paths_total(res.get())
              << " subdivisions=" << wtrop_result_subdivisions_total(res.get())
              << " consistent=" << wtrop_result_consistent(res.get())
              << " zero_weight=" << wtrop_result_zero_weight(res.get()) << "\n";
    std::cout << "W=" << wtrop_result_welschinger(res.get()) << "\n";
  }
  return 0;
}

int cmd_table(const CommonOptions& opt) {
  RunPtr probe = build_run(opt, /*with_r2=*/false);
  int64_t boundary = 0, r2_max = 0;
  require_ok(wtrop_run_query(probe.get(), &boundary, &r2_max));

  nlohmann::json rows = nlohmann::json::array();
  std::string compact;
  if (opt.format == "text") std::cout << surface_line(opt) << "\n";
  for (int r2 = 0; r2 <= r2_max; ++r2) {
    CommonOptions one = opt;
    one.r2 = r2;
    RunPtr run = build_run(one);
    wtrop_result* raw = nullptr;
    require_ok(wtrop_compute(run.get(), &raw));
    std::unique_ptr<wtrop_result, decltype(&wtrop_result_free)> res(raw, wtrop_result_free);
    const int64_t w = wtrop_result_welschinger(res.get());
    if (opt.format == "json") {
      rows.push_back(nlohmann::json{{"r_imag", r2},
                                    {"r_real", wtrop_result_r_real(res.get())},
                                    {"welschinger", w}});
    } else {
      std::cout << "r2=" << r2 << " r1=" << wtrop_result_r_real(res.get()) << " W=" << w << "\n";
      if (!compact.empty()) compact += " ";
      compact += std::to_string(w);
    }
  }
  if (opt.format == "json") {
    nlohmann::json j{{"schema", 1},
                     {"surface", opt.surface},
                     {"boundary_points", boundary},
                     {"table", rows}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "W: " << compact << "\n";
  }
  return 0;
}

int cmd_enumerate(const CommonOptions& opt, const std::string& out_dir, bool with_svg) {
  RunPtr run = build_run(opt);
  require_ok(wtrop_run_set_svg(run.get(), with_svg ? 1 : 0));

  wtrop_enumeration* raw = nullptr;
  require_ok(wtrop_enumerate(run.get(), &raw));
  std::unique_ptr<wtrop_enumeration, decltype(&wtrop_enumeration_free)> e(raw,
                                                                          wtrop_enumeration_free);

  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) {
    std::cerr << "wtrop: cannot create " << out_dir << ": " << ec.message() << "\n";
    return 2;
  }

  {
    OwnedString js{wtrop_enumeration_json(e.get())};
    std::ofstream f(std::filesystem::path(out_dir) / "result.json");
    f << js.str() << "\n";
  }
  const size_t count = wtrop_enumeration_count(e.get());
  for (size_t i = 0; i < count; ++i) {
    char name[32];
    std::snprintf(name, sizeof(name), "sub_%05zu", i);
    {
      OwnedString js{wtrop_enumeration_record_json(e.get(), i)};
      std::ofstream f(std::filesystem::path(out_dir) / (std::string(name) + ".json"));
      f << js.str() << "\n";
    }
    if (with_svg) {
      OwnedString svg{wtrop_enumeration_record_svg(e.get(), i)};
      std::ofstream f(std::filesystem::path(out_dir) / (std::string(name) + ".svg"));
      f << svg.str();
    }
  }
  if (opt.format == "text") {
    std::cout << "wrote " << count << " subdivision records to " << out_dir << "\n";
    std::cout << "W=" << wtrop_enumeration_welschinger(e.get()) << "\n";
  } else {
    nlohmann::json j{{"schema", 1},
                     {"records", count},
                     {"out", out_dir},
                     {"welschinger", wtrop_enumeration_welschinger(e.get())}};
    std::cout << j.dump(2) << "\n";
  }
  return 0;
}

int cmd_verify(const std::string& suite, const std::string& format, int jobs) {
  int pass = 0;
  char* report = nullptr;
  require_ok(wtrop_verify(suite.c_str(), format.c_str(), effective_jobs(jobs), &pass, &report));
  OwnedString owned{report};
  std::cout << owned.str();
  if (!owned.str().empty() && owned.str().back() != '\n') std::cout << "\n";
  return pass != 0 ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Welschinger invariants of real toric Del Pezzo surfaces via lattice paths"};
  app.require_subcommand(1);

  CommonOptions copt;
  bool complex_mode = false;
  auto* compute = app.add_subcommand("compute", "Compute one invariant W_{r''}(surface, D)");
  add_surface_flags(compute, copt);
  compute->add_option("--r2", copt.r2, "Number of imaginary conjugate pairs r''");
  add_run_flags(compute, copt);
  compute->add_flag("--complex", complex_mode, "Complex count cross-check (p2 only)")->group("");

  CommonOptions topt;
  auto* table = app.add_subcommand("table", "All invariants for r''=0..max");
  add_surface_flags(table, topt);
  add_run_flags(table, topt);

  CommonOptions eopt;
  std::string out_dir;
  bool with_svg = false;
  auto* enumerate = app.add_subcommand("enumerate", "Dump every subdivision as JSON (and SVG)");
  add_surface_flags(enumerate, eopt);
  enumerate->add_option("--r2", eopt.r2, "Number of imaginary conjugate pairs r''");
  add_run_flags(enumerate, eopt);
  enumerate->add_option("--out", out_dir, "Output directory")->required();
  enumerate->add_flag("--svg", with_svg, "Also render one SVG figure per subdivision");

  std::string suite;
  std::string vformat = "text";
  int vjobs = 0;
  auto* verify = app.add_subcommand("verify", "Built-in verification suites");
  verify->add_option("--suite", suite, "Suite: paper, invariance, oracle")->required();
  verify->add_option("--format", vformat, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--jobs", vjobs, "Worker count");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (compute->parsed()) return cmd_compute(copt, complex_mode);
    if (table->parsed()) return cmd_table(topt);
    if (enumerate->parsed()) return cmd_enumerate(eopt, out_dir, with_svg);
    if (verify->parsed()) return cmd_verify(suite, vformat, vjobs);
  } catch (const std::exception& e) {
    std::cerr << "wtrop: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
