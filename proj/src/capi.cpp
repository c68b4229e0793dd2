#include "wtrop.h"

#include <cstdlib>
#include <cstring>
#include <memory>

#include "json_io.hpp"
#include "oracles.hpp"
#include "verify.hpp"

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) return nullptr;
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
wtrop_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return WTROP_OK;
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return WTROP_ERR_INVALID;
  } catch (const wtrop::internal_error& e) {
    g_last_error = e.what();
    return WTROP_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return WTROP_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return WTROP_ERR_INTERNAL;
  }
}

wtrop::SurfaceKind to_kind(wtrop_surface kind) {
  switch (kind) {
    case WTROP_SURFACE_P2: return wtrop::SurfaceKind::P2;
    case WTROP_SURFACE_P1XP1: return wtrop::SurfaceKind::P1xP1;
    case WTROP_SURFACE_BL1: return wtrop::SurfaceKind::Bl1;
    case WTROP_SURFACE_BL2: return wtrop::SurfaceKind::Bl2;
    case WTROP_SURFACE_BL3: return wtrop::SurfaceKind::Bl3;
  }
  throw std::invalid_argument("unknown surface kind enum");
}

}  // namespace

struct wtrop_run {
  wtrop::SurfaceDivisorSpec spec;
  bool has_surface = false;
  int r_imag = 0;
  wtrop::EngineOptions options;
};

struct wtrop_result {
  wtrop::InvariantResult value;
};

struct wtrop_enumeration {
  wtrop::InvariantResult value;
};

extern "C" {

const char* wtrop_version(void) { return "1.0.0"; }

const char* wtrop_last_error(void) { return g_last_error.c_str(); }

void wtrop_string_free(char* s) { std::free(s); }

wtrop_run* wtrop_run_new(void) { return new (std::nothrow) wtrop_run(); }

void wtrop_run_free(wtrop_run* run) { delete run; }

wtrop_status wtrop_run_set_surface(wtrop_run* run, wtrop_surface kind, int d, int d1, int d2,
                                   int d3) {
  if (run == nullptr) return WTROP_ERR_INVALID;
  return guarded([&] {
    run->spec = wtrop::SurfaceDivisorSpec{to_kind(kind), d, d1, d2, d3};
    wtrop::polygon_for_surface(run->spec);  // validate eagerly
    run->has_surface = true;
  });
}

wtrop_status wtrop_run_set_imaginary_pairs(wtrop_run* run, int r2) {
  if (run == nullptr) return WTROP_ERR_INVALID;
  return guarded([&] {
    if (r2 < 0) throw std::invalid_argument("r'' must be non-negative");
    run->r_imag = r2;
  });
}

wtrop_status wtrop_run_set_lambda(wtrop_run* run, int64_t a, int64_t b) {
  if (run == nullptr) return WTROP_ERR_INVALID;
  return guarded([&] { run->options.direction = wtrop::Direction{a, b}; });
}

wtrop_status wtrop_run_set_marking(wtrop_run* run, const int32_t* indices, size_t count) {
  if (run == nullptr || (indices == nullptr && count > 0)) return WTROP_ERR_INVALID;
  return guarded([&] {
    if (count == 0) {
      run->options.marking_w.reset();
      return;
    }
    std::set<int> w;
    for (size_t i = 0; i < count; ++i) {
      if (!w.insert(indices[i]).second) {
        throw std::invalid_argument("repeated marking index " + std::to_string(indices[i]));
      }
    }
    run->options.marking_w = std::move(w);
  });
}

wtrop_status wtrop_run_set_jobs(wtrop_run* run, int jobs) {
  if (run == nullptr) return WTROP_ERR_INVALID;
  return guarded([&] {
    if (jobs < 1) throw std::invalid_argument("jobs must be >= 1");
    run->options.jobs = jobs;
  });
}

wtrop_status wtrop_run_set_svg(wtrop_run* run, int enabled) {
  if (run == nullptr) return WTROP_ERR_INVALID;
  run->options.with_svg = enabled != 0;
  return WTROP_OK;
}

wtrop_status wtrop_run_query(const wtrop_run* run, int64_t* boundary_points, int64_t* r2_max) {
  if (run == nullptr) return WTROP_ERR_INVALID;
  return guarded([&] {
    if (!run->has_surface) throw std::invalid_argument("surface not configured");
    const wtrop::SurfaceInfo info = wtrop::surface_info(run->spec);
    if (boundary_points != nullptr) *boundary_points = info.boundary_points;
    if (r2_max != nullptr) *r2_max = info.r_imag_max;
  });
}

wtrop_status wtrop_compute(const wtrop_run* run, wtrop_result** out) {
  if (run == nullptr || out == nullptr) return WTROP_ERR_INVALID;
  return guarded([&] {
    if (!run->has_surface) throw std::invalid_argument("surface not configured");
    wtrop::EngineOptions opt = run->options;
    opt.collect_records = false;
    opt.with_svg = false;
    auto res = std::make_unique<wtrop_result>();
    res->value = wtrop::welschinger_invariant(run->spec, run->r_imag, opt);
    *out = res.release();
  });
}

void wtrop_result_free(wtrop_result* res) { delete res; }

int64_t wtrop_result_welschinger(const wtrop_result* res) { return res->value.welschinger; }
int32_t wtrop_result_r_real(const wtrop_result* res) { return res->value.r_real; }
int32_t wtrop_result_r_imag(const wtrop_result* res) { return res->value.r_imag; }
uint64_t wtrop_result_paths_total(const wtrop_result* res) { return res->value.paths_total; }
uint64_t wtrop_result_subdivisions_total(const wtrop_result* res) {
  return res->value.subdivisions_total;
}
uint64_t wtrop_result_consistent(const wtrop_result* res) { return res->value.consistent_count; }
uint64_t wtrop_result_zero_weight(const wtrop_result* res) { return res->value.zero_weight_count; }

char* wtrop_result_lambda(const wtrop_result* res) {
  return dup_string(res->value.direction.to_string());
}

char* wtrop_result_json(const wtrop_result* res) {
  return dup_string(wtrop::result_to_string(res->value));
}

wtrop_status wtrop_enumerate(const wtrop_run* run, wtrop_enumeration** out) {
  if (run == nullptr || out == nullptr) return WTROP_ERR_INVALID;
  return guarded([&] {
    if (!run->has_surface) throw std::invalid_argument("surface not configured");
    wtrop::EngineOptions opt = run->options;
    opt.collect_records = true;
    auto res = std::make_unique<wtrop_enumeration>();
    res->value = wtrop::welschinger_invariant(run->spec, run->r_imag, opt);
    *out = res.release();
  });
}

void wtrop_enumeration_free(wtrop_enumeration* e) { delete e; }

size_t wtrop_enumeration_count(const wtrop_enumeration* e) { return e->value.records.size(); }

int64_t wtrop_enumeration_welschinger(const wtrop_enumeration* e) {
  return e->value.welschinger;
}

char* wtrop_enumeration_json(const wtrop_enumeration* e) {
  return dup_string(wtrop::result_to_string(e->value));
}

char* wtrop_enumeration_record_json(const wtrop_enumeration* e, size_t index) {
  if (e == nullptr || index >= e->value.records.size()) return nullptr;
  return dup_string(wtrop::to_json(e->value.records[index]).dump(2));
}

char* wtrop_enumeration_record_svg(const wtrop_enumeration* e, size_t index) {
  if (e == nullptr || index >= e->value.records.size()) return nullptr;
  return dup_string(e->value.records[index].svg);
}

wtrop_status wtrop_kontsevich(int degree, int64_t* out) {
  if (out == nullptr) return WTROP_ERR_INVALID;
  return guarded([&] { *out = wtrop::kontsevich(degree); });
}

wtrop_status wtrop_complex_count(const wtrop_run* run, int64_t* out) {
  if (run == nullptr || out == nullptr) return WTROP_ERR_INVALID;
  return guarded([&] {
    if (!run->has_surface) throw std::invalid_argument("surface not configured");
    *out = wtrop::complex_count(run->spec, run->options).total;
  });
}

wtrop_status wtrop_verify(const char* suite, const char* format, int jobs, int* pass,
                          char** report) {
  if (suite == nullptr) return WTROP_ERR_INVALID;
  return guarded([&] {
    const wtrop::VerifyReport rep = wtrop::run_verify_suite(suite, jobs < 1 ? 1 : jobs);
    if (pass != nullptr) *pass = rep.pass ? 1 : 0;
    if (report != nullptr) {
      const std::string fmt = format == nullptr ? "text" : format;
      if (fmt == "json") {
        *report = dup_string(wtrop::to_json(rep).dump(2));
      } else if (fmt == "text") {
        *report = dup_string(wtrop::verify_report_text(rep));
      } else {
        throw std::invalid_argument("unknown format '" + fmt + "'");
      }
    }
  });
}

}  // extern "C"
