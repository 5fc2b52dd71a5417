#include "lieindex.h"

#include <cstring>
#include <new>
#include <string>

#include "lieindex/json_io.hpp"
#include "lieindex/specparse.hpp"
#include "lieindex/verify.hpp"

struct lx_algebra {
  lieindex::LieAlgebra alg;
};

namespace {

thread_local std::string tl_last_error;

lx_status set_error(lx_status code, const std::string& msg) {
  tl_last_error = msg;
  return code;
}

lx_status map_error(const lieindex::lie_error& e) {
  using lieindex::errc;
  switch (e.code()) {
    case errc::parse_error:
    case errc::io_error:
      return set_error(LX_ERR_PARSE, e.what());
    default:
      return set_error(LX_ERR_MATH, e.what());
  }
}

char* dup_string(const std::string& s) {
  char* out = new (std::nothrow) char[s.size() + 1];
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

lieindex::GenericRankConfig to_core_config(const lx_config* cfg) {
  lieindex::GenericRankConfig c;
  if (cfg) {
    c.seed = cfg->seed;
    c.trials = cfg->trials;
    c.coeff_bound = static_cast<long>(cfg->coeff_bound);
    c.symbolic_threshold = cfg->symbolic_threshold;
    c.force_symbolic = cfg->force_symbolic != 0;
  }
  c.check();
  return c;
}

template <typename Fn>
lx_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const lieindex::lie_error& e) {
    return map_error(e);
  } catch (const std::exception& e) {
    return set_error(LX_ERR_INTERNAL, e.what());
  } catch (...) {
    return set_error(LX_ERR_INTERNAL, "unknown error");
  }
}

}  // namespace

extern "C" {

void lx_config_init(lx_config* cfg) {
  if (!cfg) return;
  const lieindex::GenericRankConfig d;
  cfg->seed = d.seed;
  cfg->trials = d.trials;
  cfg->coeff_bound = d.coeff_bound;
  cfg->symbolic_threshold = d.symbolic_threshold;
  cfg->force_symbolic = d.force_symbolic ? 1 : 0;
}

const char* lx_version(void) { return "1.0.0"; }

const char* lx_last_error(void) { return tl_last_error.c_str(); }

lx_status lx_algebra_from_spec(const char* spec, lx_algebra** out) {
  if (!spec || !out) return set_error(LX_ERR_INVALID, "null argument");
  *out = nullptr;
  return guarded([&]() {
    auto built = lieindex::build_spec(spec);
    *out = new lx_algebra{std::move(built.algebra)};
    return LX_OK;
  });
}

lx_status lx_algebra_from_json(const char* json_text, lx_algebra** out) {
  if (!json_text || !out) return set_error(LX_ERR_INVALID, "null argument");
  *out = nullptr;
  return guarded([&]() {
    auto alg = lieindex::algebra_from_text(json_text);
    *out = new lx_algebra{std::move(alg)};
    return LX_OK;
  });
}

lx_status lx_algebra_to_json(const lx_algebra* alg, char** out_text) {
  if (!alg || !out_text) return set_error(LX_ERR_INVALID, "null argument");
  *out_text = nullptr;
  return guarded([&]() {
    *out_text = dup_string(lieindex::algebra_to_text(alg->alg));
    return *out_text ? LX_OK : set_error(LX_ERR_INTERNAL, "allocation failed");
  });
}

int32_t lx_algebra_dim(const lx_algebra* alg) {
  return alg ? alg->alg.dim() : -1;
}

void lx_algebra_free(lx_algebra* alg) { delete alg; }

lx_status lx_algebra_index(const lx_algebra* alg, const lx_config* cfg,
                           char** out_text) {
  if (!alg || !out_text) return set_error(LX_ERR_INVALID, "null argument");
  *out_text = nullptr;
  return guarded([&]() {
    const auto core_cfg = to_core_config(cfg);
    const auto report = lieindex::algebra_index(alg->alg, core_cfg);
    *out_text = dup_string(lieindex::index_report_to_json(report).dump(2) + "\n");
    return *out_text ? LX_OK : set_error(LX_ERR_INTERNAL, "allocation failed");
  });
}

lx_status lx_suite_run(const lx_config* cfg, const char* filter_glob,
                       char** out_text, int32_t* out_all_expected) {
  if (!out_text) return set_error(LX_ERR_INVALID, "null argument");
  *out_text = nullptr;
  return guarded([&]() {
    const auto core_cfg = to_core_config(cfg);
    const auto report =
        lieindex::run_suite(core_cfg, filter_glob ? filter_glob : "*");
    if (out_all_expected) *out_all_expected = report.all_expected ? 1 : 0;
    *out_text = dup_string(report.to_json().dump(2) + "\n");
    return *out_text ? LX_OK : set_error(LX_ERR_INTERNAL, "allocation failed");
  });
}

void lx_string_free(char* s) { delete[] s; }

}  // extern "C"
