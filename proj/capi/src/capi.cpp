#include "dynr.h"

#include <cstring>
#include <string>

#include <json.hpp>

#include "dynr/liealg.hpp"
#include "dynr/verify.hpp"

using nlohmann::ordered_json;

struct dynr_algebra {
  dynr::LieAlgebra alg;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

dynr_status status_of(const std::exception& e) {
  using namespace dynr;
  if (dynamic_cast<const DimensionError*>(&e)) return DYNR_E_DIMENSION;
  if (dynamic_cast<const SingularFormError*>(&e)) return DYNR_E_SINGULAR_FORM;
  if (dynamic_cast<const PoleError*>(&e)) return DYNR_E_POLE;
  if (dynamic_cast<const DomainError*>(&e)) return DYNR_E_DOMAIN;
  if (dynamic_cast<const ClusterSeparationError*>(&e)) return DYNR_E_CLUSTER_SEPARATION;
  if (dynamic_cast<const SingularResolventError*>(&e)) return DYNR_E_SINGULAR_RESOLVENT;
  if (dynamic_cast<const RadiusError*>(&e)) return DYNR_E_RADIUS;
  if (dynamic_cast<const NotDiagonalizableError*>(&e)) return DYNR_E_NOT_DIAGONALIZABLE;
  if (dynamic_cast<const NotEigenvectorError*>(&e)) return DYNR_E_NOT_EIGENVECTOR;
  if (dynamic_cast<const ParseError*>(&e)) return DYNR_E_PARSE;
  if (dynamic_cast<const OverflowError*>(&e)) return DYNR_E_OVERFLOW;
  return DYNR_E_INTERNAL;
}

template <typename Fn>
dynr_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return status_of(e);
  } catch (...) {
    g_last_error = "unknown error";
    return DYNR_E_INTERNAL;
  }
}

} // namespace

extern "C" {

const char* dynr_version(void) { return "1.0.0"; }

const char* dynr_last_error(void) { return g_last_error.c_str(); }

const char* dynr_status_name(dynr_status status) {
  switch (status) {
    case DYNR_OK: return "ok";
    case DYNR_E_DIMENSION: return "dimension_error";
    case DYNR_E_SINGULAR_FORM: return "singular_form_error";
    case DYNR_E_POLE: return "pole_error";
    case DYNR_E_DOMAIN: return "domain_error";
    case DYNR_E_CLUSTER_SEPARATION: return "cluster_separation_error";
    case DYNR_E_SINGULAR_RESOLVENT: return "singular_resolvent_error";
    case DYNR_E_RADIUS: return "radius_error";
    case DYNR_E_NOT_DIAGONALIZABLE: return "not_diagonalizable_error";
    case DYNR_E_NOT_EIGENVECTOR: return "not_eigenvector_error";
    case DYNR_E_PARSE: return "parse_error";
    case DYNR_E_OVERFLOW: return "overflow_error";
    case DYNR_E_INVALID_ARGUMENT: return "invalid_argument";
    default: return "internal_error";
  }
}

void dynr_string_free(char* s) { std::free(s); }

dynr_status dynr_algebra_catalog(const char* name, dynr_algebra** out) {
  if (!name || !out) {
    g_last_error = "null argument";
    return DYNR_E_INVALID_ARGUMENT;
  }
  return guarded([&]() {
    *out = new dynr_algebra{dynr::catalog(name)};
    return DYNR_OK;
  });
}

dynr_status dynr_algebra_from_file(const char* path, dynr_algebra** out) {
  if (!path || !out) {
    g_last_error = "null argument";
    return DYNR_E_INVALID_ARGUMENT;
  }
  return guarded([&]() {
    *out = new dynr_algebra{dynr::algebra_from_file(path)};
    return DYNR_OK;
  });
}

void dynr_algebra_free(dynr_algebra* algebra) { delete algebra; }

int dynr_algebra_dim(const dynr_algebra* algebra) { return algebra ? algebra->alg.dim : 0; }

dynr_status dynr_algebra_label(const dynr_algebra* algebra, int i, char* buf, size_t buflen) {
  if (!algebra || !buf || buflen == 0) {
    g_last_error = "null argument";
    return DYNR_E_INVALID_ARGUMENT;
  }
  if (i < 0 || i >= algebra->alg.dim) {
    g_last_error = "label index out of range";
    return DYNR_E_INVALID_ARGUMENT;
  }
  const std::string& s = algebra->alg.labels[static_cast<size_t>(i)];
  std::strncpy(buf, s.c_str(), buflen - 1);
  buf[buflen - 1] = '\0';
  return DYNR_OK;
}

dynr_status dynr_validate(const dynr_algebra* algebra, int* pass, char** json) {
  if (!algebra) {
    g_last_error = "null argument";
    return DYNR_E_INVALID_ARGUMENT;
  }
  return guarded([&]() {
    dynr::ValidationReport rep = dynr::validate(algebra->alg);
    if (pass) *pass = rep.pass() ? 1 : 0;
    if (json) {
      ordered_json j;
      j["antisymmetry"] = rep.antisymmetry;
      j["jacobi"] = rep.jacobi;
      j["form_symmetry"] = rep.form_symmetry;
      j["invariance"] = rep.invariance;
      j["det_form_abs"] = rep.det_form_abs;
      j["exact_arithmetic"] = rep.exact_arithmetic;
      j["pass"] = rep.pass();
      *json = dup_string(j.dump(2));
    }
    return DYNR_OK;
  });
}

dynr_status dynr_run(const char* config_json, char** output, int* pass) {
  if (!config_json) {
    g_last_error = "null argument";
    return DYNR_E_INVALID_ARGUMENT;
  }
  return guarded([&]() -> dynr_status {
    dynr::RunConfig cfg;
    ordered_json j;
    try {
      j = ordered_json::parse(config_json);
    } catch (const nlohmann::json::exception& e) {
      throw dynr::ParseError(std::string("config: ") + e.what());
    }
    if (j.contains("algebra")) cfg.algebra = j["algebra"].get<std::string>();
    if (j.contains("omega")) cfg.omega = j["omega"].get<std::string>();
    if (j.contains("method")) cfg.method = j["method"].get<std::string>();
    if (j.contains("output")) cfg.output = j["output"].get<std::string>();
    if (j.contains("suites")) cfg.suites = j["suites"].get<std::vector<std::string>>();
    if (j.contains("seed")) cfg.seed = j["seed"].get<uint64_t>();
    if (j.contains("max_order")) cfg.max_order = j["max_order"].get<int>();
    if (j.contains("tol_residual")) cfg.tol_residual = j["tol_residual"].get<double>();
    if (j.contains("delta_pole")) cfg.delta_pole = j["delta_pole"].get<double>();
    if (j.contains("tol_exact")) cfg.tol_exact = j["tol_exact"].get<double>();
    if (j.contains("tol_rank")) cfg.tol_rank = j["tol_rank"].get<double>();
    if (j.contains("nodes")) cfg.nodes = j["nodes"].get<int>();
    dynr::VerificationReport rep = dynr::run(cfg);
    if (pass) *pass = rep.pass ? 1 : 0;
    if (output)
      *output = dup_string(cfg.output == "json" ? dynr::render_json(rep) : dynr::render_text(rep));
    return DYNR_OK;
  });
}

dynr_status dynr_catalog_list(char** out) {
  if (!out) {
    g_last_error = "null argument";
    return DYNR_E_INVALID_ARGUMENT;
  }
  return guarded([&]() {
    *out = dup_string(dynr::catalog_list_text());
    return DYNR_OK;
  });
}

} // extern "C"
