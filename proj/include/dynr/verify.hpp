#ifndef DYNR_VERIFY_HPP
#define DYNR_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "dynr/liealg.hpp"

namespace dynr {

struct RunConfig {
  std::string algebra = "sl2";
  std::string omega = "random:20:42"; // random:<count>:<seed> | coords | label combo
  std::string method = "spectral";
  std::string output = "text"; // text | json
  std::vector<std::string> suites; // empty = every suite applicable to the algebra
  double tol_residual = 1e-8;
  double delta_pole = 1e-6; // exclusion distance used by the domain gate
  double tol_exact = TOL_EXACT;
  double tol_rank = TOL_RANK;
  int nodes = 64;
  uint64_t seed = 42; // seeds identity sweeps and the equivariance directions
  int max_order = 10; // identities suite
};

struct SuiteCase {
  std::string label;
  double residual = 0;
  double tolerance = 0;
  bool pass = false;
};

struct SuiteResult {
  std::string name;
  bool pass = false;
  double max_residual = 0;
  double tolerance = 0;
  std::string error; // exception text when the suite aborted
  double wall_ms = 0;
  std::vector<SuiteCase> cases;
};

struct VerificationReport {
  RunConfig config;
  std::vector<SuiteResult> suites; // sorted by suite name
  bool pass = false;
};

/// All suite names, in execution (dependency) order.
std::vector<std::string> all_suite_names();

/// Parse and run the requested suites. Configuration errors throw ParseError;
/// domain violations inside a suite mark it failed instead of throwing.
VerificationReport run(const RunConfig& config);

std::string render_text(const VerificationReport& report);
/// Deterministic serialization: no timings, fixed key order, schema_version 1.
std::string render_json(const VerificationReport& report);

std::string catalog_list_text();

/// Omega values for a config against an algebra: either the explicit vector or
/// `count` seeded draws rejected-and-redrawn until they pass the domain check.
std::vector<Vector> omega_list(const RunConfig& config, const LieAlgebra& algebra);

/// One omega coordinate vector from coords ("0.1,0.2+1i,...") or a linear
/// combination of basis labels ("0.3*H + 1.2*E").
Vector parse_omega_vector(const std::string& text, const LieAlgebra& algebra);

} // namespace dynr

#endif
