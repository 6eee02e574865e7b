// dynr: verify the canonical dynamical r-matrix claims from the command line.
// Thin front end over the C API in dynr.h.
#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dynr.h"

namespace {

int run_config(const nlohmann::ordered_json& cfg) {
  char* output = nullptr;
  int pass = 0;
  dynr_status st = dynr_run(cfg.dump().c_str(), &output, &pass);
  if (st != DYNR_OK) {
    std::fprintf(stderr, "error (%s): %s\n", dynr_status_name(st), dynr_last_error());
    return st == DYNR_E_PARSE ? 2 : 1;
  }
  std::fputs(output, stdout);
  dynr_string_free(output);
  return pass ? 0 : 1;
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"canonical dynamical r-matrix verifier"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);

  std::string algebra = "sl2";
  std::string omega = "random:20:42";
  std::string method = "spectral";
  std::string output = "text";
  std::string suites;
  double tol = 1e-8;
  double delta_pole = 1e-6;
  int nodes = 64;
  unsigned long long seed = 42;
  int max_order = 10;

  auto* verify = app.add_subcommand("verify", "run verification suites on an algebra");
  verify->add_option("--algebra", algebra, "catalog name or algebra file path");
  verify->add_option("--omega", omega, "random:<count>:<seed>, coordinates, or label combination");
  verify->add_option("--method", method, "spectral|contour|taylor")
      ->check(CLI::IsMember({"spectral", "contour", "taylor"}));
  verify->add_option("--tol", tol, "residual tolerance for the Yang-Baxter suites");
  verify->add_option("--nodes", nodes, "starting quadrature node count");
  verify->add_option("--seed", seed, "seed for identity sweeps and equivariance directions");
  verify->add_option("--output", output, "text|json")->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--suites", suites,
                     "comma list of validate,rmatrix,cdybe,tensor,equivariance,realness,"
                     "identities,uniqueness");

  auto* identities = app.add_subcommand("identities", "check the combinatorial and derivative identities");
  identities->add_option("--max-order", max_order, "parameter bound for the exact identities (<= 10)");
  identities->add_option("--seed", seed, "seed for the analytic sample points");
  identities->add_option("--output", output, "text|json")->check(CLI::IsMember({"text", "json"}));

  auto* catalog = app.add_subcommand("catalog", "list the built-in algebras");

  auto* validate = app.add_subcommand("validate", "check the Lie algebra axioms");
  validate->add_option("--algebra", algebra, "catalog name or algebra file path");
  validate->add_option("--output", output, "text|json")->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  nlohmann::ordered_json cfg;
  cfg["algebra"] = algebra;
  cfg["omega"] = omega;
  cfg["method"] = method;
  cfg["output"] = output;
  cfg["seed"] = seed;
  cfg["max_order"] = max_order;
  cfg["tol_residual"] = tol;
  cfg["delta_pole"] = delta_pole;
  cfg["nodes"] = nodes;

  if (catalog->parsed()) {
    char* text = nullptr;
    dynr_status st = dynr_catalog_list(&text);
    if (st != DYNR_OK) {
      std::fprintf(stderr, "error: %s\n", dynr_last_error());
      return 2;
    }
    std::fputs(text, stdout);
    dynr_string_free(text);
    return 0;
  }
  if (identities->parsed()) {
    cfg["suites"] = std::vector<std::string>{"identities"};
    return run_config(cfg);
  }
  if (validate->parsed()) {
    cfg["suites"] = std::vector<std::string>{"validate"};
    return run_config(cfg);
  }
  if (!suites.empty()) cfg["suites"] = split_csv(suites);
  return run_config(cfg);
}
