#include "dynr/verify.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cmath>
#include <map>
#include <sstream>

#include <json.hpp>

#include "dynr/bernoulli.hpp"
#include "dynr/identities.hpp"
#include "dynr/random.hpp"
#include "dynr/ybe.hpp"

namespace dynr {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr double TOL_ANTISYM = 1e-10;
constexpr double TOL_TENSOR = 1e-7;
constexpr double TOL_METHOD_CONTOUR = 1e-6;
constexpr double TOL_METHOD_TAYLOR = 1e-10;
constexpr double TOL_EQUIVAR_FD = 1e-5;
constexpr double TOL_REALNESS = 1e-10;

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  }
};

void add_case(SuiteResult& r, const std::string& label, double residual, double tol) {
  SuiteCase c;
  c.label = label;
  c.residual = residual;
  c.tolerance = tol;
  c.pass = residual <= tol;
  r.max_residual = std::max(r.max_residual, residual);
  r.cases.push_back(std::move(c));
}

void finish(SuiteResult& r) {
  r.pass = r.error.empty();
  for (const auto& c : r.cases) r.pass = r.pass && c.pass;
}

SuiteResult suite_validate(const LieAlgebra& a, double tol_exact, double tol_rank) {
  SuiteResult r;
  r.name = "validate";
  r.tolerance = tol_exact;
  ValidationReport rep = validate(a);
  add_case(r, "antisymmetry", rep.antisymmetry, tol_exact);
  add_case(r, "jacobi", rep.jacobi, tol_exact);
  add_case(r, "form_symmetry", rep.form_symmetry, tol_exact);
  add_case(r, "invariance", rep.invariance, tol_exact);
  add_case(r, "form_nondegenerate", rep.det_form_abs > tol_rank ? 0.0 : 1.0, 0.0);
  finish(r);
  return r;
}

SuiteResult suite_rmatrix(const LieAlgebra& a, const std::vector<Vector>& omegas, RMethod method,
                          int nodes) {
  SuiteResult r;
  r.name = "rmatrix";
  r.tolerance = TOL_ANTISYM;
  for (size_t t = 0; t < omegas.size(); ++t) {
    const Vector& w = omegas[t];
    RMatrixEval ev = canonical_r(a, w, method, nodes);
    std::string tag = "[" + std::to_string(t) + "]";
    Matrix anti = transpose_wrt_form(a, ev.R) + ev.R;
    add_case(r, "antisymmetry" + tag, anti.cwiseAbs().maxCoeff(), TOL_ANTISYM);
    Matrix rho_anti = ev.rho + ev.rho.transpose();
    add_case(r, "rho_antisymmetry" + tag, rho_anti.cwiseAbs().maxCoeff(), TOL_ANTISYM);
    double commute = 0;
    for (const auto& cl : ev.spectral.clusters)
      commute = std::max(commute, (ev.R * cl.projector - cl.projector * ev.R).cwiseAbs().maxCoeff());
    add_case(r, "projector_commute" + tag, commute, TOL_RESIDUAL);
    Matrix Rc = canonical_r(a, w, RMethod::contour, nodes).R;
    add_case(r, "agree_contour" + tag, (ev.R - Rc).cwiseAbs().maxCoeff(), TOL_METHOD_CONTOUR);
    if (spectral_radius(ad(a, w)) < SERIES_RADIUS) {
      Matrix Rt = canonical_r(a, w, RMethod::taylor).R;
      add_case(r, "agree_taylor" + tag, (ev.R - Rt).cwiseAbs().maxCoeff(), TOL_METHOD_TAYLOR);
    }
  }
  finish(r);
  return r;
}

SuiteResult suite_cdybe(const LieAlgebra& a, const std::vector<Vector>& omegas, RMethod method,
                        double tol, int nodes) {
  SuiteResult r;
  r.name = "cdybe";
  r.tolerance = tol;
  for (size_t t = 0; t < omegas.size(); ++t) {
    CdybeReport rep = cdybe_residual(a, omegas[t], method, canonical_fun(), nodes);
    add_case(r, "cdybe[" + std::to_string(t) + "]", rep.overall, tol);
  }
  finish(r);
  return r;
}

SuiteResult suite_tensor(const LieAlgebra& a, const std::vector<Vector>& omegas, RMethod method,
                         double op_tol, int nodes) {
  SuiteResult r;
  r.name = "tensor";
  r.tolerance = TOL_TENSOR;
  for (size_t t = 0; t < omegas.size(); ++t) {
    double tens = mcdybe_tensor_residual(a, omegas[t], method, canonical_fun(), nodes);
    add_case(r, "tensor[" + std::to_string(t) + "]", tens, TOL_TENSOR);
    CdybeReport rep = cdybe_residual(a, omegas[t], method, canonical_fun(), nodes);
    bool agree = (tens <= TOL_TENSOR) == (rep.overall <= op_tol);
    add_case(r, "verdict_agreement[" + std::to_string(t) + "]", agree ? 0.0 : 1.0, 0.0);
  }
  finish(r);
  return r;
}

SuiteResult suite_equivariance(const LieAlgebra& a, const std::vector<Vector>& omegas,
                               RMethod method, double tol, uint64_t seed, int nodes) {
  SuiteResult r;
  r.name = "equivariance";
  r.tolerance = tol;
  RandomStream rng(seed ^ 0x5deece66dULL); // independent S stream
  for (size_t t = 0; t < omegas.size(); ++t) {
    Vector s = rng.vector_uniform(a.dim, !a.real_form);
    double res = equivariance_residual(a, omegas[t], s, method, nodes);
    add_case(r, "equivariance[" + std::to_string(t) + "]", res, tol);
    Vector dir = bracket(a, s, omegas[t]);
    Matrix analytic = directional_derivative(a, omegas[t], dir, DerivMethod::frechet, nodes);
    Matrix numeric = directional_derivative(a, omegas[t], dir, DerivMethod::fd);
    add_case(r, "frechet_vs_fd[" + std::to_string(t) + "]", (analytic - numeric).norm(),
             TOL_EQUIVAR_FD);
  }
  finish(r);
  return r;
}

SuiteResult suite_realness(const LieAlgebra& a, const std::vector<Vector>& omegas) {
  SuiteResult r;
  r.name = "realness";
  r.tolerance = TOL_REALNESS;
  if (!a.real_form) {
    r.error = "realness suite needs a real algebra (try sl2_real)";
    finish(r);
    return r;
  }
  for (size_t t = 0; t < omegas.size(); ++t) {
    double worst = 0;
    for (int j = 0; j < a.dim; ++j) {
      Vector x = Vector::Zero(a.dim);
      x(j) = 1.0;
      worst = std::max(worst, realness_check(a, omegas[t], x));
    }
    add_case(r, "realness[" + std::to_string(t) + "]", worst, TOL_REALNESS);
  }
  finish(r);
  return r;
}

SuiteResult suite_identities(int max_order, uint64_t seed) {
  SuiteResult r;
  r.name = "identities";
  r.tolerance = TOL_IDENTITY;
  auto cases = identity_sweep(max_order, seed);
  std::map<std::string, std::pair<int, double>> agg; // name -> (count, max residual)
  std::map<std::string, double> tol;
  for (const auto& c : cases) {
    auto& e = agg[c.name];
    e.first += 1;
    e.second = std::max(e.second, c.residual);
    tol[c.name] = c.tol;
    if (!c.pass) {
      std::ostringstream lab;
      lab << c.name << " FAIL tuple(k=" << c.k << ",l=" << c.l;
      if (c.m >= 0) lab << ",m=" << c.m;
      if (c.n >= 0) lab << ",n=" << c.n;
      lab << ")";
      add_case(r, lab.str(), c.residual, c.tol);
    }
  }
  for (const auto& [name, e] : agg) {
    add_case(r, name + " (" + std::to_string(e.first) + " cases)", e.second, tol[name]);
  }
  finish(r);
  return r;
}

SuiteResult suite_uniqueness() {
  SuiteResult r;
  r.name = "uniqueness";
  r.tolerance = 0;
  auto a = ode_series_solve(11);
  for (int m = 1; m <= 11; ++m) {
    Rational expect = (m % 2 == 1) ? bernoulli(m + 1) / Rational::factorial(m + 1) : Rational(0);
    bool equal = a[static_cast<size_t>(m - 1)] == expect;
    add_case(r, "a" + std::to_string(m) + " = " + expect.to_string(), equal ? 0.0 : 1.0, 0.0);
  }
  finish(r);
  return r;
}

} // namespace

std::vector<std::string> all_suite_names() {
  return {"validate", "rmatrix", "cdybe", "tensor", "equivariance", "realness", "identities",
          "uniqueness"};
}

Vector parse_omega_vector(const std::string& text, const LieAlgebra& a) {
  // label combination if any basis label appears as a token
  bool combo = text.find('*') != std::string::npos;
  if (!combo) {
    for (const auto& lab : a.labels) {
      if (text.find(lab) != std::string::npos) {
        combo = true;
        break;
      }
    }
  }
  Vector v = Vector::Zero(a.dim);
  if (!combo) {
    std::vector<std::string> toks;
    std::string cur;
    for (char ch : text) {
      if (ch == ',') {
        toks.push_back(cur);
        cur.clear();
      } else if (!std::isspace(static_cast<unsigned char>(ch))) {
        cur += ch;
      }
    }
    toks.push_back(cur);
    if (static_cast<int>(toks.size()) != a.dim)
      throw ParseError("omega has " + std::to_string(toks.size()) + " coordinates, expected " +
                       std::to_string(a.dim));
    for (int i = 0; i < a.dim; ++i) v(i) = parse_scalar(toks[static_cast<size_t>(i)]).value;
    return v;
  }
  // terms: [coeff *] label, separated by top-level + or -
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  size_t pos = 0;
  while (pos < s.size()) {
    double sign = 1.0;
    while (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
      if (s[pos] == '-') sign = -sign;
      ++pos;
    }
    size_t end = pos;
    while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
    // a sign inside scientific notation (digit, then e/E) does not split terms
    while (end < s.size() && end >= pos + 2 && (s[end - 1] == 'e' || s[end - 1] == 'E') &&
           (std::isdigit(static_cast<unsigned char>(s[end - 2])) || s[end - 2] == '.')) {
      ++end;
      while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
    }
    std::string term = s.substr(pos, end - pos);
    pos = end;
    if (term.empty()) throw ParseError("empty term in omega expression");
    cplx coeff(1.0, 0.0);
    std::string label = term;
    if (auto star = term.find('*'); star != std::string::npos) {
      coeff = parse_scalar(term.substr(0, star)).value;
      label = term.substr(star + 1);
    }
    auto it = std::find(a.labels.begin(), a.labels.end(), label);
    if (it == a.labels.end())
      throw ParseError("unknown basis label '" + label + "' in omega expression");
    v(static_cast<int>(it - a.labels.begin())) += sign * coeff;
  }
  return v;
}

std::vector<Vector> omega_list(const RunConfig& config, const LieAlgebra& a) {
  const std::string& text = config.omega;
  if (text.rfind("random:", 0) == 0) {
    size_t c1 = text.find(':');
    size_t c2 = text.find(':', c1 + 1);
    if (c2 == std::string::npos) throw ParseError("omega must be random:<count>:<seed>");
    int count = 0;
    uint64_t seed = 0;
    try {
      count = std::stoi(text.substr(c1 + 1, c2 - c1 - 1));
      seed = std::stoull(text.substr(c2 + 1));
    } catch (const std::logic_error&) {
      throw ParseError("omega must be random:<count>:<seed>");
    }
    if (count < 1) throw ParseError("omega random count must be positive");
    RandomStream rng(seed);
    std::vector<Vector> out;
    out.reserve(static_cast<size_t>(count));
    int attempts = 0;
    while (static_cast<int>(out.size()) < count) {
      if (++attempts > 1000 * count)
        throw DomainError("omega sampling: admissible draws too rare at this delta_pole");
      Vector w = rng.vector_uniform(a.dim, !a.real_form);
      if (domain_check(a, w, config.delta_pole)) out.push_back(std::move(w)); // rejected draws are redrawn
    }
    return out;
  }
  return {parse_omega_vector(text, a)};
}

VerificationReport run(const RunConfig& config) {
  VerificationReport report;
  report.config = config;
  LieAlgebra a;
  bool from_file = config.algebra.find('.') != std::string::npos ||
                   config.algebra.find('/') != std::string::npos;
  a = from_file ? algebra_from_file(config.algebra) : catalog(config.algebra);
  RMethod method = rmethod_from_name(config.method);

  std::vector<std::string> wanted = config.suites;
  auto known = all_suite_names();
  if (wanted.empty()) {
    wanted = known;
    if (!a.real_form) wanted.erase(std::remove(wanted.begin(), wanted.end(), "realness"), wanted.end());
  }
  for (const auto& s : wanted)
    if (std::find(known.begin(), known.end(), s) == known.end())
      throw ParseError("unknown suite '" + s + "'");

  bool needs_omega = false;
  for (const auto& s : wanted)
    if (s != "validate" && s != "identities" && s != "uniqueness") needs_omega = true;
  std::vector<Vector> omegas;
  if (needs_omega) omegas = omega_list(config, a);

  auto run_suite = [&](const std::string& name) -> SuiteResult {
    Timer timer;
    SuiteResult r;
    try {
      if (name == "validate") r = suite_validate(a, config.tol_exact, config.tol_rank);
      else if (name == "rmatrix") r = suite_rmatrix(a, omegas, method, config.nodes);
      else if (name == "cdybe") r = suite_cdybe(a, omegas, method, config.tol_residual, config.nodes);
      else if (name == "tensor") r = suite_tensor(a, omegas, method, config.tol_residual, config.nodes);
      else if (name == "equivariance")
        r = suite_equivariance(a, omegas, method, config.tol_residual, config.seed, config.nodes);
      else if (name == "realness") r = suite_realness(a, omegas);
      else if (name == "identities") r = suite_identities(config.max_order, config.seed);
      else if (name == "uniqueness") r = suite_uniqueness();
    } catch (const Error& e) {
      r.name = name;
      r.error = e.what();
      r.pass = false;
    }
    r.wall_ms = timer.ms();
    return r;
  };

  // dependency order: validate first, everything else after
  std::vector<std::string> order = known;
  for (const auto& name : order) {
    if (std::find(wanted.begin(), wanted.end(), name) == wanted.end()) continue;
    report.suites.push_back(run_suite(name));
  }
  std::sort(report.suites.begin(), report.suites.end(),
            [](const SuiteResult& l, const SuiteResult& r) { return l.name < r.name; });
  report.pass = !report.suites.empty();
  for (const auto& s : report.suites) report.pass = report.pass && s.pass;
  return report;
}

std::string render_text(const VerificationReport& report) {
  std::ostringstream out;
  out << "algebra: " << report.config.algebra << "   method: " << report.config.method
      << "   omega: " << report.config.omega << "   seed: " << report.config.seed << "\n";
  auto sci = [](double v) {
    std::ostringstream o;
    o.precision(3);
    o << std::scientific << v;
    return o.str();
  };
  for (const auto& s : report.suites) {
    out << (s.pass ? "PASS" : "FAIL") << "  " << s.name;
    if (!s.error.empty()) {
      out << "  error: " << s.error << "\n";
      continue;
    }
    std::ostringstream ms;
    ms.precision(1);
    ms << std::fixed << s.wall_ms;
    out << "  max_residual=" << sci(s.max_residual) << "  cases=" << s.cases.size()
        << "  wall_ms=" << ms.str() << "\n";
    for (const auto& c : s.cases)
      if (!c.pass)
        out << "      FAIL " << c.label << "  " << sci(c.residual) << " > " << sci(c.tolerance)
            << "\n";
  }
  out << (report.pass ? "OVERALL PASS" : "OVERALL FAIL") << "\n";
  return out.str();
}

std::string render_json(const VerificationReport& report) {
  ordered_json j;
  j["schema_version"] = 1;
  ordered_json cfg;
  cfg["algebra"] = report.config.algebra;
  cfg["omega"] = report.config.omega;
  cfg["method"] = report.config.method;
  cfg["seed"] = report.config.seed;
  cfg["max_order"] = report.config.max_order;
  ordered_json tols;
  tols["tol_residual"] = report.config.tol_residual;
  tols["delta_pole"] = report.config.delta_pole;
  tols["tol_exact"] = report.config.tol_exact;
  tols["tol_rank"] = report.config.tol_rank;
  tols["nodes"] = report.config.nodes;
  cfg["tolerances"] = tols;
  ordered_json suites = ordered_json::array();
  for (const auto& s : report.suites) {
    ordered_json js;
    js["name"] = s.name;
    js["pass"] = s.pass;
    js["max_residual"] = s.max_residual;
    js["tolerance"] = s.tolerance;
    if (!s.error.empty()) js["error"] = s.error;
    ordered_json cases = ordered_json::array();
    for (const auto& c : s.cases) {
      ordered_json jc;
      jc["label"] = c.label;
      jc["residual"] = c.residual;
      jc["tolerance"] = c.tolerance;
      jc["pass"] = c.pass;
      cases.push_back(std::move(jc));
    }
    js["cases"] = std::move(cases);
    suites.push_back(std::move(js));
  }
  j["config"] = std::move(cfg);
  j["suites"] = std::move(suites);
  j["pass"] = report.pass;
  return j.dump(2) + "\n";
}

std::string catalog_list_text() {
  std::ostringstream out;
  out << "built-in algebras:\n";
  out << "  abelian(n)        dim n    basis T1..Tn           form: identity\n";
  out << "  sl2               dim 3    basis H,E,F            form: Killing, <H,H>=8, <E,F>=4\n";
  out << "  sl2_real          dim 3    basis H,E,F            the real form of sl2\n";
  out << "  oscillator        dim 4    basis N,Ap,Am,C        form: <N,C>=<Ap,Am>=1\n";
  out << "  direct_sum(a,b)   dim a+b  block sum of the summands' brackets and forms\n";
  return out.str();
}

} // namespace dynr
