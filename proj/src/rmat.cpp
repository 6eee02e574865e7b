#include "dynr/rmat.hpp"

#include <cmath>

namespace dynr {

namespace {

constexpr double LIMIT_TRIGGER_REL = 1e-8;

void require_diagonalizable(const SpectralDecomposition& sd) {
  for (const auto& c : sd.clusters)
    if (c.index != 1)
      throw NotDiagonalizableError("ad omega has a nontrivial Jordan block (index > 1)");
}

} // namespace

RMethod rmethod_from_name(const std::string& name) {
  if (name == "spectral") return RMethod::spectral;
  if (name == "contour") return RMethod::contour;
  if (name == "taylor") return RMethod::taylor;
  throw ParseError("unknown method '" + name + "' (expected spectral|contour|taylor)");
}

std::string rmethod_name(RMethod m) {
  switch (m) {
    case RMethod::spectral: return "spectral";
    case RMethod::contour: return "contour";
    case RMethod::taylor: return "taylor";
  }
  return "?";
}

bool domain_check(const LieAlgebra& a, const Vector& omega, double delta) {
  Matrix adw = ad(a, omega);
  for (cplx ev : eigenvalues(adw))
    if (pole_distance(ev) <= delta) return false;
  return true;
}

RMatrixEval canonical_r_with(const LieAlgebra& a, const HoloFun& fun, const Vector& omega,
                             RMethod method, int nodes) {
  if (!domain_check(a, omega))
    throw DomainError("omega outside the admissible domain: ad spectrum meets 2*pi*i*Z^*");
  RMatrixEval ev;
  ev.omega = omega;
  Matrix adw = ad(a, omega);
  ev.spectral = spectral_decompose(adw);
  switch (method) {
    case RMethod::spectral:
      if (!fun.jet) throw DomainError("spectral back-end needs derivative jets of f");
      ev.R = apply_fun_spectral(fun.jet, ev.spectral);
      break;
    case RMethod::contour:
      ev.R = apply_fun_contour(fun.eval, adw, default_contour(adw, std::max(16, nodes)));
      break;
    case RMethod::taylor:
      if (fun.taylor.empty()) throw RadiusError("taylor back-end needs a series at 0");
      ev.R = apply_fun_taylor(fun.taylor, adw);
      break;
  }
  ev.rho = a.form * ev.R;
  return ev;
}

RMatrixEval canonical_r(const LieAlgebra& a, const Vector& omega, RMethod method, int nodes) {
  return canonical_r_with(a, canonical_fun(), omega, method, nodes);
}

double fd_step(const Vector& omega, const Vector& s) {
  return 1e-6 * (1.0 + omega.norm()) / (1.0 + s.norm());
}

Matrix directional_derivative(const LieAlgebra& a, const Vector& omega, const Vector& s,
                              DerivMethod method, int nodes) {
  if (method == DerivMethod::frechet) {
    Matrix adw = ad(a, omega);
    if (!domain_check(a, omega)) throw DomainError("omega outside the admissible domain");
    return frechet([](cplx z) { return f_eval(z); }, adw, ad(a, s), nodes);
  }
  double h = fd_step(omega, s);
  Vector op = omega + h * s;
  Vector om = omega - h * s;
  if (!domain_check(a, op) || !domain_check(a, om))
    throw DomainError("finite-difference stencil leaves the admissible domain");
  Matrix Rp = canonical_r(a, op).R;
  Matrix Rm = canonical_r(a, om).R;
  return (Rp - Rm) / (2 * h);
}

std::vector<Matrix> basis_directional_derivatives(const LieAlgebra& a, const Vector& omega,
                                                  const HoloFun& fun, int nodes) {
  Matrix adw = ad(a, omega);
  std::vector<Matrix> dirs;
  dirs.reserve(static_cast<size_t>(a.dim));
  for (int j = 0; j < a.dim; ++j) dirs.push_back(ad_basis(a, j));
  return frechet_multi(fun.eval, adw, dirs, nodes);
}

Vector gradient_pairing(const LieAlgebra& a, const Vector& omega, const Vector& x, const Vector& y) {
  if (x.size() != a.dim || y.size() != a.dim)
    throw DimensionError("gradient_pairing: element length != algebra dimension");
  if (!domain_check(a, omega)) throw DomainError("omega outside the admissible domain");
  auto derivs = basis_directional_derivatives(a, omega);
  Vector s(a.dim);
  for (int j = 0; j < a.dim; ++j) s(j) = a.pair(x, derivs[static_cast<size_t>(j)] * y);
  return dual_basis(a).D * s; // value = sum_j s_j T^j
}

cplx eigenvalue_of(const LieAlgebra& a, const Matrix& adw, const Vector& x) {
  if (x.norm() == 0.0) throw NotEigenvectorError("zero vector is not an eigenvector");
  Vector w = adw * x;
  cplx lambda = x.dot(w) / x.dot(x); // Euclidean Rayleigh quotient
  double res = (w - lambda * x).norm() / x.norm();
  if (res > TOL_RESIDUAL * (1.0 + adw.norm()))
    throw NotEigenvectorError("vector fails the ad-omega eigenvector residual test");
  (void)a;
  return lambda;
}

Vector lemma3_oracle(const LieAlgebra& a, const Vector& omega, const Vector& x, const Vector& y) {
  Matrix adw = ad(a, omega);
  SpectralDecomposition sd = spectral_decompose(adw);
  require_diagonalizable(sd);
  cplx l = eigenvalue_of(a, adw, x);
  cplx m = eigenvalue_of(a, adw, y);
  Vector br = bracket(a, x, y);
  double scale = 1.0 + std::abs(l) + std::abs(m);
  if (std::abs(l + m) <= LIMIT_TRIGGER_REL * scale) {
    return Vector(-f_jet(m, 1).deriv(1) * br);
  }
  return Vector(-((f_eval(l) + f_eval(m)) / (l + m)) * br);
}

Vector lemma4_oracle(const LieAlgebra& a, const Vector& omega, const Vector& x, const Vector& y) {
  Matrix adw = ad(a, omega);
  SpectralDecomposition sd = spectral_decompose(adw);
  require_diagonalizable(sd);
  cplx l = eigenvalue_of(a, adw, x);
  cplx m = eigenvalue_of(a, adw, y);
  Vector br = bracket(a, x, y);
  double scale = 1.0 + std::abs(l) + std::abs(m);
  if (std::abs(l) <= LIMIT_TRIGGER_REL * scale) {
    return Vector(f_jet(m, 1).deriv(1) * br);
  }
  return Vector(((f_eval(l + m) - f_eval(m)) / l) * br);
}

double realness_check(const LieAlgebra& a, const Vector& omega, const Vector& x) {
  for (int j = 0; j < a.dim; ++j) {
    if (omega(j).imag() != 0.0 || x(j).imag() != 0.0)
      throw DomainError("realness_check: omega and X must be real");
    for (int k = 0; k < a.dim; ++k) {
      if (a.form(j, k).imag() != 0.0)
        throw DomainError("realness_check: algebra must have a real form");
      for (int l = 0; l < a.dim; ++l)
        if (a.f(j, k, l).imag() != 0.0)
          throw DomainError("realness_check: algebra must have real structure constants");
    }
  }
  RMatrixEval ev = canonical_r(a, omega, RMethod::spectral);
  Vector v = ev.R * x;
  double worst = 0;
  for (int j = 0; j < a.dim; ++j) worst = std::max(worst, std::abs(v(j).imag()));
  return worst;
}

} // namespace dynr
