#include "dynr/ybe.hpp"

#include <cmath>

namespace dynr {

namespace {

struct EvalContext {
  RMatrixEval ev;
  std::vector<Matrix> basis_derivs; // (nabla_{T_j} R)(omega)
  Matrix dual;                      // B^{-1}
};

EvalContext make_context(const LieAlgebra& a, const Vector& omega, RMethod method,
                         const HoloFun& fun, int nodes) {
  EvalContext ctx;
  ctx.ev = canonical_r_with(a, fun, omega, method, nodes);
  ctx.basis_derivs = basis_directional_derivatives(a, omega, fun, nodes);
  ctx.dual = dual_basis(a).D;
  return ctx;
}

// <X, (grad R)(omega) Y> from precomputed basis derivatives
Vector gradient_term(const LieAlgebra& a, const EvalContext& ctx, const Vector& x,
                     const Vector& y) {
  Vector s(a.dim);
  for (int j = 0; j < a.dim; ++j) s(j) = a.pair(x, ctx.basis_derivs[static_cast<size_t>(j)] * y);
  return ctx.dual * s;
}

} // namespace

double ThreeTensor::max_abs() const {
  double worst = 0;
  for (const auto& v : c) worst = std::max(worst, std::abs(v));
  return worst;
}

ThreeTensor phi_tensor(const LieAlgebra& a) {
  ThreeTensor phi(a.dim);
  for (int j = 0; j < a.dim; ++j)
    for (int k = 0; k < a.dim; ++k)
      for (int c = 0; c < a.dim; ++c) {
        cplx acc(0);
        for (int l = 0; l < a.dim; ++l) acc += a.f(j, k, l) * a.form(l, c);
        phi.at(j, k, c) = -0.25 * acc;
      }
  return phi;
}

double phi_antisymmetry_residual(const LieAlgebra& a) {
  const int n = a.dim;
  ThreeTensor phi = phi_tensor(a);
  Matrix D = dual_basis(a).D;
  ThreeTensor up(n); // all indices raised
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      for (int r = 0; r < n; ++r) {
        cplx acc(0);
        for (int j = 0; j < n; ++j)
          for (int k = 0; k < n; ++k)
            for (int l = 0; l < n; ++l) acc += D(p, j) * D(q, k) * D(r, l) * phi.get(j, k, l);
        up.at(p, q, r) = acc;
      }
  double worst = 0;
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      for (int r = 0; r < n; ++r) {
        cplx v = up.get(p, q, r);
        worst = std::max(worst, std::abs(v + up.get(q, p, r)));
        worst = std::max(worst, std::abs(v + up.get(p, r, q)));
        worst = std::max(worst, std::abs(v - up.get(q, r, p)));
        worst = std::max(worst, std::abs(v - up.get(r, p, q)));
        worst = std::max(worst, std::abs(v + up.get(r, q, p)));
      }
  return worst;
}

double phi_invariance_residual(const LieAlgebra& a) {
  const int n = a.dim;
  ThreeTensor phi = phi_tensor(a);
  double worst = 0;
  // covariant legs transform with -f_mj^p phi_p.. summed over the three slots
  for (int m = 0; m < n; ++m) {
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          cplx acc(0);
          for (int p = 0; p < n; ++p) {
            acc += a.f(m, j, p) * phi.get(p, k, l);
            acc += a.f(m, k, p) * phi.get(j, p, l);
            acc += a.f(m, l, p) * phi.get(j, k, p);
          }
          worst = std::max(worst, std::abs(acc));
        }
  }
  return worst;
}

CdybeReport cdybe_residual(const LieAlgebra& a, const Vector& omega, RMethod method,
                           const HoloFun& fun, int nodes) {
  EvalContext ctx = make_context(a, omega, method, fun, nodes);
  const int n = a.dim;
  const Matrix& R = ctx.ev.R;
  CdybeReport rep;
  rep.method = rmethod_name(method);
  rep.pair_residuals = Eigen::MatrixXd::Zero(n, n);
  for (int p = 0; p < n; ++p) {
    Vector x = Vector::Zero(n);
    x(p) = 1.0;
    Vector rx = R.col(p);
    for (int q = 0; q < n; ++q) {
      Vector y = Vector::Zero(n);
      y(q) = 1.0;
      Vector ry = R.col(q);
      Vector lhs = 0.25 * bracket(a, x, y);
      lhs += bracket(a, rx, ry);
      lhs -= R * (bracket(a, rx, y) + bracket(a, x, ry));
      lhs += gradient_term(a, ctx, x, y);
      lhs += ctx.basis_derivs[static_cast<size_t>(q)].col(p); // (nabla_Y R) X
      lhs -= ctx.basis_derivs[static_cast<size_t>(p)].col(q); // (nabla_X R) Y
      rep.pair_residuals(p, q) = lhs.cwiseAbs().maxCoeff();
    }
  }
  rep.overall = rep.pair_residuals.maxCoeff();
  return rep;
}

double mcdybe_tensor_residual(const LieAlgebra& a, const Vector& omega, RMethod method,
                              const HoloFun& fun, int nodes) {
  EvalContext ctx = make_context(a, omega, method, fun, nodes);
  const int n = a.dim;
  const Matrix& rho = ctx.ev.rho;
  const Matrix& D = ctx.dual;

  // structure constants with both upper slots raised: g[j][l][d] for [T^j, T^l]
  std::vector<cplx> g(static_cast<size_t>(n) * n * n, cplx(0));
  auto gref = [&](int j, int l, int d) -> cplx& {
    return g[(static_cast<size_t>(j) * n + l) * n + d];
  };
  for (int j = 0; j < n; ++j)
    for (int l = 0; l < n; ++l)
      for (int d = 0; d < n; ++d) {
        cplx acc(0);
        for (int aa = 0; aa < n; ++aa)
          for (int bb = 0; bb < n; ++bb) {
            cplx dd = D(j, aa) * D(l, bb);
            if (dd == cplx(0)) continue;
            for (int cc = 0; cc < n; ++cc) acc += dd * a.f(aa, bb, cc) * a.form(cc, d);
          }
        gref(j, l, d) = acc;
      }

  // derivative of rho along the dual directions T^j
  std::vector<Matrix> Q(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) {
    Matrix dj = Matrix::Zero(n, n);
    for (int m = 0; m < n; ++m) dj += D(j, m) * ctx.basis_derivs[static_cast<size_t>(m)];
    Q[static_cast<size_t>(j)] = a.form * dj;
  }

  ThreeTensor t(n);
  for (int j = 0; j < n; ++j)
    for (int l = 0; l < n; ++l)
      for (int d = 0; d < n; ++d) {
        cplx gjld = gref(j, l, d);
        if (gjld == cplx(0)) continue;
        for (int k = 0; k < n; ++k)
          for (int m = 0; m < n; ++m) {
            cplx w = gjld * rho(j, k) * rho(l, m);
            t.at(d, k, m) += w; // [r12, r13]
          }
      }
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l)
      for (int d = 0; d < n; ++d) {
        cplx gkld = gref(k, l, d);
        if (gkld == cplx(0)) continue;
        for (int j = 0; j < n; ++j)
          for (int m = 0; m < n; ++m) t.at(j, d, m) += gkld * rho(j, k) * rho(l, m); // [r12, r23]
      }
  for (int k = 0; k < n; ++k)
    for (int m = 0; m < n; ++m)
      for (int d = 0; d < n; ++d) {
        cplx gkmd = gref(k, m, d);
        if (gkmd == cplx(0)) continue;
        for (int j = 0; j < n; ++j)
          for (int l = 0; l < n; ++l) t.at(j, l, d) += gkmd * rho(j, k) * rho(l, m); // [r13, r23]
      }

  // + T_j^1 d r23 - T_j^2 d r13 + T_j^3 d r12, T_j lowered into the spare leg
  for (int j = 0; j < n; ++j) {
    const Matrix& Qj = Q[static_cast<size_t>(j)];
    for (int d = 0; d < n; ++d) {
      cplx bjd = a.form(j, d);
      if (bjd == cplx(0)) continue;
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
          t.at(d, u, v) += bjd * Qj(u, v);
          t.at(u, d, v) -= bjd * Qj(u, v);
          t.at(u, v, d) += bjd * Qj(u, v);
        }
    }
  }

  ThreeTensor phi = phi_tensor(a);
  for (size_t i = 0; i < t.c.size(); ++i) t.c[i] -= phi.c[i];
  return t.max_abs();
}

double equivariance_residual(const LieAlgebra& a, const Vector& omega, const Vector& s,
                             RMethod method, int nodes) {
  RMatrixEval ev = canonical_r(a, omega, method, nodes);
  Vector dir = bracket(a, s, omega);
  Matrix lhs = frechet([](cplx z) { return f_eval(z); }, ad(a, omega), ad(a, dir), nodes);
  Matrix ads = ad(a, s);
  Matrix rhs = ads * ev.R - ev.R * ads;
  return (lhs - rhs).norm();
}

std::vector<LemmaTerm> lemma_term_decomposition(const LieAlgebra& a, const Vector& omega,
                                                const Vector& x, const Vector& y) {
  Matrix adw = ad(a, omega);
  SpectralDecomposition sd = spectral_decompose(adw);
  for (const auto& c : sd.clusters)
    if (c.index != 1)
      throw NotDiagonalizableError("lemma_term_decomposition needs diagonalizable ad omega");
  cplx l = eigenvalue_of(a, adw, x);
  cplx m = eigenvalue_of(a, adw, y);
  EvalContext ctx = make_context(a, omega, RMethod::spectral, canonical_fun(), QUAD_NODES_DEFAULT);
  const Matrix& R = ctx.ev.R;
  Vector rx = R * x;
  Vector ry = R * y;
  Vector br = bracket(a, x, y);
  double scale = 1.0 + std::abs(l) + std::abs(m);
  auto lim = [&](cplx z) { return std::abs(z) <= 1e-8 * scale; };
  cplx fl = f_eval(l), fm = f_eval(m), flm = f_eval(l + m);

  std::vector<LemmaTerm> terms;
  terms.push_back({"quarter_bracket", +1, Vector(0.25 * br), Vector(0.25 * br)});
  terms.push_back({"rr_bracket", +1, bracket(a, rx, ry), Vector(fl * fm * br)});
  terms.push_back({"r_bracket_left", -1, Vector(R * bracket(a, rx, y)), Vector(flm * fl * br)});
  terms.push_back({"r_bracket_right", -1, Vector(R * bracket(a, x, ry)), Vector(flm * fm * br)});
  cplx c5 = lim(l + m) ? -f_jet(m, 1).deriv(1) : -(fl + fm) / (l + m);
  terms.push_back({"gradient_pairing", +1, gradient_term(a, ctx, x, y), Vector(c5 * br)});
  // (nabla_Y R) X and (nabla_X R) Y by linearity from the basis derivatives
  Matrix dy = Matrix::Zero(a.dim, a.dim);
  Matrix dx = Matrix::Zero(a.dim, a.dim);
  for (int j = 0; j < a.dim; ++j) {
    dy += y(j) * ctx.basis_derivs[static_cast<size_t>(j)];
    dx += x(j) * ctx.basis_derivs[static_cast<size_t>(j)];
  }
  cplx c6 = lim(m) ? -f_jet(l, 1).deriv(1) : -(flm - fl) / m;
  terms.push_back({"nabla_y", +1, Vector(dy * x), Vector(c6 * br)});
  cplx c7 = lim(l) ? f_jet(m, 1).deriv(1) : (flm - fm) / l;
  terms.push_back({"nabla_x", -1, Vector(dx * y), Vector(c7 * br)});
  return terms;
}

} // namespace dynr
