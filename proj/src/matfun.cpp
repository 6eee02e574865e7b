#include "dynr/matfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace dynr {

namespace {

constexpr double TWO_PI = 6.283185307179586476925286766559;

// eigenvalue clouds of a defective eigenvalue have radius ~ eps^(1/nu); a
// second linkage pass at this multiple of the cluster tolerance keeps a
// rounded Jordan block (nu <= 3) in one cluster
constexpr double DEFECT_MERGE_FACTOR = 16.0;

struct Clusters {
  std::vector<cplx> center;
  std::vector<double> spread;
  std::vector<std::vector<int>> members;
};

Clusters link_clusters(const std::vector<cplx>& eig, double tol) {
  const int m = static_cast<int>(eig.size());
  std::vector<int> owner(m, -1);
  Clusters cl;
  for (int i = 0; i < m; ++i) {
    if (owner[i] >= 0) continue;
    // grow a single-linkage component from eigenvalue i
    std::vector<int> stack{i};
    owner[i] = static_cast<int>(cl.members.size());
    std::vector<int> comp;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (int v = 0; v < m; ++v) {
        if (owner[v] >= 0) continue;
        if (std::abs(eig[u] - eig[v]) <= tol) {
          owner[v] = owner[i];
          stack.push_back(v);
        }
      }
    }
    cplx c(0);
    for (int u : comp) c += eig[u];
    c /= static_cast<double>(comp.size());
    double spread = 0;
    for (int u : comp) spread = std::max(spread, std::abs(eig[u] - c));
    cl.center.push_back(c);
    cl.spread.push_back(spread);
    cl.members.push_back(std::move(comp));
  }
  return cl;
}

Matrix resolvent_at(const Matrix& T, cplx xi) {
  const auto n = T.rows();
  Matrix A = xi * Matrix::Identity(n, n) - T;
  Eigen::PartialPivLU<Matrix> lu(A);
  if (lu.rcond() < RESOLVENT_RCOND_MIN)
    throw SingularResolventError("resolvent numerically singular at a quadrature node");
  return lu.inverse();
}

// (1/2 pi i) \oint g(xi) dxi over a circle, trapezoid rule with N nodes
Matrix circle_integral(const std::function<Matrix(cplx)>& g, cplx center, double radius, int N) {
  Matrix acc;
  for (int j = 0; j < N; ++j) {
    double theta = TWO_PI * j / N;
    cplx dir = std::polar(radius, theta);
    Matrix gj = g(center + dir);
    Matrix term = gj * (dir / static_cast<double>(N));
    if (acc.size() == 0)
      acc = term;
    else
      acc += term;
  }
  return acc;
}

Matrix adaptive_circle_integral(const std::function<Matrix(cplx)>& g, cplx center, double radius,
                                int start_nodes, int max_nodes) {
  int N = std::max(16, start_nodes);
  Matrix prev = circle_integral(g, center, radius, N);
  while (N < max_nodes) {
    N *= 2;
    Matrix next = circle_integral(g, center, radius, N);
    if ((next - prev).norm() <= QUAD_TOL * std::max(1.0, next.norm())) return next;
    prev = std::move(next);
  }
  return prev;
}

} // namespace

std::vector<cplx> eigenvalues(const Matrix& T) {
  if (T.rows() != T.cols()) throw DimensionError("eigenvalues: matrix not square");
  Eigen::ComplexEigenSolver<Matrix> es(T, /*computeEigenvectors=*/false);
  if (es.info() != Eigen::Success) throw SingularResolventError("eigensolver failed to converge");
  std::vector<cplx> ev(static_cast<size_t>(T.rows()));
  for (int i = 0; i < T.rows(); ++i) ev[static_cast<size_t>(i)] = es.eigenvalues()(i);
  return ev;
}

double spectral_radius(const Matrix& T) {
  double r = 0;
  for (cplx ev : eigenvalues(T)) r = std::max(r, std::abs(ev));
  return r;
}

SpectralDecomposition spectral_decompose(const Matrix& T) {
  if (T.rows() != T.cols()) throw DimensionError("spectral_decompose: matrix not square");
  const int n = static_cast<int>(T.rows());
  SpectralDecomposition sd;
  sd.n = n;
  sd.scale = 1.0 + T.norm();
  auto eig = eigenvalues(T);

  const double tau = TOL_CLUSTER * sd.scale;
  Clusters cl = link_clusters(eig, tau);
  if (cl.center.size() > 1) {
    // second linkage pass absorbs defective-eigenvalue rounding clouds
    const double merge = DEFECT_MERGE_FACTOR * TOL_CLUSTER * sd.scale;
    Clusters coarse = link_clusters(cl.center, merge);
    if (coarse.center.size() < cl.center.size()) {
      Clusters merged;
      for (const auto& group : coarse.members) {
        std::vector<int> comp;
        for (int ci : group)
          comp.insert(comp.end(), cl.members[static_cast<size_t>(ci)].begin(),
                      cl.members[static_cast<size_t>(ci)].end());
        cplx c(0);
        for (int u : comp) c += eig[static_cast<size_t>(u)];
        c /= static_cast<double>(comp.size());
        double spread = 0;
        for (int u : comp) spread = std::max(spread, std::abs(eig[static_cast<size_t>(u)] - c));
        merged.center.push_back(c);
        merged.spread.push_back(spread);
        merged.members.push_back(std::move(comp));
      }
      cl = std::move(merged);
    }
  }

  const int nc = static_cast<int>(cl.center.size());
  for (int i = 0; i < nc; ++i) {
    double dmin = std::numeric_limits<double>::infinity();
    for (int j = 0; j < nc; ++j)
      if (j != i) dmin = std::min(dmin, std::abs(cl.center[static_cast<size_t>(i)] - cl.center[static_cast<size_t>(j)]));
    double radius;
    if (nc == 1) {
      radius = cl.spread[static_cast<size_t>(i)] + std::max(10 * tau, 0.05 * sd.scale);
    } else {
      radius = std::max(0.5 * dmin, 10 * tau);
      if (radius < cl.spread[static_cast<size_t>(i)] + 4 * tau)
        throw ClusterSeparationError("eigenvalue clusters too close to enclose in disjoint circles");
      for (int j = 0; j < nc; ++j) {
        if (j == i) continue;
        double gap = std::abs(cl.center[static_cast<size_t>(i)] - cl.center[static_cast<size_t>(j)]) -
                     cl.spread[static_cast<size_t>(j)];
        if (gap < radius + 4 * tau)
          throw ClusterSeparationError("eigenvalue clusters too close to enclose in disjoint circles");
      }
    }

    SpectralCluster c;
    c.lambda = cl.center[static_cast<size_t>(i)];
    c.projector = adaptive_circle_integral(
        [&](cplx xi) { return resolvent_at(T, xi); }, c.lambda, radius, QUAD_NODES_DEFAULT,
        QUAD_NODES_MAX);
    c.nilpotent = (T - c.lambda * Matrix::Identity(n, n)) * c.projector;
    double enorm = std::max(c.projector.norm(), 1e-300);
    Matrix p = c.nilpotent;
    int nu = -1;
    for (int k = 1; k <= n; ++k) {
      if (p.norm() <= TOL_SPECTRAL * enorm) {
        nu = k;
        break;
      }
      p = c.nilpotent * p;
    }
    if (nu < 0)
      throw ClusterSeparationError(
          "cluster nilpotent part fails to vanish: spectrum too ambiguous to assign an index");
    c.index = nu;
    sd.clusters.push_back(std::move(c));
  }
  return sd;
}

Matrix apply_fun_spectral(const JetFun& jets, const SpectralDecomposition& sd) {
  Matrix acc = Matrix::Zero(sd.n, sd.n);
  for (const auto& c : sd.clusters) {
    Jet j = jets(c.lambda, c.index - 1);
    Matrix p = c.projector;
    for (int k = 0; k < c.index; ++k) {
      acc += (j.deriv(k) / factorial_d(k)) * p;
      if (k + 1 < c.index) p = c.nilpotent * p;
    }
  }
  return acc;
}

Contour default_contour(const Matrix& T, int nodes) {
  auto eig = eigenvalues(T);
  cplx center(0);
  for (cplx ev : eig) center += ev;
  center /= static_cast<double>(eig.size());
  double base = 0;
  for (cplx ev : eig) base = std::max(base, std::abs(ev - center));
  for (double pad : {1.0, 0.5, 0.25, 0.1}) {
    double radius = base + pad;
    // every pole 2*pi*i*k must stay outside the disc with margin
    int kmax = static_cast<int>(std::ceil((std::abs(center) + radius) / TWO_PI)) + 1;
    bool ok = true;
    for (int k = -kmax; k <= kmax && ok; ++k) {
      if (k == 0) continue;
      if (std::abs(cplx(0, TWO_PI * k) - center) <= radius + 1e-3) ok = false;
    }
    if (ok) return Contour{center, radius, nodes};
  }
  throw PoleError("no admissible contour: spectrum reaches too close to the poles of f");
}

Matrix apply_fun_contour(const ScalarFun& f, const Matrix& T, const Contour& c) {
  if (T.rows() != T.cols()) throw DimensionError("apply_fun_contour: matrix not square");
  if (c.radius <= 0 || c.nodes < 16)
    throw DomainError("apply_fun_contour: contour needs radius > 0 and nodes >= 16");
  int cap = std::max(QUAD_NODES_MAX, c.nodes);
  return adaptive_circle_integral(
      [&](cplx xi) { return Matrix(f(xi) * resolvent_at(T, xi)); }, c.center, c.radius, c.nodes,
      cap);
}

Matrix apply_fun_taylor(const std::vector<cplx>& coeffs, const Matrix& T) {
  if (T.rows() != T.cols()) throw DimensionError("apply_fun_taylor: matrix not square");
  if (spectral_radius(T) >= SERIES_RADIUS)
    throw RadiusError("apply_fun_taylor: spectral radius >= SERIES_RADIUS");
  const auto n = T.rows();
  Matrix acc = Matrix::Zero(n, n);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc = T * acc;
    acc += *it * Matrix::Identity(n, n);
  }
  return acc;
}

std::vector<Matrix> frechet_multi(const ScalarFun& f, const Matrix& T,
                                  const std::vector<Matrix>& dirs, int start_nodes) {
  if (T.rows() != T.cols()) throw DimensionError("frechet: matrix not square");
  for (const auto& S : dirs)
    if (S.rows() != T.rows() || S.cols() != T.cols())
      throw DimensionError("frechet: direction shape mismatch");
  Contour c = default_contour(T, std::max(16, start_nodes));
  const auto n = T.rows();
  const size_t m = dirs.size();
  auto level = [&](int N) {
    std::vector<Matrix> acc(m, Matrix::Zero(n, n));
    for (int j = 0; j < N; ++j) {
      double theta = TWO_PI * j / N;
      cplx dir = std::polar(c.radius, theta);
      cplx xi = c.center + dir;
      Matrix rho = resolvent_at(T, xi);
      cplx w = f(xi) * dir / static_cast<double>(N);
      for (size_t s = 0; s < m; ++s) acc[s] += w * (rho * dirs[s] * rho);
    }
    return acc;
  };
  int N = c.nodes;
  auto prev = level(N);
  while (N < QUAD_NODES_MAX) {
    N *= 2;
    auto next = level(N);
    double diff = 0, scale = 1.0;
    for (size_t s = 0; s < m; ++s) {
      diff = std::max(diff, (next[s] - prev[s]).norm());
      scale = std::max(scale, next[s].norm());
    }
    if (diff <= QUAD_TOL * scale) return next;
    prev = std::move(next);
  }
  return prev;
}

Matrix frechet(const ScalarFun& f, const Matrix& T, const Matrix& S, int start_nodes) {
  return frechet_multi(f, T, {S}, start_nodes)[0];
}

} // namespace dynr
