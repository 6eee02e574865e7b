#ifndef DYNR_MATFUN_HPP
#define DYNR_MATFUN_HPP

#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "dynr/canonical_f.hpp"
#include "dynr/jet.hpp"

namespace dynr {

using Matrix = Eigen::MatrixXcd;

/// Threshold on operator-norm residuals of spectral data.
inline constexpr double TOL_SPECTRAL = 1e-9;
/// Relative eigenvalue clustering tolerance.
inline constexpr double TOL_CLUSTER = 1e-6;
/// Trapezoid quadrature: starting nodes, cap, and doubling stop criterion.
inline constexpr int QUAD_NODES_DEFAULT = 64;
inline constexpr int QUAD_NODES_MAX = 1024;
inline constexpr double QUAD_TOL = 1e-10;
/// Resolvent factors with reciprocal condition below this are rejected.
inline constexpr double RESOLVENT_RCOND_MIN = 1e-12;

/// One generalized eigenspace: representative eigenvalue, index nu (largest
/// Jordan block size), spectral projector E, and nilpotent part (T - lambda I)E.
struct SpectralCluster {
  cplx lambda;
  int index = 1;
  Matrix projector;
  Matrix nilpotent;
};

struct SpectralDecomposition {
  int n = 0;
  double scale = 1.0; // 1 + ||T||
  std::vector<SpectralCluster> clusters;
};

/// Circle contour for the resolvent integrals.
struct Contour {
  cplx center;
  double radius = 1.0;
  int nodes = QUAD_NODES_DEFAULT;
};

using ScalarFun = std::function<cplx(cplx)>;
using JetFun = std::function<Jet(cplx, int)>;

std::vector<cplx> eigenvalues(const Matrix& T);
double spectral_radius(const Matrix& T);

/// Eigenvalues clustered, one resolvent contour integral per cluster for the
/// projector, index from nilpotent powers. Jordan structure comes from the
/// projectors and rank decisions, not from eigenvector chains.
SpectralDecomposition spectral_decompose(const Matrix& T);

/// f(T) = sum_lambda sum_{k<nu} f^(k)(lambda)/k! (T-lambda I)^k E_lambda.
Matrix apply_fun_spectral(const JetFun& jets, const SpectralDecomposition& sd);

/// f(T) by trapezoid quadrature of (1/2 pi i) \oint f(xi) (xi I - T)^{-1} dxi,
/// starting at c.nodes and doubling until stable.
Matrix apply_fun_contour(const ScalarFun& f, const Matrix& T, const Contour& c);

/// f(T) = sum_k c_k T^k for a series with convergence radius SERIES_RADIUS;
/// requires spectral_radius(T) < SERIES_RADIUS.
Matrix apply_fun_taylor(const std::vector<cplx>& coeffs, const Matrix& T);

/// A circle around the spectrum of T that keeps clear of the poles 2*pi*i*Z^*.
Contour default_contour(const Matrix& T, int nodes = QUAD_NODES_DEFAULT);

/// Directional (Frechet) derivative (nabla_S f)(T) via the two-resolvent
/// contour integral.
Matrix frechet(const ScalarFun& f, const Matrix& T, const Matrix& S,
               int start_nodes = QUAD_NODES_DEFAULT);

/// All (nabla_{S_i} f)(T) on a shared set of resolvent factors.
std::vector<Matrix> frechet_multi(const ScalarFun& f, const Matrix& T,
                                  const std::vector<Matrix>& dirs,
                                  int start_nodes = QUAD_NODES_DEFAULT);

} // namespace dynr

#endif
