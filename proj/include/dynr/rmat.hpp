#ifndef DYNR_RMAT_HPP
#define DYNR_RMAT_HPP

#include <string>
#include <vector>

#include "dynr/liealg.hpp"
#include "dynr/matfun.hpp"

namespace dynr {

/// Default tolerance on the Yang-Baxter, equivariance and antisymmetry residuals.
inline constexpr double TOL_RESIDUAL = 1e-8;

enum class RMethod { spectral, contour, taylor };
RMethod rmethod_from_name(const std::string& name);
std::string rmethod_name(RMethod m);

/// R(omega) = f(ad omega) together with its covariant coefficient matrix
/// rho_jk = <T_j, R T_k> and the cached spectral data of ad omega.
struct RMatrixEval {
  Vector omega;
  Matrix R;
  Matrix rho;
  SpectralDecomposition spectral;
};

/// True iff every eigenvalue of ad omega stays farther than delta from every
/// pole 2*pi*i*k, k != 0 (omega lies in the admissible open set).
bool domain_check(const LieAlgebra& a, const Vector& omega, double delta = DELTA_POLE);

RMatrixEval canonical_r(const LieAlgebra& a, const Vector& omega,
                        RMethod method = RMethod::spectral, int nodes = QUAD_NODES_DEFAULT);
/// Same with an arbitrary scalar-function bundle (negative controls).
RMatrixEval canonical_r_with(const LieAlgebra& a, const HoloFun& fun, const Vector& omega,
                             RMethod method, int nodes = QUAD_NODES_DEFAULT);

enum class DerivMethod { frechet, fd };

/// Central finite-difference step, balanced between truncation and rounding.
double fd_step(const Vector& omega, const Vector& s);

/// (nabla_S R)(omega), analytic via the two-resolvent integral on ad omega
/// with direction ad S, or by central finite differences of R(omega + t S).
Matrix directional_derivative(const LieAlgebra& a, const Vector& omega, const Vector& s,
                              DerivMethod method = DerivMethod::frechet,
                              int nodes = QUAD_NODES_DEFAULT);

/// All n derivatives (nabla_{T_j} R)(omega) on one shared contour.
std::vector<Matrix> basis_directional_derivatives(const LieAlgebra& a, const Vector& omega,
                                                  const HoloFun& fun = canonical_fun(),
                                                  int nodes = QUAD_NODES_DEFAULT);

/// <X, (nabla R)(omega) Y> = sum_j T^j <X, (nabla_{T_j} R)(omega) Y> as an
/// algebra element.
Vector gradient_pairing(const LieAlgebra& a, const Vector& omega, const Vector& x, const Vector& y);

/// Closed forms for diagonalizable ad omega and eigenvectors X, Y:
/// lemma3 = -((f(l)+f(m))/(l+m)) [X,Y]  (l+m = 0 limit: -f'(m) [X,Y]),
/// lemma4 = ((f(l+m)-f(m))/l) [X,Y]     (l = 0 limit:    f'(m) [X,Y]).
Vector lemma3_oracle(const LieAlgebra& a, const Vector& omega, const Vector& x, const Vector& y);
Vector lemma4_oracle(const LieAlgebra& a, const Vector& omega, const Vector& x, const Vector& y);

/// Max |Im| coordinate of R(omega) X for a real algebra and real omega, X.
double realness_check(const LieAlgebra& a, const Vector& omega, const Vector& x);

/// Eigenvalue of x under ad omega, with a residual gate (NotEigenvectorError).
cplx eigenvalue_of(const LieAlgebra& a, const Matrix& adw, const Vector& x);

} // namespace dynr

#endif
