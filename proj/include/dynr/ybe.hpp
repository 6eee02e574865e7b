#ifndef DYNR_YBE_HPP
#define DYNR_YBE_HPP

#include <string>
#include <vector>

#include "dynr/rmat.hpp"

namespace dynr {

/// Rank-3 tensor in fully covariant components: t = t_jkl T^j x T^k x T^l.
/// Slot order (j, k, l) follows the tensor legs 1, 2, 3.
struct ThreeTensor {
  int n = 0;
  std::vector<cplx> c;

  explicit ThreeTensor(int dim = 0)
      : n(dim), c(static_cast<size_t>(dim) * dim * dim, cplx(0)) {}
  cplx& at(int j, int k, int l) {
    return c[(static_cast<size_t>(j) * n + k) * n + l];
  }
  cplx get(int j, int k, int l) const {
    return c[(static_cast<size_t>(j) * n + k) * n + l];
  }
  double max_abs() const;
};

/// phi = -1/4 f_jk^l T^j x T^k x T_l, third leg lowered with the form.
ThreeTensor phi_tensor(const LieAlgebra& a);

/// Total antisymmetry of phi with all indices raised: max residual over the
/// six permutation relations.
double phi_antisymmetry_residual(const LieAlgebra& a);

/// Invariance of phi: summed coadjoint action on the three legs, max over the
/// acting basis element and components.
double phi_invariance_residual(const LieAlgebra& a);

/// Residuals of the operator-form equation for the basis pairs (T_j, T_k).
struct CdybeReport {
  Eigen::MatrixXd pair_residuals;
  double overall = 0;
  double tolerance = TOL_RESIDUAL;
  std::string method;
};

/// 1/4 [X,Y] + [RX, RY] - R([RX,Y] + [X,RY]) + <X,(grad R)Y> + (nabla_Y R)X
/// - (nabla_X R)Y over all basis pairs; max coordinate norm per pair.
CdybeReport cdybe_residual(const LieAlgebra& a, const Vector& omega,
                           RMethod method = RMethod::spectral,
                           const HoloFun& fun = canonical_fun(), int nodes = QUAD_NODES_DEFAULT);

/// Max-norm of the tensor-form equation: bracket terms plus derivative terms
/// minus phi, assembled in fully covariant components.
double mcdybe_tensor_residual(const LieAlgebra& a, const Vector& omega,
                              RMethod method = RMethod::spectral,
                              const HoloFun& fun = canonical_fun(),
                              int nodes = QUAD_NODES_DEFAULT);

/// ||(nabla_{[S,omega]} R)(omega) - [ad S, R(omega)]|| (Frobenius).
double equivariance_residual(const LieAlgebra& a, const Vector& omega, const Vector& s,
                             RMethod method = RMethod::spectral, int nodes = QUAD_NODES_DEFAULT);

/// One term of the operator-form equation evaluated two ways on eigenvectors:
/// directly, and through the k = l = 0 closed form in the eigenvalues.
struct LemmaTerm {
  std::string name;
  int sign = 1; // contribution sign inside the operator-form equation
  Vector direct;
  Vector closed;
};

/// The seven summands for diagonalizable ad omega and eigenvectors X, Y; their
/// signed sum equals the addition-formula combination at the eigenvalues.
std::vector<LemmaTerm> lemma_term_decomposition(const LieAlgebra& a, const Vector& omega,
                                                const Vector& x, const Vector& y);

} // namespace dynr

#endif
