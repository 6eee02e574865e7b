#ifndef DYNR_LIEALG_HPP
#define DYNR_LIEALG_HPP

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "dynr/jet.hpp"
#include "dynr/rational.hpp"

namespace dynr {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Residual threshold for checks that should be exact up to rounding.
inline constexpr double TOL_EXACT = 1e-12;
/// |det B| below this counts as a degenerate form.
inline constexpr double TOL_RANK = 1e-9;

/// Exact-rational mirror of the defining data, kept for catalog algebras and
/// for user files whose entries are all rational.
struct ExactScalars {
  std::vector<Rational> structure; // (j*n + k)*n + l
  std::vector<Rational> form;      // j*n + k
};

/// A finite-dimensional self-dual Lie algebra: structure constants f_jk^l with
/// [T_j, T_k] = f_jk^l T_l, and an invariant symmetric nondegenerate form B.
struct LieAlgebra {
  int dim = 0;
  std::string name;
  std::vector<std::string> labels;
  std::vector<cplx> structure; // (j*n + k)*n + l
  Matrix form;
  bool real_form = false; // all defining scalars real
  std::optional<ExactScalars> exact;

  cplx f(int j, int k, int l) const {
    return structure[(static_cast<size_t>(j) * dim + k) * dim + l];
  }
  cplx& fref(int j, int k, int l) {
    return structure[(static_cast<size_t>(j) * dim + k) * dim + l];
  }
  /// Bilinear pairing <u, v> = u^j B_jk v^k (no conjugation).
  cplx pair(const Vector& u, const Vector& v) const { return u.transpose() * form * v; }
};

/// D = B^{-1}, so T^j = D^{jk} T_k and <T_j, T^k> = delta_j^k.
struct DualBasis {
  Matrix D;
};

struct ValidationReport {
  double antisymmetry = 0;
  double jacobi = 0;
  double form_symmetry = 0;
  double invariance = 0;
  double det_form_abs = 0;
  bool exact_arithmetic = false;
  bool pass() const {
    return antisymmetry <= TOL_EXACT && jacobi <= TOL_EXACT && form_symmetry <= TOL_EXACT &&
           invariance <= TOL_EXACT && det_form_abs > TOL_RANK;
  }
};

/// [x, y] in coordinates: z^l = sum_jk x^j y^k f_jk^l.
Vector bracket(const LieAlgebra& a, const Vector& x, const Vector& y);

/// Matrix of ad(omega): (ad omega)_lk = sum_j omega^j f_jk^l.
Matrix ad(const LieAlgebra& a, const Vector& omega);

/// Matrix of ad(T_j) for a basis element.
Matrix ad_basis(const LieAlgebra& a, int j);

DualBasis dual_basis(const LieAlgebra& a);

/// A^T with respect to the form: B^{-1} A^t B.
Matrix transpose_wrt_form(const LieAlgebra& a, const Matrix& A);

/// Axiom residuals; exact-rational arithmetic when the algebra carries it.
ValidationReport validate(const LieAlgebra& a);

/// Built-in algebras: abelian(n), sl2, sl2_real, oscillator, direct_sum(a,b).
LieAlgebra catalog(const std::string& name);
std::vector<std::string> catalog_names();

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);

/// Killing form B_jk = tr(ad T_j ad T_k) from exact structure constants.
std::vector<Rational> killing_form(const std::vector<Rational>& structure, int n);

/// Scalar literal: rational p/q, decimal, or complex a+bi / bi / i.
struct ParsedScalar {
  cplx value;
  std::optional<Rational> exact;
};
ParsedScalar parse_scalar(const std::string& token);

/// Text format: `dim n`, then `form j k value` / `bracket j k l value` lines,
/// 1-based indices, values rational p/q or complex a+bi, '#' comments.
LieAlgebra algebra_from_string(const std::string& text, const std::string& name = "file");
LieAlgebra algebra_from_file(const std::string& path);

} // namespace dynr

#endif
