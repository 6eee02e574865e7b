#ifndef DYNR_BIJET_HPP
#define DYNR_BIJET_HPP

#include <string>
#include <vector>

#include "dynr/jet.hpp"

namespace dynr {

/// Mixed partials of a bivariate expression at a point, kept as normalized
/// Taylor coefficients t(a,b) = d^{a+b}F / dx^a dy^b / (a! b!).
struct BiJet {
  cplx x, y;
  int kmax = 0, lmax = 0;
  std::vector<cplx> t;

  BiJet() = default;
  BiJet(cplx x_, cplx y_, int k, int l)
      : x(x_), y(y_), kmax(k), lmax(l),
        t(static_cast<size_t>((k + 1) * (l + 1)), cplx(0)) {}

  cplx coeff(int a, int b) const { return t[idx(a, b)]; }
  cplx& at(int a, int b) { return t[idx(a, b)]; }
  /// d^{a+b}F / dx^a dy^b at the base point.
  cplx partial(int a, int b) const { return coeff(a, b) * factorial_d(a) * factorial_d(b); }

private:
  size_t idx(int a, int b) const {
    return static_cast<size_t>(a) * static_cast<size_t>(lmax + 1) + static_cast<size_t>(b);
  }
};

BiJet bi_add(const BiJet& a, const BiJet& b);
BiJet bi_sub(const BiJet& a, const BiJet& b);
BiJet bi_mul(const BiJet& a, const BiJet& b);
/// Requires a nonzero constant term in d.
BiJet bi_div(const BiJet& n, const BiJet& d);

/// The bivariate expressions appearing in the addition formula.
enum class BiExpr {
  quarter,      // 1/4
  fx_fy,        // f(x) f(y)
  fxy_fx,       // f(x+y) f(x)
  fxy_fy,       // f(x+y) f(y)
  sum_over_xpy, // (f(x) + f(y)) / (x + y)
  diff_over_x,  // (f(x+y) - f(y)) / x
  diff_over_y   // (f(x+y) - f(x)) / y
};

BiExpr bi_expr_from_name(const std::string& name);

/// Mixed partials of the chosen expression through orders (k, l) by bivariate
/// truncated-Taylor arithmetic on jets of f. When the excluded denominator of
/// one of the quotient expressions vanishes exactly, the shifted expansion
/// (the continuous extension) is evaluated; a denominator merely close to zero
/// raises DomainError.
BiJet bijet_eval(BiExpr expr, cplx x, cplx y, int k, int l);

} // namespace dynr

#endif
