#ifndef DYNR_JET_HPP
#define DYNR_JET_HPP

#include <complex>
#include <vector>

#include "dynr/errors.hpp"

namespace dynr {

using cplx = std::complex<double>;

/// Value and first m derivatives of a holomorphic function at a point.
struct Jet {
  cplx point;
  std::vector<cplx> derivs; // [f, f', ..., f^(m)]

  int order() const { return static_cast<int>(derivs.size()) - 1; }
  cplx deriv(int k) const { return derivs.at(static_cast<size_t>(k)); }

  /// Taylor coefficient f^(k)(point)/k!.
  cplx taylor(int k) const;
  std::vector<cplx> taylor_coeffs() const;
  static Jet from_taylor(cplx point, const std::vector<cplx>& coeffs);
};

/// n! as a double (exact through 22!).
double factorial_d(int n);

// Truncated Taylor arithmetic on normalized coefficients c[k] = f^(k)/k!,
// all series truncated at order m inclusive.
std::vector<cplx> series_add(const std::vector<cplx>& a, const std::vector<cplx>& b);
std::vector<cplx> series_sub(const std::vector<cplx>& a, const std::vector<cplx>& b);
std::vector<cplx> series_scale(const std::vector<cplx>& a, cplx s);
std::vector<cplx> series_mul(const std::vector<cplx>& a, const std::vector<cplx>& b, int m);
/// Requires b[0] != 0; use a shifted expansion for series with vanishing lead.
std::vector<cplx> series_div(const std::vector<cplx>& a, const std::vector<cplx>& b, int m);

/// Taylor coefficients of t -> coth((z0 + t)/2) at t = 0, via the recursion
/// induced by coth' = 1 - coth^2. z0/2 must avoid the poles i*pi*Z of coth.
std::vector<cplx> coth_half_series(cplx z0, int m);

/// Taylor coefficients of t -> 1/(z0 + t) at t = 0; z0 != 0.
std::vector<cplx> inverse_z_series(cplx z0, int m);

} // namespace dynr

#endif
