#ifndef DYNR_CANONICAL_F_HPP
#define DYNR_CANONICAL_F_HPP

#include <array>
#include <functional>
#include <vector>

#include "dynr/jet.hpp"
#include "dynr/rational.hpp"

namespace dynr {

/// Branch point between the Bernoulli series and the closed form of f.
inline constexpr double SERIES_RADIUS = 1.0;
/// Exclusion distance around the poles 2*pi*i*k (k != 0) of f.
inline constexpr double DELTA_POLE = 1e-6;
/// Number of Taylor coefficients of f kept at 0 (orders 0..23, from B_2..B_24).
inline constexpr int F_SERIES_TERMS = 24;

/// Distance from z to the nearest point of 2*pi*i*Z^* (the poles of f).
double pole_distance(cplx z);

/// Taylor coefficients of f at 0: c[2n-1] = B_2n/(2n)!, even entries zero.
const std::array<double, F_SERIES_TERMS>& f_series_coeffs();

/// f(z) = coth(z/2)/2 - 1/z, the removable singularity at 0 filled by the
/// Bernoulli series. Throws PoleError within DELTA_POLE of 2*pi*i*Z^*.
cplx f_eval(cplx z);

/// f and its first m derivatives at z. Series branch for |z| < SERIES_RADIUS,
/// otherwise jet arithmetic on coth(z/2) and 1/z.
Jet f_jet(cplx z, int m);

/// Left side of the addition formula at (x, y); identically zero for f.
/// Symmetric in (x, y) bit-for-bit.
cplx addition_residual(cplx x, cplx y);

/// Same residual for an arbitrary scalar function (negative controls).
cplx addition_residual_with(const std::function<cplx(cplx)>& g, cplx x, cplx y);

/// Coefficients a_1..a_order of the unique odd power-series solution of
/// f' + 2 f/x + f^2 = 1/4, f(0) = 0, by exact-rational recursion. Solved on a
/// general series (no oddness imposed), so vanishing even entries are a result.
std::vector<Rational> ode_series_solve(int order);

/// Scalar-function bundle consumed by the functional-calculus back-ends.
struct HoloFun {
  std::function<cplx(cplx)> eval;
  std::function<Jet(cplx, int)> jet;
  std::vector<cplx> taylor; // series at 0 for the Taylor back-end; empty if n/a
};

/// The canonical f.
HoloFun canonical_fun();

/// s * f. Negative control for the Yang-Baxter residuals.
HoloFun scaled_fun(double s);

/// coth(z/2)/2 alone, i.e. f with the -1/z term dropped. Has a genuine pole
/// at 0, so only contour-based back-ends can consume it.
HoloFun coth_half_fun();

} // namespace dynr

#endif
