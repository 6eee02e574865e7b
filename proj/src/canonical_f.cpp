#include "dynr/canonical_f.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "dynr/bernoulli.hpp"

namespace dynr {

namespace {
constexpr double TWO_PI = 6.283185307179586476925286766559;

void check_pole(cplx z) {
  if (pole_distance(z) <= DELTA_POLE)
    throw PoleError("evaluation within DELTA_POLE of a pole 2*pi*i*k of f");
}
} // namespace

double pole_distance(cplx z) {
  double k0 = std::round(z.imag() / TWO_PI);
  double best = std::numeric_limits<double>::infinity();
  for (double k : {k0 - 1.0, k0, k0 + 1.0, 1.0, -1.0}) {
    if (k == 0.0) continue;
    best = std::min(best, std::abs(z - cplx(0.0, TWO_PI * k)));
  }
  return best;
}

const std::array<double, F_SERIES_TERMS>& f_series_coeffs() {
  static const std::array<double, F_SERIES_TERMS> table = [] {
    std::array<double, F_SERIES_TERMS> c{};
    for (int n = 1; 2 * n - 1 < F_SERIES_TERMS; ++n) {
      c[static_cast<size_t>(2 * n - 1)] =
          (bernoulli(2 * n) / Rational::factorial(2 * n)).to_double();
    }
    return c;
  }();
  return table;
}

cplx f_eval(cplx z) {
  check_pole(z);
  if (std::abs(z) < SERIES_RADIUS) {
    const auto& c = f_series_coeffs();
    cplx acc(0);
    for (int k = F_SERIES_TERMS - 1; k >= 0; --k) acc = acc * z + c[static_cast<size_t>(k)];
    return acc;
  }
  return 0.5 * (1.0 / std::tanh(z / 2.0)) - 1.0 / z;
}

Jet f_jet(cplx z, int m) {
  check_pole(z);
  if (m < 0) throw DomainError("f_jet: negative order");
  Jet j;
  j.point = z;
  j.derivs.assign(static_cast<size_t>(m) + 1, cplx(0));
  if (std::abs(z) < SERIES_RADIUS) {
    const auto& c = f_series_coeffs();
    for (int d = 0; d <= m; ++d) {
      // d-th derivative of the truncated series, Horner in z
      cplx acc(0);
      for (int k = F_SERIES_TERMS - 1; k >= d; --k) {
        double fall = factorial_d(k) / factorial_d(k - d);
        acc = acc * z + fall * c[static_cast<size_t>(k)];
      }
      j.derivs[static_cast<size_t>(d)] = acc;
    }
    return j;
  }
  auto v = coth_half_series(z, m);
  auto w = inverse_z_series(z, m);
  for (int k = 0; k <= m; ++k) {
    j.derivs[static_cast<size_t>(k)] =
        factorial_d(k) * (0.5 * v[static_cast<size_t>(k)] - w[static_cast<size_t>(k)]);
  }
  return j;
}

cplx addition_residual_with(const std::function<cplx(cplx)>& g, cplx x, cplx y) {
  // canonical argument order makes the residual symmetric bit-for-bit
  if (y.real() < x.real() || (y.real() == x.real() && y.imag() < x.imag())) std::swap(x, y);
  if (std::abs(x) <= DELTA_POLE || std::abs(y) <= DELTA_POLE || std::abs(x + y) <= DELTA_POLE)
    throw DomainError("addition_residual: denominator within DELTA_POLE of 0");
  cplx fx = g(x), fy = g(y), fxy = g(x + y);
  return 0.25 + fx * fy - fxy * (fx + fy) - (fxy - fy) / x - (fxy - fx) / y - (fx + fy) / (x + y);
}

cplx addition_residual(cplx x, cplx y) {
  return addition_residual_with([](cplx z) { return f_eval(z); }, x, y);
}

std::vector<Rational> ode_series_solve(int order) {
  if (order < 1) throw DomainError("ode_series_solve: order must be >= 1");
  // f = sum a_m x^m with a_0 = 0. Matching x^p in f' + 2f/x + f^2 = 1/4 gives
  // (p + 3) a_{p+1} = (1/4) delta_{p,0} - sum_{i+j=p, i,j>=1} a_i a_j.
  std::vector<Rational> a(static_cast<size_t>(order) + 1);
  a[0] = Rational(0);
  for (int p = 0; p < order; ++p) {
    Rational rhs = (p == 0) ? Rational(1, 4) : Rational(0);
    for (int i = 1; i <= p - 1; ++i) rhs -= a[static_cast<size_t>(i)] * a[static_cast<size_t>(p - i)];
    a[static_cast<size_t>(p + 1)] = rhs / Rational(p + 3);
  }
  return std::vector<Rational>(a.begin() + 1, a.end());
}

HoloFun canonical_fun() {
  HoloFun h;
  h.eval = [](cplx z) { return f_eval(z); };
  h.jet = [](cplx z, int m) { return f_jet(z, m); };
  const auto& c = f_series_coeffs();
  h.taylor.assign(c.begin(), c.end());
  return h;
}

HoloFun scaled_fun(double s) {
  HoloFun h;
  h.eval = [s](cplx z) { return s * f_eval(z); };
  h.jet = [s](cplx z, int m) {
    Jet j = f_jet(z, m);
    for (auto& d : j.derivs) d *= s;
    return j;
  };
  const auto& c = f_series_coeffs();
  h.taylor.assign(c.begin(), c.end());
  for (auto& t : h.taylor) t *= s;
  return h;
}

HoloFun coth_half_fun() {
  HoloFun h;
  h.eval = [](cplx z) {
    if (std::abs(z) <= DELTA_POLE || pole_distance(z) <= DELTA_POLE)
      throw PoleError("coth(z/2)/2 evaluated at a pole");
    return 0.5 / std::tanh(z / 2.0);
  };
  // the pole at 0 always sits in the spectrum of ad omega; the spectral
  // back-end evaluates the regular part of the spectrum and lets the kernel
  // cluster contribute nothing
  h.jet = [](cplx z, int m) {
    Jet j;
    j.point = z;
    j.derivs.assign(static_cast<size_t>(m) + 1, cplx(0));
    if (std::abs(z) <= 10 * DELTA_POLE) return j;
    if (pole_distance(z) <= DELTA_POLE) throw PoleError("coth(z/2)/2 jet at a pole");
    auto v = coth_half_series(z, m);
    for (int k = 0; k <= m; ++k)
      j.derivs[static_cast<size_t>(k)] = 0.5 * factorial_d(k) * v[static_cast<size_t>(k)];
    return j;
  };
  return h;
}

} // namespace dynr
