#include "dynr/identities.hpp"

#include <cmath>

#include "dynr/random.hpp"

namespace dynr {

namespace {

IdentityCase exact_case(const std::string& name, const Rational& lhs, const Rational& rhs) {
  IdentityCase c;
  c.name = name;
  c.exact = true;
  c.tol = 0;
  c.lhs_exact = lhs.to_string();
  c.rhs_exact = rhs.to_string();
  c.lhs = lhs.to_double();
  c.rhs = rhs.to_double();
  c.residual = (lhs - rhs).is_zero() ? 0.0 : std::abs((lhs - rhs).to_double());
  c.pass = (lhs - rhs).is_zero();
  return c;
}

IdentityCase analytic_case(const std::string& name, cplx lhs, cplx rhs) {
  IdentityCase c;
  c.name = name;
  c.lhs = lhs;
  c.rhs = rhs;
  c.residual = std::abs(lhs - rhs);
  c.pass = c.residual < c.tol;
  return c;
}

cplx fd(const Jet& j, int k) { return j.deriv(k); }

// closed forms of the derivative identities
cplx rhs_d5(int k, int l, cplx x, cplx y, const Jet& jx, const Jet& jy) {
  cplx acc(0);
  double sgn_kl = ((k + l) % 2 == 0) ? 1.0 : -1.0;
  for (int a = 0; a <= l; ++a) {
    double s = (a % 2 == 0) ? 1.0 : -1.0;
    acc += sgn_kl * (factorial_d(l) / (factorial_d(a) * factorial_d(l - a))) *
           factorial_d(k + l - a) * s * fd(jy, a) / std::pow(x + y, k + l + 1 - a);
  }
  for (int b = 0; b <= k; ++b) {
    double s = (b % 2 == 0) ? 1.0 : -1.0;
    acc += sgn_kl * (factorial_d(k) / (factorial_d(b) * factorial_d(k - b))) *
           factorial_d(k + l - b) * s * fd(jx, b) / std::pow(x + y, k + l + 1 - b);
  }
  return acc;
}

cplx rhs_d6(int k, int l, cplx x, const Jet& jxy, const Jet& jy) {
  cplx acc(0);
  for (int m = 0; m <= k; ++m) {
    double s = (m % 2 == 0) ? -1.0 : 1.0; // (-1)^(m+1)
    acc -= (factorial_d(k) / factorial_d(k - m)) * s * fd(jxy, k + l - m) / std::pow(x, m + 1);
  }
  double sk = (k % 2 == 0) ? 1.0 : -1.0;
  acc -= sk * factorial_d(k) * fd(jy, l) / std::pow(x, k + 1);
  return acc;
}

cplx rhs_d7(int k, int l, cplx y, const Jet& jxy, const Jet& jx) {
  cplx acc(0);
  for (int m = 0; m <= l; ++m) {
    double s = (m % 2 == 0) ? -1.0 : 1.0;
    acc -= (factorial_d(l) / factorial_d(l - m)) * s * fd(jxy, k + l - m) / std::pow(y, m + 1);
  }
  double sl = (l % 2 == 0) ? 1.0 : -1.0;
  acc -= sl * factorial_d(l) * fd(jx, k) / std::pow(y, l + 1);
  return acc;
}

} // namespace

IdentityCase check_b(int which, const std::vector<long long>& params) {
  auto C = [](long long n, long long k) { return Rational::binomial(n, k); };
  switch (which) {
    case 1: {
      if (params.size() != 2 || params[0] < 0 || params[1] < 0)
        throw DomainError("b1 needs k, l >= 0");
      long long k = params[0], l = params[1];
      Rational lhs(0);
      for (long long n = 0; n <= k; ++n) {
        Rational term = C(k, n) / Rational(n + l + 1);
        lhs += (n % 2 == 0) ? term : -term;
      }
      Rational rhs = Rational::factorial(static_cast<int>(k)) *
                     Rational::factorial(static_cast<int>(l)) /
                     Rational::factorial(static_cast<int>(k + l + 1));
      IdentityCase c = exact_case("b1", lhs, rhs);
      c.k = k;
      c.l = l;
      return c;
    }
    case 2: {
      if (params.size() != 2 || params[0] < 0 || params[1] < params[0])
        throw DomainError("b2 needs 0 <= k <= n");
      long long k = params[0], n = params[1];
      Rational lhs(0);
      for (long long a = 0; a <= k; ++a) lhs += C(n - a, n - k);
      IdentityCase c = exact_case("b2", lhs, C(n + 1, k));
      c.k = k;
      c.n = n;
      return c;
    }
    case 3: {
      if (params.size() != 3 || params[0] < 0 || params[1] < 0 || params[2] < 0 ||
          params[2] > params[1])
        throw DomainError("b3 needs k, l >= 0 and 0 <= m <= l");
      long long k = params[0], l = params[1], m = params[2];
      Rational lhs(0);
      for (long long j = 0; j <= m; ++j) {
        Rational term = C(m, j) * C(k + l - j, k);
        lhs += (j % 2 == 0) ? term : -term;
      }
      Rational rhs = (k < m) ? Rational(0) : C(k + l - m, l);
      IdentityCase c = exact_case("b3", lhs, rhs);
      c.k = k;
      c.l = l;
      c.m = m;
      return c;
    }
    case 4: {
      if (params.size() != 3 || params[0] < 0 || params[1] < 0 || params[2] <= params[1] ||
          params[2] > params[0] + params[1])
        throw DomainError("b4 needs k, l >= 0 and l < m <= k+l");
      long long k = params[0], l = params[1], m = params[2];
      Rational lhs(0);
      for (long long j = 0; j <= l; ++j) {
        Rational term = C(m, j) * C(k + l - j, k);
        lhs += (j % 2 == 0) ? term : -term;
      }
      Rational rhs = (k < m) ? Rational(0) : C(k + l - m, l);
      IdentityCase c = exact_case("b4", lhs, rhs);
      c.k = k;
      c.l = l;
      c.m = m;
      return c;
    }
    default:
      throw DomainError("check_b: which must be 1..4");
  }
}

IdentityCase check_c1(cplx x, int k) {
  if (std::abs(x) <= DELTA_POLE) throw DomainError("check_c1: x must stay away from 0");
  Jet jp = f_jet(x, std::max(k, 1));
  Jet jm = f_jet(-x, k);
  double sk = (k % 2 == 0) ? 1.0 : -1.0; // (-1)^(k+1) = -(-1)^k
  double parity = std::abs(jm.deriv(k) + sk * jp.deriv(k));
  cplx fx = jp.deriv(0);
  double ode = std::abs(jp.deriv(1) + 2.0 * fx / x + fx * fx - 0.25);
  IdentityCase c;
  c.name = "c1";
  c.k = k;
  c.x = x;
  c.lhs = jm.deriv(k);
  c.rhs = -sk * jp.deriv(k);
  c.tol = 1e-12;
  c.residual = std::max(parity, ode);
  c.pass = c.residual < c.tol;
  return c;
}

IdentityCase check_d(const std::string& which, int k, int l, cplx x, cplx y) {
  if (k < 0 || l < 0 || k > 2 * MAX_ORDER_ANALYTIC || l > 2 * MAX_ORDER_ANALYTIC)
    throw DomainError("check_d: order outside the supported range");
  cplx lhs, rhs;
  if (which == "1") {
    lhs = bijet_eval(BiExpr::quarter, x, y, k, l).partial(k, l);
    rhs = (k == 0 && l == 0) ? cplx(0.25) : cplx(0);
  } else if (which == "2") {
    lhs = bijet_eval(BiExpr::fx_fy, x, y, k, l).partial(k, l);
    rhs = f_jet(x, k).deriv(k) * f_jet(y, l).deriv(l);
  } else if (which == "3" || which == "4") {
    bool three = which == "3";
    lhs = bijet_eval(three ? BiExpr::fxy_fx : BiExpr::fxy_fy, x, y, k, l).partial(k, l);
    // Leibniz on d^k/dxi^k [f^(l)(xi+y) f(xi)] at xi = x (mirrored for d4)
    int outer = three ? k : l;
    int inner = three ? l : k;
    Jet jxy = f_jet(x + y, k + l);
    Jet jin = f_jet(three ? x : y, outer);
    rhs = cplx(0);
    for (int i = 0; i <= outer; ++i) {
      double bin = factorial_d(outer) / (factorial_d(i) * factorial_d(outer - i));
      rhs += bin * jxy.deriv(inner + i) * jin.deriv(outer - i);
    }
  } else if (which == "5") {
    lhs = bijet_eval(BiExpr::sum_over_xpy, x, y, k, l).partial(k, l);
    rhs = rhs_d5(k, l, x, y, f_jet(x, k), f_jet(y, l));
  } else if (which == "5lim") {
    x = -y;
    lhs = bijet_eval(BiExpr::sum_over_xpy, x, y, k, l).partial(k, l);
    double sk = (k % 2 == 0) ? 1.0 : -1.0;
    rhs = sk * factorial_d(k) * factorial_d(l) / factorial_d(k + l + 1) *
          f_jet(y, k + l + 1).deriv(k + l + 1);
  } else if (which == "6") {
    lhs = bijet_eval(BiExpr::diff_over_x, x, y, k, l).partial(k, l);
    rhs = rhs_d6(k, l, x, f_jet(x + y, k + l), f_jet(y, l));
  } else if (which == "6lim") {
    x = cplx(0);
    lhs = bijet_eval(BiExpr::diff_over_x, x, y, k, l).partial(k, l);
    rhs = f_jet(y, k + l + 1).deriv(k + l + 1) / static_cast<double>(k + 1);
  } else if (which == "7") {
    lhs = bijet_eval(BiExpr::diff_over_y, x, y, k, l).partial(k, l);
    rhs = rhs_d7(k, l, y, f_jet(x + y, k + l), f_jet(x, k));
  } else if (which == "7lim") {
    y = cplx(0);
    lhs = bijet_eval(BiExpr::diff_over_y, x, y, k, l).partial(k, l);
    rhs = f_jet(x, k + l + 1).deriv(k + l + 1) / static_cast<double>(l + 1);
  } else {
    throw DomainError("check_d: unknown identity '" + which + "'");
  }
  IdentityCase c = analytic_case("d" + which, lhs, rhs);
  c.k = k;
  c.l = l;
  c.x = x;
  c.y = y;
  return c;
}

std::vector<IdentityCase> identity_sweep(int max_order, uint64_t seed) {
  if (max_order < 0 || max_order > 10) throw DomainError("identity_sweep: max_order must be 0..10");
  std::vector<IdentityCase> out;
  for (long long k = 0; k <= max_order; ++k)
    for (long long l = 0; l <= max_order; ++l) out.push_back(check_b(1, {k, l}));
  for (long long k = 0; k <= max_order; ++k)
    for (long long n = k; n <= max_order; ++n) out.push_back(check_b(2, {k, n}));
  for (long long k = 0; k <= max_order; ++k)
    for (long long l = 0; l <= max_order; ++l)
      for (long long m = 0; m <= l; ++m) out.push_back(check_b(3, {k, l, m}));
  for (long long k = 0; k <= max_order; ++k)
    for (long long l = 0; l <= max_order; ++l)
      for (long long m = l + 1; m <= std::min<long long>(k + l, max_order); ++m)
        out.push_back(check_b(4, {k, l, m}));

  const int kmax = std::min(max_order, MAX_ORDER_ANALYTIC);
  RandomStream rng(seed);
  // band that keeps every denominator and every pole comfortably away
  auto sample = [&rng]() {
    double re = (1.2 + 1.0 * rng.unit()) * (rng.unit() < 0.5 ? -1.0 : 1.0);
    double im = 0.6 * rng.uniform();
    return cplx(re, im);
  };
  const int points = 20;
  for (int t = 0; t < points; ++t) {
    cplx x = sample();
    for (int k = 0; k <= kmax; ++k) out.push_back(check_c1(x, k));
  }
  const char* names[] = {"1", "2", "3", "4", "5", "5lim", "6", "6lim", "7", "7lim"};
  for (const char* which : names) {
    for (int t = 0; t < points; ++t) {
      cplx x = sample();
      cplx y = sample();
      if (std::string(which) == "5") {
        while (std::abs(x + y) < 0.5) {
          x = sample();
          y = sample();
        }
      }
      for (int k = 0; k <= kmax; ++k)
        for (int l = 0; l <= kmax; ++l) out.push_back(check_d(which, k, l, x, y));
    }
  }
  return out;
}

} // namespace dynr
