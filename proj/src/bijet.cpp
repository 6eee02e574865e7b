#include "dynr/bijet.hpp"

#include <cmath>

#include "dynr/canonical_f.hpp"

namespace dynr {

namespace {

// denominators below this are treated as exactly at the excluded point
constexpr double LIMIT_TRIGGER = 1e-13;

double binom_d(int n, int k) { return factorial_d(n) / (factorial_d(k) * factorial_d(n - k)); }

BiJet of_const(cplx v, cplx x, cplx y, int k, int l) {
  BiJet b(x, y, k, l);
  b.at(0, 0) = v;
  return b;
}

BiJet of_var_x(cplx x, cplx y, int k, int l) {
  BiJet b(x, y, k, l);
  b.at(0, 0) = x;
  if (k >= 1) b.at(1, 0) = 1.0;
  return b;
}

BiJet of_var_y(cplx x, cplx y, int k, int l) {
  BiJet b(x, y, k, l);
  b.at(0, 0) = y;
  if (l >= 1) b.at(0, 1) = 1.0;
  return b;
}

BiJet of_x_plus_y(cplx x, cplx y, int k, int l) {
  BiJet b(x, y, k, l);
  b.at(0, 0) = x + y;
  if (k >= 1) b.at(1, 0) = 1.0;
  if (l >= 1) b.at(0, 1) = 1.0;
  return b;
}

BiJet of_f_x(cplx x, cplx y, int k, int l) {
  Jet j = f_jet(x, k);
  BiJet b(x, y, k, l);
  for (int a = 0; a <= k; ++a) b.at(a, 0) = j.taylor(a);
  return b;
}

BiJet of_f_y(cplx x, cplx y, int k, int l) {
  Jet j = f_jet(y, l);
  BiJet b(x, y, k, l);
  for (int c = 0; c <= l; ++c) b.at(0, c) = j.taylor(c);
  return b;
}

BiJet of_f_xpy(cplx x, cplx y, int k, int l) {
  Jet j = f_jet(x + y, k + l);
  BiJet b(x, y, k, l);
  for (int a = 0; a <= k; ++a)
    for (int c = 0; c <= l; ++c) b.at(a, c) = j.taylor(a + c) * binom_d(a + c, a);
  return b;
}

void require_same_shape(const BiJet& a, const BiJet& b) {
  if (a.kmax != b.kmax || a.lmax != b.lmax)
    throw DimensionError("bijet arithmetic on mismatching orders");
}

// (f(x+y) - f(y))/x continued across x = 0: numerator built one order higher
// in x, then shifted down.
BiJet limit_diff_over_x(cplx y, int k, int l) {
  Jet j = f_jet(y, k + 1 + l);
  BiJet q(cplx(0), y, k, l);
  for (int a = 0; a <= k; ++a) {
    for (int c = 0; c <= l; ++c) {
      // N(a+1, c) with N = f(x+y) - f(y); the f(y) part only hits a = 0
      q.at(a, c) = j.taylor(a + 1 + c) * binom_d(a + 1 + c, a + 1);
    }
  }
  return q;
}

BiJet limit_diff_over_y(cplx x, int k, int l) {
  Jet j = f_jet(x, k + l + 1);
  BiJet q(x, cplx(0), k, l);
  for (int a = 0; a <= k; ++a) {
    for (int c = 0; c <= l; ++c) {
      q.at(a, c) = j.taylor(a + c + 1) * binom_d(a + c + 1, a);
    }
  }
  return q;
}

// (f(x) + f(y))/(x+y) continued across x+y = 0, via u = x+y:
// G(u, y) = (f(u-y) + f(y))/u, shifted division in u, then the chain rule
// d_x = d_u, d_y|x = d_u + d_y|u maps the partials back.
BiJet limit_sum_over_xpy(cplx x, cplx y, int k, int l) {
  const int P = k + l, Q = l;
  Jet jm = f_jet(-y, P + 1 + Q);
  BiJet q(cplx(0), y, P, Q); // coefficients in (u, y)
  for (int a = 0; a <= P; ++a) {
    for (int c = 0; c <= Q; ++c) {
      // N(a+1, c) with N(u,y) = f(u-y) + f(y); f(y) only contributes at u-order 0
      q.at(a, c) = jm.taylor(a + 1 + c) * binom_d(a + 1 + c, a + 1) *
                   ((c % 2 == 0) ? 1.0 : -1.0);
    }
  }
  BiJet r(x, y, k, l);
  for (int a = 0; a <= k; ++a) {
    for (int c = 0; c <= l; ++c) {
      cplx p(0);
      for (int i = 0; i <= c; ++i) p += binom_d(c, i) * q.partial(a + i, c - i);
      r.at(a, c) = p / (factorial_d(a) * factorial_d(c));
    }
  }
  return r;
}

} // namespace

BiJet bi_add(const BiJet& a, const BiJet& b) {
  require_same_shape(a, b);
  BiJet r = a;
  for (size_t i = 0; i < r.t.size(); ++i) r.t[i] += b.t[i];
  return r;
}

BiJet bi_sub(const BiJet& a, const BiJet& b) {
  require_same_shape(a, b);
  BiJet r = a;
  for (size_t i = 0; i < r.t.size(); ++i) r.t[i] -= b.t[i];
  return r;
}

BiJet bi_mul(const BiJet& a, const BiJet& b) {
  require_same_shape(a, b);
  BiJet r(a.x, a.y, a.kmax, a.lmax);
  for (int i = 0; i <= a.kmax; ++i)
    for (int j = 0; j <= a.lmax; ++j)
      for (int p = 0; p <= a.kmax - i; ++p)
        for (int q = 0; q <= a.lmax - j; ++q)
          r.at(i + p, j + q) += a.coeff(i, j) * b.coeff(p, q);
  return r;
}

BiJet bi_div(const BiJet& n, const BiJet& d) {
  require_same_shape(n, d);
  if (d.coeff(0, 0) == cplx(0))
    throw DomainError("bi_div: vanishing constant term, use the shifted expansion");
  BiJet q(n.x, n.y, n.kmax, n.lmax);
  for (int a = 0; a <= n.kmax; ++a) {
    for (int b = 0; b <= n.lmax; ++b) {
      cplx acc = n.coeff(a, b);
      for (int i = 0; i <= a; ++i)
        for (int j = 0; j <= b; ++j)
          if (i || j) acc -= d.coeff(i, j) * q.coeff(a - i, b - j);
      q.at(a, b) = acc / d.coeff(0, 0);
    }
  }
  return q;
}

BiExpr bi_expr_from_name(const std::string& name) {
  if (name == "quarter") return BiExpr::quarter;
  if (name == "fx_fy") return BiExpr::fx_fy;
  if (name == "fxy_fx") return BiExpr::fxy_fx;
  if (name == "fxy_fy") return BiExpr::fxy_fy;
  if (name == "sum_over_xpy") return BiExpr::sum_over_xpy;
  if (name == "diff_over_x") return BiExpr::diff_over_x;
  if (name == "diff_over_y") return BiExpr::diff_over_y;
  throw ParseError("unknown bivariate expression: " + name);
}

BiJet bijet_eval(BiExpr expr, cplx x, cplx y, int k, int l) {
  if (k < 0 || l < 0) throw DomainError("bijet_eval: negative order");
  auto gate = [](cplx den, const char* what) -> bool {
    double m = std::abs(den);
    if (m < LIMIT_TRIGGER) return true; // at the excluded point: continuous extension
    if (m <= DELTA_POLE) throw DomainError(std::string(what) + " within DELTA_POLE of 0");
    return false;
  };
  switch (expr) {
    case BiExpr::quarter:
      return of_const(0.25, x, y, k, l);
    case BiExpr::fx_fy:
      return bi_mul(of_f_x(x, y, k, l), of_f_y(x, y, k, l));
    case BiExpr::fxy_fx:
      return bi_mul(of_f_xpy(x, y, k, l), of_f_x(x, y, k, l));
    case BiExpr::fxy_fy:
      return bi_mul(of_f_xpy(x, y, k, l), of_f_y(x, y, k, l));
    case BiExpr::sum_over_xpy:
      if (gate(x + y, "x+y")) return limit_sum_over_xpy(x, y, k, l);
      return bi_div(bi_add(of_f_x(x, y, k, l), of_f_y(x, y, k, l)), of_x_plus_y(x, y, k, l));
    case BiExpr::diff_over_x:
      if (gate(x, "x")) return limit_diff_over_x(y, k, l);
      return bi_div(bi_sub(of_f_xpy(x, y, k, l), of_f_y(x, y, k, l)), of_var_x(x, y, k, l));
    case BiExpr::diff_over_y:
      if (gate(y, "y")) return limit_diff_over_y(x, k, l);
      return bi_div(bi_sub(of_f_xpy(x, y, k, l), of_f_x(x, y, k, l)), of_var_y(x, y, k, l));
  }
  throw DomainError("bijet_eval: unreachable expression");
}

} // namespace dynr
