#include "dynr/jet.hpp"

#include <array>
#include <cmath>

namespace dynr {

double factorial_d(int n) {
  static const std::array<double, 171> table = [] {
    std::array<double, 171> t{};
    t[0] = 1.0;
    for (size_t i = 1; i < t.size(); ++i) t[i] = t[i - 1] * static_cast<double>(i);
    return t;
  }();
  return table.at(static_cast<size_t>(n));
}

cplx Jet::taylor(int k) const { return derivs.at(static_cast<size_t>(k)) / factorial_d(k); }

std::vector<cplx> Jet::taylor_coeffs() const {
  std::vector<cplx> c(derivs.size());
  for (size_t k = 0; k < derivs.size(); ++k) c[k] = derivs[k] / factorial_d(static_cast<int>(k));
  return c;
}

Jet Jet::from_taylor(cplx point, const std::vector<cplx>& coeffs) {
  Jet j;
  j.point = point;
  j.derivs.resize(coeffs.size());
  for (size_t k = 0; k < coeffs.size(); ++k) j.derivs[k] = coeffs[k] * factorial_d(static_cast<int>(k));
  return j;
}

std::vector<cplx> series_add(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  std::vector<cplx> r(std::max(a.size(), b.size()), cplx(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

std::vector<cplx> series_sub(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  std::vector<cplx> r(std::max(a.size(), b.size()), cplx(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return r;
}

std::vector<cplx> series_scale(const std::vector<cplx>& a, cplx s) {
  std::vector<cplx> r(a);
  for (auto& c : r) c *= s;
  return r;
}

std::vector<cplx> series_mul(const std::vector<cplx>& a, const std::vector<cplx>& b, int m) {
  std::vector<cplx> r(static_cast<size_t>(m) + 1, cplx(0));
  for (int i = 0; i <= m && i < static_cast<int>(a.size()); ++i) {
    for (int j = 0; i + j <= m && j < static_cast<int>(b.size()); ++j) {
      r[static_cast<size_t>(i + j)] += a[static_cast<size_t>(i)] * b[static_cast<size_t>(j)];
    }
  }
  return r;
}

std::vector<cplx> series_div(const std::vector<cplx>& a, const std::vector<cplx>& b, int m) {
  if (b.empty() || b[0] == cplx(0))
    throw DomainError("series_div: vanishing leading coefficient");
  std::vector<cplx> q(static_cast<size_t>(m) + 1, cplx(0));
  for (int i = 0; i <= m; ++i) {
    cplx acc = i < static_cast<int>(a.size()) ? a[static_cast<size_t>(i)] : cplx(0);
    for (int j = 1; j <= i && j < static_cast<int>(b.size()); ++j) {
      acc -= b[static_cast<size_t>(j)] * q[static_cast<size_t>(i - j)];
    }
    q[static_cast<size_t>(i)] = acc / b[0];
  }
  return q;
}

std::vector<cplx> coth_half_series(cplx z0, int m) {
  std::vector<cplx> v(static_cast<size_t>(m) + 1, cplx(0));
  cplx th = std::tanh(z0 / 2.0);
  if (th == cplx(0)) throw PoleError("coth jet at a pole of coth(z/2)");
  v[0] = 1.0 / th;
  for (int k = 0; k < m; ++k) {
    // (coth w)' = 1 - coth^2 w, inner derivative dw/dz = 1/2
    cplx sq(0);
    for (int i = 0; i <= k; ++i) sq += v[static_cast<size_t>(i)] * v[static_cast<size_t>(k - i)];
    cplx rhs = (k == 0 ? cplx(1) : cplx(0)) - sq;
    v[static_cast<size_t>(k + 1)] = 0.5 * rhs / static_cast<double>(k + 1);
  }
  return v;
}

std::vector<cplx> inverse_z_series(cplx z0, int m) {
  if (z0 == cplx(0)) throw DomainError("inverse_z_series at 0");
  std::vector<cplx> w(static_cast<size_t>(m) + 1);
  cplx p = 1.0 / z0;
  for (int k = 0; k <= m; ++k) {
    w[static_cast<size_t>(k)] = (k % 2 == 0 ? p : -p);
    p /= z0;
  }
  return w;
}

} // namespace dynr
