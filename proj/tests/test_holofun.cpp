#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "dynr/bernoulli.hpp"
#include "dynr/canonical_f.hpp"
#include "dynr/random.hpp"

using dynr::cplx;
using dynr::f_eval;
using dynr::f_jet;

namespace {
const double PI = 3.14159265358979323846;

cplx direct_formula(cplx z) { return 0.5 / std::tanh(z / 2.0) - 1.0 / z; }

cplx series_formula(cplx z) {
  const auto& c = dynr::f_series_coeffs();
  cplx acc(0);
  for (int k = dynr::F_SERIES_TERMS - 1; k >= 0; --k) acc = acc * z + c[static_cast<size_t>(k)];
  return acc;
}
} // namespace

TEST_CASE("values of f") {
  CHECK(std::abs(f_eval(cplx(0))) == 0.0);
  // 0.5*coth(1) - 0.5, against the closed form and frozen digits
  cplx f2 = f_eval(cplx(2));
  CHECK(std::abs(f2 - direct_formula(cplx(2))) < 1e-15);
  CHECK(f2.real() == doctest::Approx(0.1565176427496657).epsilon(1e-12));
  CHECK(std::abs(f2.imag()) < 1e-16);
  // coth(i pi / 2) = -i cot(pi/2) = 0, so f(i pi) = i/pi
  cplx fipi = f_eval(cplx(0, PI));
  CHECK(std::abs(fipi - cplx(0, 1.0 / PI)) < 1e-14);
}

TEST_CASE("f is odd") {
  dynr::RandomStream rng(7);
  for (int t = 0; t < 50; ++t) {
    cplx z = 3.0 * rng.complex_uniform();
    if (std::abs(z) < 0.05 || dynr::pole_distance(z) < 0.05) continue;
    CHECK(std::abs(f_eval(-z) + f_eval(z)) < 1e-12);
  }
}

TEST_CASE("series and direct branches agree on the annulus") {
  dynr::RandomStream rng(11);
  int tested = 0;
  while (tested < 100) {
    cplx z = 1.5 * rng.complex_uniform();
    double m = std::abs(z);
    if (m <= 0.5 || m >= 1.5) continue;
    ++tested;
    CHECK(std::abs(series_formula(z) - direct_formula(z)) < 1e-13);
  }
}

TEST_CASE("poles are rejected") {
  CHECK_THROWS_AS(f_eval(cplx(0, 2 * PI)), dynr::PoleError);
  CHECK_THROWS_AS(f_eval(cplx(1e-8, -2 * PI)), dynr::PoleError);
  CHECK_THROWS_AS(f_jet(cplx(0, 4 * PI), 2), dynr::PoleError);
  CHECK_NOTHROW(f_eval(cplx(0, 2 * PI - 0.01)));
}

TEST_CASE("jets at the origin reproduce the Bernoulli coefficients") {
  dynr::Jet j = f_jet(cplx(0), 3);
  CHECK(std::abs(j.deriv(0)) == 0.0);
  CHECK(j.deriv(1).real() == doctest::Approx(1.0 / 12).epsilon(1e-15));
  CHECK(std::abs(j.deriv(2)) == 0.0);
  CHECK(j.deriv(3).real() == doctest::Approx(-1.0 / 120).epsilon(1e-14));
}

TEST_CASE("jet order zero matches f_eval") {
  dynr::RandomStream rng(13);
  for (int t = 0; t < 50; ++t) {
    cplx z = 3.0 * rng.complex_uniform();
    if (dynr::pole_distance(z) < 0.05) continue;
    CHECK(f_jet(z, 0).deriv(0) == f_eval(z));
  }
}

TEST_CASE("jet parity") {
  dynr::RandomStream rng(17);
  for (int t = 0; t < 20; ++t) {
    cplx z = 2.5 * rng.complex_uniform();
    if (std::abs(z) < 0.05 || dynr::pole_distance(z) < 0.05) continue;
    dynr::Jet jp = f_jet(z, 4), jm = f_jet(-z, 4);
    for (int k = 0; k <= 4; ++k) {
      double sign = (k % 2 == 0) ? -1.0 : 1.0; // (-1)^(k+1)
      CHECK(std::abs(jm.deriv(k) - sign * jp.deriv(k)) < 1e-12);
    }
  }
}

TEST_CASE("jet derivatives match central finite differences") {
  const double h = 1e-5;
  dynr::RandomStream rng(19);
  for (int t = 0; t < 10; ++t) {
    cplx z = 2.0 * rng.complex_uniform();
    if (std::abs(z) < 0.3 || dynr::pole_distance(z) < 0.3) continue;
    dynr::Jet j = f_jet(z, 4);
    // first derivative
    cplx fd1 = (f_eval(z + h) - f_eval(z - h)) / (2 * h);
    CHECK(std::abs(j.deriv(1) - fd1) < 1e-6);
    // higher orders from differencing jets one order down
    for (int k = 2; k <= 4; ++k) {
      cplx fdk = (f_jet(z + h, k - 1).deriv(k - 1) - f_jet(z - h, k - 1).deriv(k - 1)) / (2 * h);
      CHECK(std::abs(j.deriv(k) - fdk) < 1e-6);
    }
  }
}

TEST_CASE("addition formula vanishes for f") {
  CHECK(std::abs(dynr::addition_residual(cplx(0.7), cplx(0.3, -0.2))) < 1e-12);
  dynr::RandomStream rng(23);
  int tested = 0;
  while (tested < 200) {
    cplx x = 3.0 * rng.complex_uniform();
    cplx y = 3.0 * rng.complex_uniform();
    if (std::abs(x) > 3 || std::abs(y) > 3) continue;
    if (std::abs(x) < 0.05 || std::abs(y) < 0.05 || std::abs(x + y) < 0.05) continue;
    if (dynr::pole_distance(x) < 0.05 || dynr::pole_distance(y) < 0.05 ||
        dynr::pole_distance(x + y) < 0.05)
      continue;
    ++tested;
    CHECK(std::abs(dynr::addition_residual(x, y)) < 1e-12);
  }
}

TEST_CASE("addition residual is symmetric bit for bit") {
  dynr::RandomStream rng(29);
  for (int t = 0; t < 20; ++t) {
    cplx x = 2.0 * rng.complex_uniform();
    cplx y = 2.0 * rng.complex_uniform();
    if (std::abs(x) < 0.1 || std::abs(y) < 0.1 || std::abs(x + y) < 0.1) continue;
    CHECK(dynr::addition_residual(x, y) == dynr::addition_residual(y, x));
  }
}

TEST_CASE("perturbed functions break the addition formula") {
  auto g = [](cplx z) { return f_eval(z) + 0.01 * z; };
  CHECK(std::abs(dynr::addition_residual_with(g, cplx(0.7), cplx(0.3))) > 1e-4);
  auto g2 = [](cplx z) { return 1.05 * f_eval(z); };
  CHECK(std::abs(dynr::addition_residual_with(g2, cplx(0.7), cplx(0.3))) > 1e-4);
}

TEST_CASE("denominator guard") {
  CHECK_THROWS_AS(dynr::addition_residual(cplx(0.5), cplx(-0.5)), dynr::DomainError);
  CHECK_THROWS_AS(dynr::addition_residual(cplx(0), cplx(0.5)), dynr::DomainError);
}

TEST_CASE("series solution of the defining differential equation") {
  auto a = dynr::ode_series_solve(11);
  REQUIRE(a.size() == 11);
  CHECK(a[0] == dynr::Rational(1, 12));
  CHECK(a[2] == dynr::Rational(-1, 720));
  CHECK(a[4] == dynr::Rational(1, 30240));
  // solved without an oddness ansatz: even coefficients come out zero
  CHECK(a[1] == dynr::Rational(0));
  CHECK(a[3] == dynr::Rational(0));
  for (int m = 1; m <= 11; ++m) {
    dynr::Rational expect = (m % 2 == 1)
                                ? dynr::bernoulli(m + 1) / dynr::Rational::factorial(m + 1)
                                : dynr::Rational(0);
    CHECK(a[static_cast<size_t>(m - 1)] == expect);
  }
}

TEST_CASE("ode series extends to the full exact table") {
  // orders beyond the acceptance requirement, still exact
  auto a = dynr::ode_series_solve(23);
  for (int m = 1; m <= 23; m += 2)
    CHECK(a[static_cast<size_t>(m - 1)] ==
          dynr::bernoulli(m + 1) / dynr::Rational::factorial(m + 1));
}
