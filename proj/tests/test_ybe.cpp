#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "dynr/random.hpp"
#include "dynr/ybe.hpp"

using namespace dynr;

namespace {
Vector unit(int n, int j) {
  Vector v = Vector::Zero(n);
  v(j) = 1.0;
  return v;
}

std::vector<Vector> draws(const LieAlgebra& a, int count, uint64_t seed) {
  RandomStream rng(seed);
  std::vector<Vector> out;
  while (static_cast<int>(out.size()) < count) {
    Vector w = rng.vector_uniform(a.dim, true);
    if (domain_check(a, w)) out.push_back(std::move(w));
  }
  return out;
}
} // namespace

TEST_CASE("phi tensor") {
  LieAlgebra ab = catalog("abelian(3)");
  CHECK(phi_tensor(ab).max_abs() == 0.0);

  LieAlgebra a = catalog("sl2");
  ThreeTensor phi = phi_tensor(a);
  // phi_jkc = -1/4 f_jk^l B_lc; check one entry: (H,E,*): f_HE^E=2, B_EF=4
  CHECK(phi.get(0, 1, 2) == cplx(-2.0));
  CHECK(phi.get(1, 0, 2) == cplx(2.0));
  CHECK(phi_antisymmetry_residual(a) < 1e-12);
  CHECK(phi_invariance_residual(a) < 1e-12);
  LieAlgebra o = catalog("oscillator");
  CHECK(phi_antisymmetry_residual(o) < 1e-12);
  CHECK(phi_invariance_residual(o) < 1e-12);
}

TEST_CASE("operator-form equation vanishes on the abelian algebra") {
  LieAlgebra ab = catalog("abelian(3)");
  RandomStream rng(97);
  CdybeReport rep = cdybe_residual(ab, rng.vector_uniform(3, true));
  CHECK(rep.overall == 0.0);
  CHECK(mcdybe_tensor_residual(ab, rng.vector_uniform(3, true)) == 0.0);
}

TEST_CASE("operator-form equation on the catalog sweep") {
  for (const char* name : {"sl2", "oscillator", "direct_sum(sl2,sl2)"}) {
    LieAlgebra a = catalog(name);
    auto omegas = draws(a, 5, 42);
    for (const auto& w : omegas) {
      CdybeReport rep = cdybe_residual(a, w);
      INFO(name);
      CHECK(rep.overall < 1e-8);
      CHECK(rep.pair_residuals.rows() == a.dim);
      CHECK(rep.overall == rep.pair_residuals.maxCoeff());
    }
  }
}

TEST_CASE("tensor form tracks the operator form") {
  for (const char* name : {"sl2", "oscillator"}) {
    LieAlgebra a = catalog(name);
    auto omegas = draws(a, 5, 43);
    for (const auto& w : omegas) {
      double tens = mcdybe_tensor_residual(a, w);
      double oper = cdybe_residual(a, w).overall;
      INFO(name);
      CHECK(tens < 1e-7);
      CHECK((tens < 1e-7) == (oper < 1e-8));
    }
  }
}

TEST_CASE("an eight-dimensional mixed sum behaves the same") {
  LieAlgebra a = catalog("direct_sum(sl2,direct_sum(oscillator,abelian(1)))");
  REQUIRE(a.dim == 8);
  Vector w = draws(a, 1, 46)[0];
  CHECK(cdybe_residual(a, w).overall < 1e-8);
  CHECK(mcdybe_tensor_residual(a, w) < 1e-7);
}

TEST_CASE("nilpotent stress case") {
  LieAlgebra a = catalog("sl2");
  Vector e = unit(3, 1);
  RMatrixEval ev = canonical_r(a, e);
  CHECK((ev.R - ad(a, e) / 12.0).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(cdybe_residual(a, e).overall < 1e-10);
}

TEST_CASE("negative controls break the equation") {
  LieAlgebra a = catalog("sl2");
  Vector w = draws(a, 1, 44)[0];
  CHECK(cdybe_residual(a, w, RMethod::spectral, scaled_fun(1.05)).overall > 1e-3);
  // f with the -1/z term dropped, evaluated on the regular part of the spectrum
  CHECK(cdybe_residual(a, w, RMethod::spectral, coth_half_fun()).overall > 1e-3);
}

TEST_CASE("equivariance") {
  RandomStream rng(107);
  for (const char* name : {"sl2", "oscillator"}) {
    LieAlgebra a = catalog(name);
    auto omegas = draws(a, 5, 45);
    for (const auto& w : omegas) {
      Vector s = rng.vector_uniform(a.dim, true);
      CHECK(equivariance_residual(a, w, s) < 1e-8);
    }
    // commuting case: S = omega makes both sides vanish
    CHECK(equivariance_residual(a, omegas[0], omegas[0]) < 1e-10);
  }
}

TEST_CASE("lemma term decomposition on eigenvectors") {
  LieAlgebra a = catalog("sl2");
  double aa = 0.45;
  Vector w = aa * unit(3, 0);
  Vector h = unit(3, 0), e = unit(3, 1), f = unit(3, 2);

  SUBCASE("E, F: the lambda + mu = 0 branch") {
    auto terms = lemma_term_decomposition(a, w, e, f);
    REQUIRE(terms.size() == 7);
    Vector sum = Vector::Zero(3);
    for (const auto& t : terms) {
      INFO(t.name);
      CHECK((t.direct - t.closed).cwiseAbs().maxCoeff() < 1e-8);
      sum += static_cast<double>(t.sign) * t.direct;
    }
    CHECK(sum.cwiseAbs().maxCoeff() < 1e-8);
    // term5 closed form: -f'(-2a) [E,F]
    cplx fp = f_jet(cplx(-2 * aa), 1).deriv(1);
    for (const auto& t : terms)
      if (t.name == "gradient_pairing")
        CHECK((t.closed + fp * bracket(a, e, f)).cwiseAbs().maxCoeff() < 1e-10);
  }

  SUBCASE("E, H: generic branch, signed sum equals the addition combination") {
    auto terms = lemma_term_decomposition(a, w, e, h);
    cplx l(2 * aa), m(0);
    Vector sum = Vector::Zero(3);
    for (const auto& t : terms) sum += static_cast<double>(t.sign) * t.closed;
    // [X,Y] = [E,H] = -2E; the scalar multiple must be the addition residual
    // combination at (lambda, mu), which degenerates to 0 by the identity
    CHECK(sum.cwiseAbs().maxCoeff() < 1e-10);
  }

  SUBCASE("X = Y: brackets vanish and terms 2-4 coincide") {
    auto terms = lemma_term_decomposition(a, w, e, e);
    for (const auto& t : terms) {
      INFO(t.name);
      CHECK(t.direct.cwiseAbs().maxCoeff() < 1e-10);
    }
  }
}
