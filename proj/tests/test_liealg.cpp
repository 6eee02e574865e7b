#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "dynr/liealg.hpp"
#include "dynr/random.hpp"

using namespace dynr;

namespace {
Vector unit(int n, int j) {
  Vector v = Vector::Zero(n);
  v(j) = 1.0;
  return v;
}
} // namespace

TEST_CASE("sl2 defining relations") {
  LieAlgebra a = catalog("sl2");
  REQUIRE(a.dim == 3);
  Vector h = unit(3, 0), e = unit(3, 1), f = unit(3, 2);
  CHECK((bracket(a, h, e) - 2.0 * e).norm() == 0.0);
  CHECK((bracket(a, h, f) + 2.0 * f).norm() == 0.0);
  CHECK((bracket(a, e, f) - h).norm() == 0.0);
  CHECK(bracket(a, e, e).norm() == 0.0);
}

TEST_CASE("oscillator defining relations") {
  LieAlgebra a = catalog("oscillator");
  REQUIRE(a.dim == 4);
  Vector n = unit(4, 0), ap = unit(4, 1), am = unit(4, 2), c = unit(4, 3);
  CHECK((bracket(a, n, ap) - ap).norm() == 0.0);
  CHECK((bracket(a, n, am) + am).norm() == 0.0);
  CHECK((bracket(a, ap, am) - c).norm() == 0.0);
  CHECK(bracket(a, c, n).norm() == 0.0);
  CHECK(bracket(a, c, ap).norm() == 0.0);
}

TEST_CASE("ad matrices") {
  LieAlgebra a = catalog("sl2");
  Matrix adH = ad(a, unit(3, 0));
  Matrix expect = Matrix::Zero(3, 3);
  expect(1, 1) = 2.0;
  expect(2, 2) = -2.0;
  CHECK((adH - expect).norm() == 0.0);

  Matrix adE = ad(a, unit(3, 1));
  // H -> -2E, E -> 0, F -> H; nilpotent of order three
  CHECK((adE * unit(3, 0) + 2.0 * unit(3, 1)).norm() == 0.0);
  CHECK((adE * unit(3, 1)).norm() == 0.0);
  CHECK((adE * unit(3, 2) - unit(3, 0)).norm() == 0.0);
  CHECK((adE * adE).norm() > 0.0);
  CHECK((adE * adE * adE).norm() == 0.0);

  LieAlgebra ab = catalog("abelian(4)");
  CHECK(ad(ab, Vector::Random(4)).norm() == 0.0);

  // ad(omega) omega = 0
  RandomStream rng(3);
  for (int t = 0; t < 10; ++t) {
    Vector w = rng.vector_uniform(3, true);
    CHECK((ad(a, w) * w).norm() < 1e-14);
  }
}

TEST_CASE("Killing form of sl2 and its dual") {
  LieAlgebra a = catalog("sl2");
  CHECK(a.form(0, 0) == cplx(8.0));
  CHECK(a.form(1, 2) == cplx(4.0));
  CHECK(a.form(2, 1) == cplx(4.0));
  CHECK(a.form(0, 1) == cplx(0.0));
  DualBasis d = dual_basis(a);
  CHECK(std::abs(d.D(0, 0) - 1.0 / 8) < 1e-15);
  CHECK(std::abs(d.D(1, 2) - 1.0 / 4) < 1e-15);
  CHECK(std::abs(d.D(2, 1) - 1.0 / 4) < 1e-15);
  // <T_j, T^k> = delta_j^k over the catalog
  for (const char* name : {"abelian(3)", "sl2", "oscillator", "direct_sum(sl2,sl2)"}) {
    LieAlgebra alg = catalog(name);
    Matrix D = dual_basis(alg).D;
    CHECK(((alg.form * D) - Matrix::Identity(alg.dim, alg.dim)).cwiseAbs().maxCoeff() < 1e-15);
    // raising then lowering is the identity
    CHECK(((D * alg.form) - Matrix::Identity(alg.dim, alg.dim)).cwiseAbs().maxCoeff() < 1e-15);
  }
}

TEST_CASE("transpose with respect to the form") {
  LieAlgebra a = catalog("sl2");
  Matrix id = Matrix::Identity(3, 3);
  CHECK((transpose_wrt_form(a, id) - id).norm() < 1e-15);

  RandomStream rng(5);
  for (int t = 0; t < 10; ++t) {
    Vector w = rng.vector_uniform(3, true);
    Matrix adw = ad(a, w);
    CHECK((transpose_wrt_form(a, adw) + adw).cwiseAbs().maxCoeff() < 1e-12);
    // involution and the defining property <A^T X, Y> = <X, A Y>
    Matrix A(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) A(i, j) = rng.complex_uniform();
    Matrix At = transpose_wrt_form(a, A);
    CHECK((transpose_wrt_form(a, At) - A).cwiseAbs().maxCoeff() < 1e-12);
    Vector x = rng.vector_uniform(3, true), y = rng.vector_uniform(3, true);
    CHECK(std::abs(a.pair(At * x, y) - a.pair(x, A * y)) < 1e-12);
  }

  LieAlgebra ab = catalog("abelian(3)"); // identity form: plain transpose
  Matrix A(3, 3);
  A << cplx(1, 2), cplx(0, 1), cplx(3), cplx(2), cplx(5, -1), cplx(0), cplx(1), cplx(1), cplx(7);
  CHECK((transpose_wrt_form(ab, A) - A.transpose()).norm() == 0.0);
}

TEST_CASE("validate accepts every catalog algebra exactly") {
  for (const char* name :
       {"abelian(3)", "sl2", "sl2_real", "oscillator", "direct_sum(sl2,sl2)",
        "direct_sum(oscillator,abelian(2))"}) {
    LieAlgebra a = catalog(name);
    ValidationReport rep = validate(a);
    INFO(name);
    CHECK(rep.exact_arithmetic);
    CHECK(rep.antisymmetry == 0.0);
    CHECK(rep.jacobi == 0.0);
    CHECK(rep.form_symmetry == 0.0);
    CHECK(rep.invariance == 0.0);
    CHECK(rep.det_form_abs > TOL_RANK);
    CHECK(rep.pass());
  }
}

TEST_CASE("perturbed structure constants fail the Jacobi check") {
  LieAlgebra a = catalog("sl2");
  a.exact.reset();
  a.fref(0, 1, 1) += 1e-3; // also breaks antisymmetry, but Jacobi must trip too
  a.fref(1, 0, 1) -= 1e-3;
  ValidationReport rep = validate(a);
  CHECK(rep.jacobi >= 1e-4);
  CHECK(!rep.pass());
}

TEST_CASE("invariance property on random elements") {
  RandomStream rng(7);
  for (const char* name : {"sl2", "oscillator", "direct_sum(sl2,sl2)"}) {
    LieAlgebra a = catalog(name);
    for (int t = 0; t < 100; ++t) {
      Vector x = rng.vector_uniform(a.dim, true);
      Vector y = rng.vector_uniform(a.dim, true);
      Vector z = rng.vector_uniform(a.dim, true);
      cplx lhs = a.pair(bracket(a, x, y), z) + a.pair(y, bracket(a, x, z));
      CHECK(std::abs(lhs) < TOL_EXACT * 100);
    }
  }
}

TEST_CASE("catalog names") {
  CHECK(catalog("abelian(3)").dim == 3);
  CHECK(catalog("direct_sum(sl2,sl2)").dim == 6);
  CHECK(catalog("direct_sum(sl2,direct_sum(oscillator,abelian(1)))").dim == 8);
  CHECK(catalog("direct_sum(sl2,sl2)").labels[3] == "H.2");
  CHECK_THROWS_AS(catalog("su3"), ParseError);
  CHECK_THROWS_AS(catalog("abelian"), ParseError);
  CHECK_THROWS_AS(catalog("sl2 junk"), ParseError);
  CHECK(catalog_names().size() == 5);
}

TEST_CASE("algebra file round trip") {
  // sl2 with the Killing form, rational entries
  std::string text = R"(# sl2 with Killing form
dim 3
label 1 H
label 2 E
label 3 F
form 1 1 8
form 2 3 4
bracket 1 2 2 2
bracket 1 3 3 -2
bracket 2 3 1 1
)";
  LieAlgebra a = algebra_from_string(text);
  CHECK(a.dim == 3);
  CHECK(a.labels[0] == "H");
  CHECK(a.exact.has_value());
  CHECK(validate(a).pass());
  CHECK(a.real_form);
  LieAlgebra ref = catalog("sl2");
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k) {
      CHECK(a.form(j, k) == ref.form(j, k));
      for (int l = 0; l < 3; ++l) CHECK(a.f(j, k, l) == ref.f(j, k, l));
    }
}

TEST_CASE("file parser rejects conflicting entries") {
  CHECK_THROWS_AS(algebra_from_string("dim 2\nbracket 1 2 1 1\nbracket 2 1 1 1\n"), ParseError);
  CHECK_THROWS_AS(algebra_from_string("dim 2\nbracket 1 1 2 1\n"), ParseError);
  CHECK_THROWS_AS(algebra_from_string("dim 2\nform 1 2 1\nform 2 1 2\n"), ParseError);
  CHECK_THROWS_AS(algebra_from_string("bracket 1 2 1 1\n"), ParseError);
  CHECK_THROWS_AS(algebra_from_string("dim 2\nbracket 1 2 5 1\n"), ParseError);
  CHECK_THROWS_AS(algebra_from_string("dim 2\nfrobnicate 1\n"), ParseError);
  // consistent duplicates are allowed
  CHECK_NOTHROW(algebra_from_string("dim 2\nbracket 1 2 1 1\nbracket 2 1 1 -1\n"));
}

TEST_CASE("file parser handles complex and rational scalars") {
  LieAlgebra a = algebra_from_string("dim 2\nform 1 1 1/2\nform 2 2 2\nbracket 1 2 2 0.5+1.5i\n");
  CHECK(a.form(0, 0) == cplx(0.5));
  CHECK(a.f(0, 1, 1) == cplx(0.5, 1.5));
  CHECK(a.f(1, 0, 1) == cplx(-0.5, -1.5));
  CHECK(!a.exact.has_value()); // a complex entry drops the exact mirror
  CHECK(!a.real_form);
  LieAlgebra b = algebra_from_string("dim 1\nform 1 1 3/4\n");
  CHECK(b.exact.has_value());
}

TEST_CASE("parse_scalar forms") {
  CHECK(parse_scalar("5/8").value == cplx(0.625));
  CHECK(parse_scalar("-3").value == cplx(-3.0));
  CHECK(parse_scalar("2.5e-1").value == cplx(0.25));
  CHECK(parse_scalar("i").value == cplx(0, 1));
  CHECK(parse_scalar("-2i").value == cplx(0, -2));
  CHECK(parse_scalar("1+2i").value == cplx(1, 2));
  CHECK(parse_scalar("1.5-0.5i").value == cplx(1.5, -0.5));
  CHECK(parse_scalar("3.14159265i").value == cplx(0, 3.14159265));
  CHECK_THROWS_AS(parse_scalar("zz"), ParseError);
  CHECK_THROWS_AS(parse_scalar("1/0"), ParseError);
}

TEST_CASE("dimension and singularity guards") {
  LieAlgebra a = catalog("sl2");
  CHECK_THROWS_AS(bracket(a, Vector::Zero(2), Vector::Zero(3)), DimensionError);
  CHECK_THROWS_AS(ad(a, Vector::Zero(4)), DimensionError);
  LieAlgebra d = catalog("abelian(2)");
  d.form(0, 0) = 0.0; // degenerate
  d.form(1, 1) = 0.0;
  d.exact.reset();
  CHECK_THROWS_AS(dual_basis(d), SingularFormError);
}
