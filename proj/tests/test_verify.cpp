#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>

#include <json.hpp>

#include "dynr/rmat.hpp"
#include "dynr/verify.hpp"

using namespace dynr;

TEST_CASE("omega parsing: coordinates") {
  LieAlgebra a = catalog("sl2");
  Vector v = parse_omega_vector("0.5, -1, 2i", a);
  CHECK(v(0) == cplx(0.5));
  CHECK(v(1) == cplx(-1.0));
  CHECK(v(2) == cplx(0, 2));
  CHECK_THROWS_AS(parse_omega_vector("1,2", a), ParseError);
  CHECK_THROWS_AS(parse_omega_vector("1,2,zz", a), ParseError);
}

TEST_CASE("omega parsing: label combinations") {
  LieAlgebra a = catalog("sl2");
  Vector v = parse_omega_vector("0.3*H + 1.2*E", a);
  CHECK(v(0) == cplx(0.3));
  CHECK(v(1) == cplx(1.2));
  CHECK(v(2) == cplx(0));
  Vector w = parse_omega_vector("3.14159265i*H", a);
  CHECK(w(0) == cplx(0, 3.14159265));
  Vector u = parse_omega_vector("E - F", a);
  CHECK(u(1) == cplx(1.0));
  CHECK(u(2) == cplx(-1.0));
  Vector z = parse_omega_vector("2*H - 3*H", a);
  CHECK(z(0) == cplx(-1.0));
  CHECK_THROWS_AS(parse_omega_vector("1.0*Q", a), ParseError);
}

TEST_CASE("omega list: seeded draws are deterministic and admissible") {
  LieAlgebra a = catalog("sl2");
  RunConfig cfg;
  cfg.omega = "random:5:99";
  auto o1 = omega_list(cfg, a);
  auto o2 = omega_list(cfg, a);
  REQUIRE(o1.size() == 5);
  for (size_t i = 0; i < 5; ++i) {
    CHECK((o1[i] - o2[i]).norm() == 0.0);
    CHECK(domain_check(a, o1[i]));
  }
  cfg.omega = "random:x:1";
  CHECK_THROWS_AS(omega_list(cfg, a), ParseError);
  cfg.omega = "random:0:1";
  CHECK_THROWS_AS(omega_list(cfg, a), ParseError);
  // a widened pole exclusion rejects draws; an impossible one is reported
  cfg.omega = "random:2:9";
  cfg.delta_pole = 8.0; // every sl2 draw has |eigenvalue - 2 pi i k| < 8
  CHECK_THROWS_AS(omega_list(cfg, a), DomainError);
}

TEST_CASE("domain gate honors a custom exclusion distance") {
  LieAlgebra a = catalog("sl2");
  Vector w = Vector::Zero(3);
  w(0) = cplx(0, 2.8); // ad eigenvalues {0, +-5.6i}, distance ~0.68 to 2 pi i
  CHECK(domain_check(a, w));
  CHECK(!domain_check(a, w, 1.0));
}

TEST_CASE("run: passing configuration") {
  RunConfig cfg;
  cfg.algebra = "sl2";
  cfg.omega = "random:3:42";
  cfg.suites = {"validate", "rmatrix", "cdybe"};
  VerificationReport rep = run(cfg);
  CHECK(rep.pass);
  REQUIRE(rep.suites.size() == 3);
  // report sorted by suite name
  CHECK(rep.suites[0].name == "cdybe");
  CHECK(rep.suites[1].name == "rmatrix");
  CHECK(rep.suites[2].name == "validate");
  for (const auto& s : rep.suites) CHECK(s.pass);
}

TEST_CASE("run: domain violation marks the suite failed") {
  RunConfig cfg;
  cfg.algebra = "sl2";
  cfg.omega = "3.14159265358979312i*H"; // ad eigenvalues {0, +-2 pi i}
  cfg.suites = {"cdybe"};
  VerificationReport rep = run(cfg);
  CHECK(!rep.pass);
  REQUIRE(rep.suites.size() == 1);
  CHECK(!rep.suites[0].error.empty());
  // scaled toward the origin it passes again
  cfg.omega = "2.82743338823081i*H"; // 0.9 * pi
  rep = run(cfg);
  CHECK(rep.pass);
}

TEST_CASE("run: unknown suites and algebras are configuration errors") {
  RunConfig cfg;
  cfg.suites = {"chaos"};
  CHECK_THROWS_AS(run(cfg), ParseError);
  cfg.suites.clear();
  cfg.algebra = "e8";
  CHECK_THROWS_AS(run(cfg), ParseError);
}

TEST_CASE("run: realness needs a real algebra") {
  RunConfig cfg;
  cfg.algebra = "sl2";
  cfg.omega = "random:2:7";
  cfg.suites = {"realness"};
  VerificationReport rep = run(cfg);
  CHECK(!rep.pass);
  cfg.algebra = "sl2_real";
  rep = run(cfg);
  CHECK(rep.pass);
}

TEST_CASE("identities and uniqueness suites") {
  RunConfig cfg;
  cfg.algebra = "sl2";
  cfg.suites = {"identities", "uniqueness"};
  cfg.max_order = 3;
  VerificationReport rep = run(cfg);
  CHECK(rep.pass);
}

TEST_CASE("json rendering is bitwise deterministic") {
  RunConfig cfg;
  cfg.algebra = "oscillator";
  cfg.omega = "random:2:11";
  cfg.suites = {"validate", "cdybe", "equivariance"};
  cfg.output = "json";
  std::string j1 = render_json(run(cfg));
  std::string j2 = render_json(run(cfg));
  CHECK(j1 == j2);
  CHECK(j1.find("\"schema_version\": 1") != std::string::npos);
  CHECK(j1.find("\"pass\"") != std::string::npos);
  CHECK(j1.find("wall") == std::string::npos); // timings stay out of the json
}

TEST_CASE("json rendering round-trips losslessly") {
  RunConfig cfg;
  cfg.algebra = "sl2";
  cfg.omega = "random:2:13";
  cfg.suites = {"cdybe", "validate"};
  std::string body = render_json(run(cfg));
  auto parsed = nlohmann::ordered_json::parse(body);
  CHECK(parsed.dump(2) + "\n" == body);
  CHECK(parsed["schema_version"] == 1);
  CHECK(parsed["pass"] == true);
  for (const auto& s : parsed["suites"])
    for (const auto& c : s["cases"]) CHECK(c.contains("tolerance"));
}

TEST_CASE("text rendering marks the verdict") {
  RunConfig cfg;
  cfg.algebra = "abelian(3)";
  cfg.omega = "random:2:5";
  cfg.suites = {"validate", "cdybe"};
  std::string text = render_text(run(cfg));
  CHECK(text.find("OVERALL PASS") != std::string::npos);
  CHECK(text.find("cdybe") != std::string::npos);
}

TEST_CASE("default suites adapt to the algebra") {
  RunConfig cfg;
  cfg.algebra = "abelian(2)";
  cfg.omega = "random:1:3";
  cfg.max_order = 2;
  VerificationReport rep = run(cfg);
  bool has_realness = false;
  for (const auto& s : rep.suites) has_realness |= (s.name == "realness");
  CHECK(has_realness); // abelian catalog data is real
  CHECK(rep.pass);

  cfg.algebra = "sl2"; // complex draws: realness must be excluded by default
  rep = run(cfg);
  has_realness = false;
  for (const auto& s : rep.suites) has_realness |= (s.name == "realness");
  CHECK(!has_realness);
}

TEST_CASE("validation tolerances are overridable") {
  // decimal entries keep this algebra off the exact path, so residuals are
  // rounding-sized rather than zero and a zero tolerance must fail it
  const char* path = "verify_float_algebra.txt";
  {
    std::ofstream out(path);
    out << "dim 3\nform 1 1 8.0\nform 2 3 4.0\n"
           "bracket 1 2 2 2.0\nbracket 1 3 3 -2.0\nbracket 2 3 1 1.0\n";
  }
  RunConfig cfg;
  cfg.algebra = path;
  cfg.suites = {"validate"};
  CHECK(run(cfg).pass);
  cfg.tol_rank = 1e9; // |det B| = 128 is now "degenerate"
  CHECK(!run(cfg).pass);
  cfg.tol_rank = TOL_RANK;
  cfg.tol_exact = 0.0;
  // exact zero tolerance still passes here because the residual arithmetic on
  // these small integers is exact in doubles
  CHECK(run(cfg).pass);
  std::remove(path);
}

TEST_CASE("catalog listing") {
  std::string text = catalog_list_text();
  for (const char* name : {"abelian", "sl2", "sl2_real", "oscillator", "direct_sum"})
    CHECK(text.find(name) != std::string::npos);
}
