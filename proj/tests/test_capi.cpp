#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <fstream>
#include <string>

#include "dynr.h"

TEST_CASE("catalog handles") {
  dynr_algebra* a = nullptr;
  REQUIRE(dynr_algebra_catalog("sl2", &a) == DYNR_OK);
  REQUIRE(a != nullptr);
  CHECK(dynr_algebra_dim(a) == 3);
  char buf[16];
  CHECK(dynr_algebra_label(a, 0, buf, sizeof buf) == DYNR_OK);
  CHECK(std::strcmp(buf, "H") == 0);
  CHECK(dynr_algebra_label(a, 7, buf, sizeof buf) == DYNR_E_INVALID_ARGUMENT);
  dynr_algebra_free(a);

  dynr_algebra* bad = nullptr;
  CHECK(dynr_algebra_catalog("nope", &bad) == DYNR_E_PARSE);
  CHECK(std::strlen(dynr_last_error()) > 0);
  CHECK(std::string(dynr_status_name(DYNR_E_PARSE)) == "parse_error");
}

TEST_CASE("validate through the C surface") {
  dynr_algebra* a = nullptr;
  REQUIRE(dynr_algebra_catalog("oscillator", &a) == DYNR_OK);
  int pass = 0;
  char* json = nullptr;
  REQUIRE(dynr_validate(a, &pass, &json) == DYNR_OK);
  CHECK(pass == 1);
  std::string body(json);
  CHECK(body.find("\"jacobi\"") != std::string::npos);
  CHECK(body.find("\"exact_arithmetic\": true") != std::string::npos);
  dynr_string_free(json);
  dynr_algebra_free(a);
}

TEST_CASE("algebra files through the C surface") {
  const char* path = "capi_test_algebra.txt";
  {
    std::ofstream out(path);
    out << "dim 2\nform 1 1 1\nform 2 2 1\n";
  }
  dynr_algebra* a = nullptr;
  REQUIRE(dynr_algebra_from_file(path, &a) == DYNR_OK);
  CHECK(dynr_algebra_dim(a) == 2);
  dynr_algebra_free(a);
  dynr_algebra* missing = nullptr;
  CHECK(dynr_algebra_from_file("no_such_file.txt", &missing) == DYNR_E_PARSE);
  std::remove(path);
}

TEST_CASE("run with a json config") {
  const char* cfg = R"({"algebra":"sl2","omega":"random:2:42","suites":["validate","cdybe"],
                        "output":"json","seed":42})";
  char* out = nullptr;
  int pass = 0;
  REQUIRE(dynr_run(cfg, &out, &pass) == DYNR_OK);
  CHECK(pass == 1);
  std::string body(out);
  CHECK(body.find("\"schema_version\": 1") != std::string::npos);
  CHECK(body.find("\"cdybe\"") != std::string::npos);
  dynr_string_free(out);

  // identical config gives identical bytes
  char* out2 = nullptr;
  REQUIRE(dynr_run(cfg, &out2, &pass) == DYNR_OK);
  CHECK(body == out2);
  dynr_string_free(out2);

  CHECK(dynr_run("{not json", &out, &pass) == DYNR_E_PARSE);
  CHECK(dynr_run(R"({"algebra":"sl2","suites":["zzz"]})", &out, &pass) == DYNR_E_PARSE);

  // domain violation: reported as a failing suite, not an error status
  const char* bad = R"({"algebra":"sl2","omega":"3.14159265358979312i*H","suites":["cdybe"]})";
  char* out3 = nullptr;
  REQUIRE(dynr_run(bad, &out3, &pass) == DYNR_OK);
  CHECK(pass == 0);
  CHECK(std::string(out3).find("FAIL") != std::string::npos);
  dynr_string_free(out3);
}

TEST_CASE("catalog list") {
  char* out = nullptr;
  REQUIRE(dynr_catalog_list(&out) == DYNR_OK);
  CHECK(std::string(out).find("oscillator") != std::string::npos);
  dynr_string_free(out);
  CHECK(dynr_catalog_list(nullptr) == DYNR_E_INVALID_ARGUMENT);
}

TEST_CASE("version string") { CHECK(std::string(dynr_version()).size() > 0); }
