#include <doctest.h>

#include <cmath>
#include <cstring>
#include <string>

#include "solgeo/solgeo.h"

TEST_CASE("version and status strings") {
  CHECK(std::string(solgeo_version()) == "1.0.0");
  CHECK(std::string(solgeo_status_string(SOLGEO_OK)) != "");
  CHECK(std::string(solgeo_status_string(SOLGEO_ERR_PRECONDITION)) != std::string(solgeo_status_string(SOLGEO_OK)));
}

TEST_CASE("sectional curvature through the C API") {
  const double e1[3] = {1, 0, 0}, e2[3] = {0, 1, 0}, e3[3] = {0, 0, 1};
  double k = 0.0;
  REQUIRE(solgeo_sectional_curvature(e1, e3, &k) == SOLGEO_OK);
  CHECK(std::abs(k + 1.0) <= 1e-10);
  REQUIRE(solgeo_sectional_curvature(e1, e2, &k) == SOLGEO_OK);
  CHECK(std::abs(k - 1.0) <= 1e-10);
  CHECK(solgeo_sectional_curvature(e1, e1, &k) == SOLGEO_ERR_INVALID_ARGUMENT);
  CHECK(std::strlen(solgeo_last_error()) > 0);
  CHECK(solgeo_sectional_curvature(nullptr, e1, &k) == SOLGEO_ERR_INVALID_ARGUMENT);
  CHECK(solgeo_sectional_curvature(e1, e2, nullptr) == SOLGEO_ERR_INVALID_ARGUMENT);
  REQUIRE(solgeo_sectional_curvature(e2, e3, &k) == SOLGEO_OK);
  CHECK(std::string(solgeo_last_error()).empty());
}

TEST_CASE("surface handles") {
  const solgeo_surface_params p = solgeo_default_params();
  solgeo_surface* s = nullptr;
  REQUIRE(solgeo_surface_create("leaf_z", &p, &s) == SOLGEO_OK);
  REQUIRE(s != nullptr);
  CHECK(std::string(solgeo_surface_name(s)) == "leaf_z");
  solgeo_point_data d{};
  REQUIRE(solgeo_surface_evaluate(s, 0.1, -0.2, &d) == SOLGEO_OK);
  CHECK(std::abs(d.f) <= 1e-12);
  CHECK(std::abs(d.norm_a2 - 2.0) <= 1e-12);
  CHECK(std::abs(d.K) <= 1e-12);
  CHECK(std::abs(std::abs(d.normal[2]) - 1.0) <= 1e-12);
  CHECK(solgeo_surface_evaluate(s, 0.1, 0.2, nullptr) == SOLGEO_ERR_INVALID_ARGUMENT);
  solgeo_surface_destroy(s);
  solgeo_surface_destroy(nullptr);

  solgeo_surface* sphere = nullptr;
  REQUIRE(solgeo_surface_create("sphere", nullptr, &sphere) == SOLGEO_OK);
  // The pole of the spherical chart has a rank-deficient differential.
  CHECK(solgeo_surface_evaluate(sphere, 0.3, 0.0, &d) == SOLGEO_ERR_DEGENERATE);
  CHECK(solgeo_surface_evaluate(sphere, 0.3, 1.0, &d) == SOLGEO_OK);
  solgeo_surface_destroy(sphere);

  solgeo_surface* bad = nullptr;
  CHECK(solgeo_surface_create("klein_bottle", &p, &bad) == SOLGEO_ERR_UNKNOWN_NAME);
  CHECK(bad == nullptr);
  CHECK(solgeo_surface_create(nullptr, &p, &bad) == SOLGEO_ERR_INVALID_ARGUMENT);
  CHECK(solgeo_surface_create("graph", &p, nullptr) == SOLGEO_ERR_INVALID_ARGUMENT);
}

TEST_CASE("run and reports") {
  solgeo_report* r = nullptr;
  REQUIRE(solgeo_run("catalog", nullptr, &r) == SOLGEO_OK);
  CHECK(solgeo_report_exit_code(r) == 0);
  const std::string text(solgeo_report_text(r), solgeo_report_size(r));
  CHECK(text.rfind("# solgeo 1.0.0 catalog\n", 0) == 0);
  CHECK(std::strlen(solgeo_report_summary(r)) > 0);
  solgeo_report_destroy(r);
  solgeo_report_destroy(nullptr);

  r = nullptr;
  CHECK(solgeo_run("verify", R"({"surface":"torus","ids":["DELTA_CMC"],"resolutions":[16]})", &r) ==
        SOLGEO_ERR_PRECONDITION);
  CHECK(r == nullptr);
  CHECK(solgeo_run("verify", R"({"bogus":1})", &r) == SOLGEO_ERR_INVALID_ARGUMENT);
  CHECK(solgeo_run("verify", "{", &r) == SOLGEO_ERR_INVALID_ARGUMENT);
  CHECK(solgeo_run("dance", "", &r) == SOLGEO_ERR_UNKNOWN_NAME);
  CHECK(solgeo_run("verify", R"({"surface":"moon"})", &r) == SOLGEO_ERR_UNKNOWN_NAME);
  CHECK(solgeo_run(nullptr, "", &r) == SOLGEO_ERR_INVALID_ARGUMENT);
  CHECK(solgeo_run("catalog", "", nullptr) == SOLGEO_ERR_INVALID_ARGUMENT);

  REQUIRE(solgeo_run("verify", R"({"ids":["DELTA2"],"resolutions":[16,32],"tolerance":1e-30})", &r) ==
          SOLGEO_OK);
  CHECK(solgeo_report_exit_code(r) == 1);
  solgeo_report_destroy(r);
}
