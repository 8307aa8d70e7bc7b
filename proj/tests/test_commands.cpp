#include <doctest.h>

#include <cmath>
#include <limits>
#include <string>

#include <json.hpp>

#include "solgeo/commands.hpp"
#include "solgeo/error.hpp"

using namespace solgeo;
using namespace solgeo::cli;

namespace {

bool contains(const std::string& s, const std::string& needle) { return s.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("format_real") {
  CHECK(format_real(0.1) == "0.10000000000000001");
  CHECK(format_real(1.0) == "1");
  CHECK(format_real(-2.5e-300) == "-2.5e-300");
  CHECK(format_real(1e23) == "9.9999999999999992e+22");
  CHECK(format_real(std::numeric_limits<double>::quiet_NaN()) == "nan");
  CHECK(format_real(-std::numeric_limits<double>::infinity()) == "-inf");
  // %.17g round-trips.
  const double x = 1.0 / 3.0;
  CHECK(std::stod(format_real(x)) == x);
}

TEST_CASE("command names") {
  for (auto c : {Command::Catalog, Command::Curvature, Command::Verify, Command::Converge, Command::Scan})
    CHECK(parse_command(command_name(c)) == c);
  CHECK_THROWS_AS(parse_command("plot"), UnknownName);
}

TEST_CASE("config parsing") {
  const RunConfig d = parse_config("{}");
  CHECK(d.surface == "graph");
  CHECK_FALSE(d.resolutions.has_value());
  CHECK(d.order_min == kOrderMin);

  const RunConfig c = parse_config(
      R"({"surface":"torus","params":{"R":3,"r":0.25},"resolutions":[16,32,64],"ids":["DELTA2"],)"
      R"("tolerance":1e-6,"order_min":1.0,"order_max":3.0,"format":"json","seed":7})");
  CHECK(c.surface == "torus");
  CHECK(c.params.R == 3.0);
  CHECK(c.params.r == 0.25);
  CHECK(*c.resolutions == std::vector<int>{16, 32, 64});
  CHECK(c.ids == std::vector<std::string>{"DELTA2"});
  CHECK(*c.tolerance == 1e-6);
  CHECK(*c.format == Format::Json);
  CHECK(c.seed == 7u);

  CHECK_THROWS_AS(parse_config("not json"), InvalidArgument);
  CHECK_THROWS_AS(parse_config("[]"), InvalidArgument);
  CHECK_THROWS_AS(parse_config(R"({"surfce":"graph"})"), InvalidArgument);
  CHECK_THROWS_AS(parse_config(R"({"params":{"q":1}})"), InvalidArgument);
  CHECK_THROWS_AS(parse_config(R"({"resolutions":[32,16]})"), InvalidArgument);
  CHECK_THROWS_AS(parse_config(R"({"resolutions":[4]})"), InvalidArgument);
  CHECK_THROWS_AS(parse_config(R"({"resolutions":[16.5]})"), InvalidArgument);
  CHECK_THROWS_AS(parse_config(R"({"ids":["NOPE"]})"), UnknownName);
  CHECK_THROWS_AS(parse_config(R"({"tolerance":-1})"), InvalidArgument);
  CHECK_THROWS_AS(parse_config(R"({"format":"xml"})"), InvalidArgument);
  CHECK_THROWS_AS(parse_config(R"({"seed":-3})"), InvalidArgument);
  CHECK_THROWS_AS(parse_config(R"({"order_min":3,"order_max":2})"), InvalidArgument);
}

TEST_CASE("catalog report") {
  RunConfig cfg;
  const auto csv = run(Command::Catalog, cfg);
  CHECK(csv.exit_code == 0);
  CHECK(csv.report.rfind("# solgeo 1.0.0 catalog\n", 0) == 0);
  CHECK(contains(csv.report, "\nname,s_min,s_max"));
  CHECK(contains(csv.report, "\ntorus,"));
  CHECK_FALSE(contains(csv.report, "\r"));

  cfg.format = Format::Json;
  const auto json = nlohmann::json::parse(run(Command::Catalog, cfg).report);
  CHECK(json["version"] == "1.0.0");
  CHECK(json["surfaces"].size() == catalog::names().size());
}

TEST_CASE("reports are byte-deterministic") {
  RunConfig cfg;
  cfg.resolutions = std::vector<int>{16, 32};
  const auto a = run(Command::Verify, cfg);
  const auto b = run(Command::Verify, cfg);
  CHECK(a.report == b.report);
  cfg.format = Format::Json;
  CHECK(run(Command::Verify, cfg).report == run(Command::Verify, cfg).report);
  RunConfig scan_cfg;
  scan_cfg.surface = "torus";
  scan_cfg.resolutions = std::vector<int>{32};
  CHECK(run(Command::Scan, scan_cfg).report == run(Command::Scan, scan_cfg).report);
}

TEST_CASE("verify on the graph passes") {
  RunConfig cfg;
  const auto out = run(Command::Verify, cfg);
  CAPTURE(out.report);
  CHECK(out.exit_code == 0);
  CHECK(contains(out.report, "\nidentity,resolution,max_res,mean_res,order\n"));
  CHECK(contains(out.report, "# result DELTA2 pass"));
  CHECK(contains(out.report, "# result REMARK pass criterion=tolerance"));
  CHECK_FALSE(contains(out.report, "DELTA_CMC"));
}

TEST_CASE("verify on a vertical leaf passes, with DELTA_CMC included") {
  RunConfig cfg;
  cfg.surface = "leaf_x";
  const auto out = run(Command::Verify, cfg);
  CAPTURE(out.report);
  CHECK(out.exit_code == 0);
  CHECK(contains(out.report, "# result DELTA_CMC pass criterion=tolerance"));
  CHECK(contains(out.report, "# result NABLA_E3 pass criterion=order"));
}

TEST_CASE("DELTA_CMC is gated on non-CMC surfaces") {
  RunConfig cfg;
  cfg.surface = "torus";
  cfg.ids = {"DELTA_CMC"};
  cfg.resolutions = std::vector<int>{16};
  CHECK_THROWS_AS(run(Command::Verify, cfg), PreconditionViolated);
}

TEST_CASE("tolerance and order failures give exit code 1") {
  RunConfig cfg;
  cfg.ids = {"DELTA2"};
  cfg.resolutions = std::vector<int>{16, 32, 64};
  cfg.tolerance = 1e-30;
  cfg.order_min = 3.0;
  cfg.order_max = 4.0;
  const auto out = run(Command::Converge, cfg);
  CHECK(out.exit_code == 1);
  CHECK(contains(out.report, "# result DELTA2 fail criterion=fail"));
  cfg.format = Format::Json;
  const auto j = nlohmann::json::parse(run(Command::Converge, cfg).report);
  CHECK(j["pass"] == false);
  CHECK(j["identities"][0]["criterion"] == "fail");
}

TEST_CASE("converge needs three resolutions and lists FD identities only") {
  RunConfig cfg;
  cfg.resolutions = std::vector<int>{16, 32};
  CHECK_THROWS_AS(run(Command::Converge, cfg), InvalidArgument);
  cfg.resolutions = std::vector<int>{16, 32, 64};
  cfg.format = Format::Json;
  const auto j = nlohmann::json::parse(run(Command::Converge, cfg).report);
  CHECK(j["identities"].size() == 10);
  for (const auto& id : j["identities"]) CHECK(id["kind"] == "finite_difference");
  CHECK(j["identities"][0]["rows"][2]["order"].is_number());
}

TEST_CASE("curvature checks") {
  RunConfig cfg;
  cfg.surface = "leaf_z";
  const auto out = run(Command::Curvature, cfg);
  CAPTURE(out.report);
  CHECK(out.exit_code == 0);
  CHECK(contains(out.report, "\nsectional_E1E2,1,1,"));
  cfg.surface = "leaf_x";
  CHECK(run(Command::Curvature, cfg).exit_code == 0);
  cfg.surface = "nowhere";
  CHECK_THROWS_AS(run(Command::Curvature, cfg), UnknownName);
}

TEST_CASE("scan report") {
  RunConfig cfg;
  cfg.surface = "torus";
  cfg.resolutions = std::vector<int>{64};
  const auto out = run(Command::Scan, cfg);
  CHECK(out.exit_code == 0);
  const auto j = nlohmann::json::parse(out.report);
  CHECK(j["quadrature"] == "closed");
  CHECK(j["open_question_flags"].size() == 3);
  CHECK(j["open_question_flags"][0]["id"] == "quartic_factor");
  CHECK(j["theorems"].size() == 4);
  CHECK(j["integrals"]["asserted"] == true);

  cfg.surface = "leaf_y";
  const auto leaf = nlohmann::json::parse(run(Command::Scan, cfg).report);
  CHECK(leaf["integrals"].is_null());
  CHECK(leaf["integrals_omitted"] == true);

  cfg.format = Format::Csv;
  CHECK_THROWS_AS(run(Command::Scan, cfg), InvalidArgument);
}
