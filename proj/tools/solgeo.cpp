// solgeo command-line front end. Talks to the library only through the C API.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "solgeo/solgeo.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;

struct Flags {
  std::string config_path;
  std::string out_path;
  std::optional<std::string> surface;
  std::optional<std::string> format;
  std::vector<int> resolutions;
  std::vector<std::string> ids;
  std::optional<double> tol;
  std::optional<double> c, eps, R, r, rho;
  std::optional<unsigned long long> seed;
};

// File values first, then any flag given on the command line.
nlohmann::json merged_config(const Flags& f) {
  nlohmann::json cfg = nlohmann::json::object();
  if (!f.config_path.empty()) {
    std::ifstream in(f.config_path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read config file '" + f.config_path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    cfg = nlohmann::json::parse(buf.str());
    if (!cfg.is_object()) throw std::runtime_error("config file must hold a JSON object");
  }
  if (f.surface) cfg["surface"] = *f.surface;
  if (f.format) cfg["format"] = *f.format;
  if (!f.resolutions.empty()) cfg["resolutions"] = f.resolutions;
  if (!f.ids.empty()) cfg["ids"] = f.ids;
  if (f.tol) cfg["tolerance"] = *f.tol;
  if (f.seed) cfg["seed"] = *f.seed;
  const std::pair<const char*, const std::optional<double>*> params[] = {
      {"c", &f.c}, {"eps", &f.eps}, {"R", &f.R}, {"r", &f.r}, {"rho", &f.rho}};
  for (const auto& [key, value] : params) {
    if (!*value) continue;
    if (!cfg.contains("params")) cfg["params"] = nlohmann::json::object();
    cfg["params"][key] = **value;
  }
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical checks of Simons-type identities for surfaces in Sol^3"};
  app.set_version_flag("--version", std::string(solgeo_version()));
  app.require_subcommand(1);
  app.fallthrough();

  Flags f;
  app.add_option("--config", f.config_path, "JSON run configuration; flags override its values");
  app.add_option("--out", f.out_path, "write the report to this file instead of stdout");
  app.add_option("--surface", f.surface, "catalog surface name");
  app.add_option("--format", f.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--res", f.resolutions, "grid resolutions, e.g. 32,64,128")->delimiter(',');
  app.add_option("--ids", f.ids, "identity tags, e.g. DELTA2,CODAZZI")->delimiter(',');
  app.add_option("--tol", f.tol, "residual tolerance for every selected check");
  app.add_option("--c", f.c, "leaf offset");
  app.add_option("--eps", f.eps, "graph amplitude");
  app.add_option("--R", f.R, "torus major radius");
  app.add_option("--r", f.r, "torus minor radius");
  app.add_option("--rho", f.rho, "sphere coordinate radius");
  app.add_option("--seed", f.seed, "seed for random frames");

  const char* commands[][2] = {
      {"catalog", "list the surface catalog"},
      {"curvature", "ambient curvature, vertical geodesics and surface curvature checks"},
      {"verify", "residuals of the identities at each resolution"},
      {"converge", "convergence-order study of the finite-difference identities"},
      {"scan", "gap-hypothesis scan and closed-surface integrals (JSON)"},
  };
  for (const auto& c : commands) app.add_subcommand(c[0], c[1]);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }
  const std::string command = app.get_subcommands().front()->get_name();

  std::string config_text;
  try {
    config_text = merged_config(f).dump();
  } catch (const std::exception& e) {
    std::cerr << "solgeo: " << e.what() << "\n";
    return kExitConfig;
  }

  solgeo_report* report = nullptr;
  const solgeo_status st = solgeo_run(command.c_str(), config_text.c_str(), &report);
  if (st != SOLGEO_OK) {
    std::cerr << "solgeo: " << solgeo_status_string(st) << ": " << solgeo_last_error() << "\n";
    return kExitConfig;
  }
  const int code = solgeo_report_exit_code(report);
  const std::string text(solgeo_report_text(report), solgeo_report_size(report));
  const std::string summary = solgeo_report_summary(report);
  solgeo_report_destroy(report);

  if (f.out_path.empty()) {
    std::cout << text << std::flush;
  } else {
    std::ofstream out(f.out_path, std::ios::binary | std::ios::trunc);
    out << text;
    if (!out) {
      std::cerr << "solgeo: cannot write '" << f.out_path << "'\n";
      return kExitConfig;
    }
  }
  std::cerr << "solgeo " << command << ": " << summary << "\n";
  return code == kExitOk ? kExitOk : code;
}
