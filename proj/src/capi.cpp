#include "solgeo/solgeo.h"

#include <exception>
#include <new>
#include <string>

#include "solgeo/ambient.hpp"
#include "solgeo/chart.hpp"
#include "solgeo/commands.hpp"
#include "solgeo/error.hpp"
#include "solgeo/immersion.hpp"

struct solgeo_surface {
  solgeo::Chart chart;
};

struct solgeo_report {
  solgeo::cli::CommandOutput output;
};

namespace {

thread_local std::string last_error;

solgeo_status status_of(const solgeo::Error& e) {
  switch (e.code()) {
    case solgeo::ErrorCode::InvalidArgument:
      return SOLGEO_ERR_INVALID_ARGUMENT;
    case solgeo::ErrorCode::UnknownName:
      return SOLGEO_ERR_UNKNOWN_NAME;
    case solgeo::ErrorCode::Degenerate:
      return SOLGEO_ERR_DEGENERATE;
    case solgeo::ErrorCode::Precondition:
      return SOLGEO_ERR_PRECONDITION;
  }
  return SOLGEO_ERR_INTERNAL;
}

template <class F>
solgeo_status guarded(F&& fn) {
  try {
    fn();
    last_error.clear();
    return SOLGEO_OK;
  } catch (const solgeo::Error& e) {
    last_error = e.what();
    return status_of(e);
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
  } catch (const std::exception& e) {
    last_error = e.what();
  } catch (...) {
    last_error = "unknown failure";
  }
  return SOLGEO_ERR_INTERNAL;
}

solgeo_status null_argument(const char* what) {
  last_error = std::string(what) + " must not be null";
  return SOLGEO_ERR_INVALID_ARGUMENT;
}

void copy_matrix(const solgeo::Mat2& m, double out[4]) {
  out[0] = m(0, 0);
  out[1] = m(0, 1);
  out[2] = m(1, 0);
  out[3] = m(1, 1);
}

}  // namespace

extern "C" {

const char* solgeo_version(void) {
  static const std::string v(solgeo::cli::kVersion);
  return v.c_str();
}

const char* solgeo_last_error(void) { return last_error.c_str(); }

const char* solgeo_status_string(solgeo_status status) {
  switch (status) {
    case SOLGEO_OK:
      return "ok";
    case SOLGEO_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case SOLGEO_ERR_UNKNOWN_NAME:
      return "unknown name";
    case SOLGEO_ERR_DEGENERATE:
      return "degenerate point";
    case SOLGEO_ERR_PRECONDITION:
      return "precondition violated";
    case SOLGEO_ERR_INTERNAL:
      return "internal error";
  }
  return "unrecognised status";
}

solgeo_surface_params solgeo_default_params(void) {
  const solgeo::catalog::SurfaceParams p;
  return {p.c, p.eps, p.R, p.r, p.rho};
}

solgeo_status solgeo_sectional_curvature(const double u[3], const double v[3], double* out) {
  if (!u || !v || !out) return null_argument("vectors and output");
  return guarded([&] {
    *out = solgeo::sectional_curvature({u[0], u[1], u[2]}, {v[0], v[1], v[2]});
  });
}

solgeo_status solgeo_surface_create(const char* name, const solgeo_surface_params* params,
                                    solgeo_surface** out) {
  if (!name || !out) return null_argument("name and output");
  *out = nullptr;
  return guarded([&] {
    solgeo::catalog::SurfaceParams p;
    if (params) p = {params->c, params->eps, params->R, params->r, params->rho};
    *out = new solgeo_surface{solgeo::catalog::make(name, p)};
  });
}

void solgeo_surface_destroy(solgeo_surface* surface) { delete surface; }

const char* solgeo_surface_name(const solgeo_surface* surface) {
  return surface ? surface->chart.name.c_str() : "";
}

solgeo_status solgeo_surface_evaluate(const solgeo_surface* surface, double s, double t,
                                      solgeo_point_data* out) {
  if (!surface || !out) return null_argument("surface and output");
  return guarded([&] {
    const solgeo::SurfacePointData d = solgeo::evaluate_point(surface->chart, s, t);
    solgeo_point_data r{};
    r.position[0] = d.position.x;
    r.position[1] = d.position.y;
    r.position[2] = d.position.z;
    for (int k = 0; k < 3; ++k) r.normal[k] = d.xi[k];
    copy_matrix(d.g, r.g);
    copy_matrix(d.h, r.h);
    copy_matrix(d.A, r.A);
    r.f = d.f;
    r.norm_a2 = d.norm_a2;
    r.K = d.K;
    *out = r;
  });
}

solgeo_status solgeo_run(const char* command, const char* config_json, solgeo_report** out) {
  if (!command || !out) return null_argument("command and output");
  *out = nullptr;
  return guarded([&] {
    const auto cmd = solgeo::cli::parse_command(command);
    const std::string text = config_json && *config_json ? config_json : "{}";
    const auto cfg = solgeo::cli::parse_config(text);
    *out = new solgeo_report{solgeo::cli::run(cmd, cfg)};
  });
}

void solgeo_report_destroy(solgeo_report* report) { delete report; }

int solgeo_report_exit_code(const solgeo_report* report) { return report ? report->output.exit_code : 2; }

const char* solgeo_report_text(const solgeo_report* report) {
  return report ? report->output.report.c_str() : "";
}

size_t solgeo_report_size(const solgeo_report* report) { return report ? report->output.report.size() : 0; }

const char* solgeo_report_summary(const solgeo_report* report) {
  return report ? report->output.summary.c_str() : "";
}

}  // extern "C"
