#ifndef SOLGEO_SOLGEO_H
#define SOLGEO_SOLGEO_H

/* C interface to the solgeo library. All functions are thread-compatible;
 * the last-error message is kept per thread. */

#include <stddef.h>

#if defined(_WIN32)
#if defined(SOLGEO_BUILDING)
#define SOLGEO_API __declspec(dllexport)
#else
#define SOLGEO_API __declspec(dllimport)
#endif
#else
#define SOLGEO_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum solgeo_status {
  SOLGEO_OK = 0,
  SOLGEO_ERR_INVALID_ARGUMENT = 1,
  SOLGEO_ERR_UNKNOWN_NAME = 2,
  SOLGEO_ERR_DEGENERATE = 3,
  SOLGEO_ERR_PRECONDITION = 4,
  SOLGEO_ERR_INTERNAL = 5
} solgeo_status;

typedef struct solgeo_surface solgeo_surface;
typedef struct solgeo_report solgeo_report;

typedef struct solgeo_surface_params {
  double c;   /* leaf offset */
  double eps; /* graph amplitude */
  double R;   /* torus major radius */
  double r;   /* torus minor radius */
  double rho; /* sphere coordinate radius */
} solgeo_surface_params;

/* Geometry at one chart point. Matrices are row-major 2x2 in chart
 * components; vectors in the frame E1, E2, E3. */
typedef struct solgeo_point_data {
  double position[3];
  double normal[3];
  double g[4];
  double h[4];
  double A[4];
  double f;
  double norm_a2;
  double K;
} solgeo_point_data;

SOLGEO_API const char* solgeo_version(void);
/* Message of the most recent failed call on this thread, or "". */
SOLGEO_API const char* solgeo_last_error(void);
SOLGEO_API const char* solgeo_status_string(solgeo_status status);

SOLGEO_API solgeo_surface_params solgeo_default_params(void);

/* Sectional curvature of the plane spanned by u and v (frame components). */
SOLGEO_API solgeo_status solgeo_sectional_curvature(const double u[3], const double v[3], double* out);

SOLGEO_API solgeo_status solgeo_surface_create(const char* name, const solgeo_surface_params* params,
                                               solgeo_surface** out);
SOLGEO_API void solgeo_surface_destroy(solgeo_surface* surface);
SOLGEO_API solgeo_status solgeo_surface_evaluate(const solgeo_surface* surface, double s, double t,
                                                 solgeo_point_data* out);
SOLGEO_API const char* solgeo_surface_name(const solgeo_surface* surface);

/* Runs a subcommand ("catalog", "curvature", "verify", "converge", "scan")
 * with a JSON configuration (NULL or "" for defaults). Configuration, name
 * and gating errors are returned as status codes; a completed run yields a
 * report whose exit code is 0 when every target was met and 1 otherwise. */
SOLGEO_API solgeo_status solgeo_run(const char* command, const char* config_json, solgeo_report** out);
SOLGEO_API void solgeo_report_destroy(solgeo_report* report);
SOLGEO_API int solgeo_report_exit_code(const solgeo_report* report);
SOLGEO_API const char* solgeo_report_text(const solgeo_report* report);
SOLGEO_API size_t solgeo_report_size(const solgeo_report* report);
SOLGEO_API const char* solgeo_report_summary(const solgeo_report* report);

#ifdef __cplusplus
}
#endif

#endif
