/*
 * Copyright 2026 The atomwall developers
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the atom-wall potential library. All handles are opaque;
 * every call returns an aw_status and leaves a message for aw_last_error()
 * on failure. Strings returned through char** are owned by the caller and
 * released with aw_string_free. */

#ifndef ATOMWALL_H
#define ATOMWALL_H

#include <stddef.h>
#include <stdint.h>

#if defined(ATOMWALL_BUILDING)
#define AW_API __attribute__((visibility("default")))
#else
#define AW_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum aw_status {
  AW_OK = 0,
  AW_ERR_CONFIG = 1,
  AW_ERR_DOMAIN = 2,
  AW_ERR_HIERARCHY = 3,
  AW_ERR_PARAMETER = 4,
  AW_ERR_POLE = 5,
  AW_ERR_CUTOFF_REQUIRED = 6,
  AW_ERR_WALL_CONTACT = 7,
  AW_ERR_QUADRATURE = 8,
  AW_ERR_COVARIANCE = 9,
  AW_ERR_DISCRETIZATION = 10,
  AW_ERR_IO = 11,
  AW_ERR_NULL = 12,
  AW_ERR_INTERNAL = 13
} aw_status;

typedef enum aw_regime {
  AW_REGIME_NEAR_FIELD = 0,
  AW_REGIME_VDW,
  AW_REGIME_CASIMIR_POLDER,
  AW_REGIME_CLASSICAL,
  AW_REGIME_SCREENED_VDW,
  AW_REGIME_SCREENED_CP,
  AW_REGIME_SCREENED_CANCELLED
} aw_regime;

typedef enum aw_method {
  AW_METHOD_QUADRATURE = 0,
  AW_METHOD_ASYMPTOTE,
  AW_METHOD_SCREENED
} aw_method;

typedef struct aw_config aw_config;
typedef struct aw_spectrum aw_spectrum;
typedef struct aw_engine aw_engine;
typedef struct aw_curve aw_curve;
typedef struct aw_report aw_report;

typedef struct aw_scales {
  double lambda_c;
  double a_b;
  double lambda_at;
  double lambda_ph;
} aw_scales;

typedef struct aw_phi {
  double x;
  double phi;
  int regime;
  int method;
  double rel_err;
  double phi_unscreened;
  int has_alternate;
  double phi_alternate;
  int alternate_method;
} aw_phi;

typedef struct aw_check {
  const char* group;
  const char* name;
  double expected;
  double observed;
  double tolerance;
  double sigma;
  int passed;
} aw_check;

AW_API const char* aw_version(void);
/* Message of the last failed call on this thread. */
AW_API const char* aw_last_error(void);
/* Distance at which the last QuadratureFailure occurred on this thread. */
AW_API double aw_last_failure_x(void);
AW_API void aw_string_free(char* s);
AW_API const char* aw_regime_name(int regime);
AW_API const char* aw_method_name(int method);
AW_API const char* aw_rng_name(void);

AW_API aw_status aw_config_new(aw_config** out);
AW_API void aw_config_free(aw_config* cfg);
AW_API aw_status aw_config_load(aw_config* cfg, const char* path);
AW_API aw_status aw_config_set(aw_config* cfg, const char* key, const char* value);
AW_API aw_status aw_config_get(const aw_config* cfg, const char* key, double* out);
AW_API aw_status aw_config_validate(const aw_config* cfg);
AW_API aw_status aw_config_format(const aw_config* cfg, char** out);
AW_API aw_status aw_config_scales(const aw_config* cfg, aw_scales* out);
/* AW_ERR_HIERARCHY when any adjacent length-scale ratio exceeds 0.1. */
AW_API aw_status aw_config_check_hierarchy(const aw_config* cfg);

AW_API aw_status aw_spectrum_build(int n_max, int continuum_bins, aw_spectrum** out);
AW_API aw_status aw_spectrum_load_csv(const char* path, aw_spectrum** out);
AW_API aw_status aw_spectrum_save_csv(const aw_spectrum* sp, const char* path);
AW_API void aw_spectrum_free(aw_spectrum* sp);
AW_API aw_status aw_spectrum_polarizability(const aw_spectrum* sp, double* out);
AW_API aw_status aw_spectrum_strength_sum(const aw_spectrum* sp, double* out);
AW_API aw_status aw_spectrum_moment(const aw_spectrum* sp, double* out);
AW_API aw_status aw_spectrum_lines(const aw_spectrum* sp, size_t* out);

AW_API aw_status aw_engine_new(const aw_config* cfg, const aw_spectrum* sp,
                               aw_engine** out);
AW_API void aw_engine_free(aw_engine* eng);
AW_API aw_status aw_engine_phi(const aw_engine* eng, double x, aw_phi* out);

/* Log-spaced grid of n points on [x_min, x_max]. */
AW_API aw_status aw_log_grid(double x_min, double x_max, int n, double* out);
AW_API aw_status aw_curve_compute(const aw_engine* eng, const double* xs, size_t n,
                                  int threads, aw_curve** out);
AW_API void aw_curve_free(aw_curve* curve);
AW_API aw_status aw_curve_size(const aw_curve* curve, size_t* out);
AW_API aw_status aw_curve_point(const aw_curve* curve, size_t i, aw_phi* out);
/* Writes the CSV with its manifest header; also the plot script when
 * script_path is non-null. */
AW_API aw_status aw_curve_write(const aw_curve* curve, const char* command,
                                const char* csv_path, const char* script_path);
/* Writes B(k) at the given k to CSV. general = 1 selects the finite-
 * temperature branch, which needs e_max in the engine's configuration. */
AW_API aw_status aw_kernel_write(const aw_engine* eng, const double* ks, size_t n,
                                 int general, const char* csv_path);
AW_API aw_status aw_plot_script_path(const char* csv_path, char** out);

AW_API aw_status aw_regime_table(const aw_config* cfg, const aw_spectrum* sp,
                                 char** text, int* boundary);

/* groups: comma-separated subset, or null/empty for all. */
AW_API aw_status aw_verify_run(const aw_config* cfg, const char* groups,
                               uint64_t seed, int n_paths, int threads,
                               aw_report** out);
AW_API void aw_report_free(aw_report* rep);
AW_API aw_status aw_report_size(const aw_report* rep, size_t* out);
AW_API aw_status aw_report_check(const aw_report* rep, size_t i, aw_check* out);
AW_API aw_status aw_report_passed(const aw_report* rep, int* out);
AW_API aw_status aw_report_text(const aw_report* rep, char** out);
AW_API aw_status aw_report_write_csv(const aw_report* rep, const char* path);

#ifdef __cplusplus
}
#endif

#endif
