/*
 * Copyright 2026 The lgsim Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to the lgsim simulator.
 *
 * Every fallible call returns an lgsim_status. On failure a thread-local
 * message is available from lgsim_last_error() until the next failing call
 * on the same thread. Handles are opaque, owned by the caller once returned,
 * and released with the matching *_free function (NULL is accepted).
 */

#ifndef LGSIM_H
#define LGSIM_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(LGSIM_BUILDING)
#    define LGSIM_API __declspec(dllexport)
#  else
#    define LGSIM_API __declspec(dllimport)
#  endif
#else
#  define LGSIM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lgsim_status {
    LGSIM_OK = 0,
    LGSIM_ERR_INVALID_ARGUMENT = 1, /* out-of-range parameters, NULL handles */
    LGSIM_ERR_PARSE = 2,            /* malformed config or result text */
    LGSIM_ERR_IO = 3,               /* unreadable or unwritable path */
    LGSIM_ERR_INVARIANT = 4,        /* a numerical invariant failed */
    LGSIM_ERR_INTERNAL = 5
} lgsim_status;

typedef struct lgsim_report lgsim_report;
typedef struct lgsim_config lgsim_config;
typedef struct lgsim_sweep lgsim_sweep;
typedef struct lgsim_checks lgsim_checks;

LGSIM_API const char *lgsim_version(void);
LGSIM_API const char *lgsim_last_error(void);
LGSIM_API const char *lgsim_status_name(lgsim_status status);

/* ---- single point ------------------------------------------------------ */

LGSIM_API lgsim_status lgsim_evaluate_point(double theta1, double theta2, double epsilon, lgsim_report **out);
LGSIM_API void lgsim_report_free(lgsim_report *report);

/* Persisted columns, in CSV order (theta1, theta2, epsilon, K12, ...). */
LGSIM_API size_t lgsim_field_count(void);
LGSIM_API const char *lgsim_field_name(size_t index);

/* Looks up a field by column name; also accepts S1, S3, naive_B1 and
 * oracle_max_deviation. */
LGSIM_API lgsim_status lgsim_report_get(const lgsim_report *report, const char *field, double *value);

/* Venn regions of (A1, A2, A3): solo[i] = S(Ai | rest); pair_cond holds
 * S(A1:A2|A3), S(A1:A3|A2), S(A2:A3|A1); center is S(A1:A2:A3). */
LGSIM_API lgsim_status lgsim_report_venn(const lgsim_report *report, double solo[3], double pair_cond[3],
                                         double *center);

/* p(x1 x2 x3) with index x1*4 + x2*2 + x3. */
LGSIM_API lgsim_status lgsim_report_distribution(const lgsim_report *report, double p[8]);

/* 1 when simulated entropies agree with the closed forms within 1e-6. */
LGSIM_API int lgsim_report_consistent(const lgsim_report *report);

/* ---- Monte Carlo --------------------------------------------------------- */

typedef struct lgsim_sample_result {
    uint64_t n;
    uint64_t seed;
    uint64_t counts[8];
    double k_hat[3];    /* K12, K23, K13 */
    double k_stderr[3]; /* sqrt((1 - K^2) / n) */
    double h_hat[7];    /* plug-in entropies: H1, H2, H3, H12, H23, H13, H123 */
} lgsim_sample_result;

LGSIM_API const char *lgsim_rng_description(void);
LGSIM_API lgsim_status lgsim_sample(double theta1, double theta2, double epsilon, uint64_t n, uint64_t seed,
                                    lgsim_sample_result *out);

/* ---- sweeps -------------------------------------------------------------- */

LGSIM_API lgsim_status lgsim_config_parse(const char *text, lgsim_config **out);
LGSIM_API lgsim_status lgsim_config_load(const char *path, lgsim_config **out);
LGSIM_API void lgsim_config_free(lgsim_config *config);
LGSIM_API const char *lgsim_config_output_path(const lgsim_config *config);

typedef struct lgsim_sweep_summary {
    size_t rows;
    double min_B1s, min_B2s, min_B3s;
    double min_B1p;
    double max_B1, max_B2, max_B3;
    double min_B4;
    size_t apparent_entropic;
    size_t apparent_standard;
    size_t apparent_violations;
    size_t inconsistent_rows;
    double max_oracle_deviation;
} lgsim_sweep_summary;

LGSIM_API lgsim_status lgsim_sweep_run(const lgsim_config *config, lgsim_sweep **out);
LGSIM_API void lgsim_sweep_free(lgsim_sweep *sweep);
LGSIM_API size_t lgsim_sweep_row_count(const lgsim_sweep *sweep);
LGSIM_API lgsim_status lgsim_sweep_value(const lgsim_sweep *sweep, size_t row, const char *field, double *value);
LGSIM_API lgsim_status lgsim_sweep_summary_get(const lgsim_sweep *sweep, lgsim_sweep_summary *out);
/* Writes the configured output file (and the samples sidecar if sampling). */
LGSIM_API lgsim_status lgsim_sweep_write(const lgsim_sweep *sweep, const lgsim_config *config);

/* ---- invariant suite ----------------------------------------------------- */

LGSIM_API lgsim_status lgsim_checks_run(lgsim_checks **out);
LGSIM_API void lgsim_checks_free(lgsim_checks *checks);
LGSIM_API size_t lgsim_checks_count(const lgsim_checks *checks);
/* Borrowed strings stay valid until lgsim_checks_free. */
LGSIM_API lgsim_status lgsim_checks_entry(const lgsim_checks *checks, size_t index, const char **name, int *passed,
                                          const char **detail);
LGSIM_API int lgsim_checks_all_passed(const lgsim_checks *checks);

#ifdef __cplusplus
}
#endif

#endif
