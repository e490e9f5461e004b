/* ======================================================================== */
/* Copyright 2026 The qpset Authors                                         */
/*                                                                          */
/* Licensed under the Apache License, Version 2.0 (the "License");          */
/* you may not use this file except in compliance with the License.         */
/* You may obtain a copy of the License at                                  */
/*                                                                          */
/*     http://www.apache.org/licenses/LICENSE-2.0                           */
/*                                                                          */
/* Unless required by applicable law or agreed to in writing, software      */
/* distributed under the License is distributed on an "AS IS" BASIS,        */
/* WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. */
/* See the License for the specific language governing permissions and      */
/* limitations under the License.                                           */
/* ======================================================================== */

/* C interface to the quasiperiodic point set generator.
 *
 * Every function returns a qpset_status. On failure a description of the
 * most recent error on the calling thread is available from
 * qpset_last_error(). Handles are opaque; each *_free accepts NULL.
 *
 * Typical use:
 *
 *   qpset_pipeline *p = NULL;
 *   qpset_pointset *s = NULL;
 *   if (qpset_pipeline_from_file("d10.cfg", &p) == QPSET_OK &&
 *       qpset_generate(p, &s) == QPSET_OK)
 *     qpset_write(p, s, "points.csv");
 *   qpset_pointset_free(s);
 *   qpset_pipeline_free(p);
 */

#ifndef QPSET_QPSET_H
#define QPSET_QPSET_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(QPSET_BUILDING_DLL)
#    define QPSET_API __declspec(dllexport)
#  else
#    define QPSET_API __declspec(dllimport)
#  endif
#else
#  define QPSET_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qpset_status {
  QPSET_OK = 0,
  QPSET_ERR_INVALID_ARGUMENT = 1,
  QPSET_ERR_INVALID_GROUP = 2,
  QPSET_ERR_NON_CONVERGENCE = 3,
  QPSET_ERR_ASYMMETRIC_CLUSTER = 4,
  QPSET_ERR_NOT_A_G_CLUSTER = 5,
  QPSET_ERR_EMPTY_STRIP = 6,
  QPSET_ERR_DIMENSION = 7,
  /* Generation hit max_points; the partial set is still returned. */
  QPSET_ERR_TRUNCATED = 8,
  QPSET_ERR_CONFIG_SYNTAX = 9,
  QPSET_ERR_CONFIG = 10,
  QPSET_ERR_IO = 11,
  QPSET_ERR_EMPTY_PATCH = 12,
  QPSET_ERR_TOO_FEW_POINTS = 13,
  QPSET_ERR_INTERNAL = 99
} qpset_status;

typedef struct qpset_pipeline qpset_pipeline;
typedef struct qpset_pointset qpset_pointset;
typedef struct qpset_report qpset_report;

typedef struct qpset_facet_summary {
  uint64_t tuples;
  double d_min;
  double d_max;
  uint64_t degenerate;
} qpset_facet_summary;

typedef struct qpset_bench_result {
  uint64_t points;
  double seconds;
  double points_per_second;
} qpset_bench_result;

QPSET_API const char *qpset_version(void);
QPSET_API const char *qpset_last_error(void);
QPSET_API const char *qpset_status_string(qpset_status status);

/* Pipelines: cluster, embedding and window built from a run configuration. */
QPSET_API qpset_status qpset_pipeline_from_text(const char *config_text,
                                                qpset_pipeline **out);
QPSET_API qpset_status qpset_pipeline_from_file(const char *config_path,
                                                qpset_pipeline **out);
QPSET_API void qpset_pipeline_free(qpset_pipeline *p);

QPSET_API int qpset_pipeline_dim(const qpset_pipeline *p);
QPSET_API int qpset_pipeline_k(const qpset_pipeline *p);
QPSET_API double qpset_pipeline_kappa(const qpset_pipeline *p);
/* Default output path from the configuration; "" when none is set. */
QPSET_API const char *qpset_pipeline_output(const qpset_pipeline *p);
QPSET_API qpset_status qpset_pipeline_set_output(qpset_pipeline *p,
                                                 const char *path);
/* "csv", "svg" or "xyz". */
QPSET_API qpset_status qpset_pipeline_set_format(qpset_pipeline *p,
                                                 const char *format);
QPSET_API qpset_status qpset_pipeline_set_threads(qpset_pipeline *p,
                                                  unsigned threads);

QPSET_API qpset_status qpset_facets(const qpset_pipeline *p,
                                    qpset_facet_summary *out);
/* Text form of the facet summary; free with qpset_report_free. */
QPSET_API qpset_status qpset_facets_report(const qpset_pipeline *p,
                                           qpset_report **out);

/* Membership of an integer superspace point (length k). */
QPSET_API qpset_status qpset_strip_contains(const qpset_pipeline *p,
                                            const int32_t *x, int *inside);
QPSET_API qpset_status qpset_oracle_contains(const qpset_pipeline *p,
                                             const int32_t *x, double eps,
                                             int *inside);

/* Point sets. */
QPSET_API qpset_status qpset_generate(const qpset_pipeline *p,
                                      qpset_pointset **out);
QPSET_API qpset_status qpset_pointset_read_csv(const qpset_pipeline *p,
                                               const char *path,
                                               qpset_pointset **out);
QPSET_API void qpset_pointset_free(qpset_pointset *s);
QPSET_API size_t qpset_pointset_size(const qpset_pointset *s);
/* Writes n coordinates of point i. */
QPSET_API qpset_status qpset_pointset_position(const qpset_pointset *s,
                                               size_t i, double *xyz);
/* Writes k lattice coordinates of point i's source. */
QPSET_API qpset_status qpset_pointset_source(const qpset_pointset *s,
                                             size_t i, int32_t *x);

/* Writes the set in the configured format; a NULL or empty path means the
 * configured output, and "-" or no configured output means stdout. */
QPSET_API qpset_status qpset_write(const qpset_pipeline *p,
                                   const qpset_pointset *s, const char *path);

/* Covering check, patch symmetry and (optionally) oracle agreement.
 * *passed is 1 when nothing failed. */
QPSET_API qpset_status qpset_validate(const qpset_pipeline *p,
                                      const qpset_pointset *s, int with_oracle,
                                      int *passed, qpset_report **out);

QPSET_API qpset_status qpset_bench(const qpset_pipeline *p,
                                   qpset_bench_result *out);

QPSET_API const char *qpset_report_text(const qpset_report *r);
QPSET_API void qpset_report_free(qpset_report *r);

#ifdef __cplusplus
}
#endif

#endif /* QPSET_QPSET_H */
