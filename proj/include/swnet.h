/* SPDX-License-Identifier: Apache-2.0
 * Copyright (c) 2026 the swnet developers
 *
 * C interface of the shallow-water canal-network library.  All functions
 * return a swnet_status; on failure swnet_last_error() describes the cause
 * for the calling thread.  Strings returned through char** are owned by the
 * caller and released with swnet_string_free().
 */

#ifndef SWNET_H
#define SWNET_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  SWNET_OK = 0,
  SWNET_ERR_NO_SOLUTION = 2, /* junction has no admissible trace pair */
  SWNET_ERR_DRY = 3,         /* dry state or vacuum encountered */
  SWNET_ERR_CONFIG = 4       /* bad input, parse or domain error */
} swnet_status;

const char* swnet_last_error(void);
void swnet_string_free(char* s);

/* ---- point queries ---- */

swnet_status swnet_froude(double h, double q, double g, double* out);

/* Writes the regime name (fluvial, torrential+, ...) into buf. */
swnet_status swnet_classify(double h, double q, double g, char* buf,
                            size_t buflen);

/* Middle state of the exact Riemann problem. */
swnet_status swnet_riemann_middle(double hl, double ql, double hr, double qr,
                                  double g, double* hm, double* qm);

/* ---- junction solver ---- */

/* coupling: "equal_height", "energy" or "momentum". */
swnet_status swnet_solve_junction(double hl, double ql, double hr, double qr,
                                  const char* coupling, double g,
                                  double* h_in, double* q_in, double* h_out,
                                  double* q_out, char* case_tag,
                                  size_t taglen);

/* ---- CSV exports (figure data) ---- */

swnet_status swnet_curves_csv(double h0, double q0, double g, char** out);

/* side: "in" or "out". */
swnet_status swnet_regions_csv(const char* side, double h, double q, double g,
                               char** out);

/* Unsupported regime pairs yield SWNET_OK with a labeled CSV row. */
swnet_status swnet_junction_csv(double hl, double ql, double hr, double qr,
                                const char* coupling, double g, char** out);

/* ---- scenarios ---- */

typedef struct swnet_scenario swnet_scenario;

swnet_status swnet_scenario_parse(const char* text, swnet_scenario** out);
swnet_status swnet_scenario_render(const swnet_scenario* s, char** out);
void swnet_scenario_free(swnet_scenario* s);

/* Runs the simulation, writes snapshots and report.json, and returns the
 * report JSON.  The status matches the CLI exit code. */
swnet_status swnet_scenario_run(const swnet_scenario* s, char** report_json);

#ifdef __cplusplus
}
#endif

#endif /* SWNET_H */
