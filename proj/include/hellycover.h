/*
 * Copyright 2026 The hellycover authors
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

/*
 * C API of the hellycover shared library.
 *
 * Bodies and point sets are opaque handles created from JSON documents.
 * Structured results come back as heap-allocated strings (JSON, CSV or SVG)
 * that the caller releases with hc_string_free. Every function returns an
 * hc_status; on failure hc_last_error() holds a message naming the offending
 * field or condition (thread-local).
 */

#ifndef HELLYCOVER_H
#define HELLYCOVER_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hc_status {
  HC_OK = 0,
  HC_ERROR_INVALID_ARGUMENT = 1, /* violated precondition or invariant */
  HC_ERROR_PARSE = 2,            /* malformed input document */
  HC_ERROR_BUDGET_EXHAUSTED = 3, /* construction budget ran out */
  HC_ERROR_VERIFICATION = 4,     /* certificate failed verification */
  HC_ERROR_INTERNAL = 5
} hc_status;

typedef struct hc_body hc_body;
typedef struct hc_points hc_points;

const char* hc_status_name(hc_status status);

/* Message for the most recent failure on this thread; empty string if none. */
const char* hc_last_error(void);

void hc_string_free(char* s);

/* ---- handles ---- */

/* Body document: {"core": [[x,y],...], "radius": number}. */
hc_status hc_body_parse(const char* json, hc_body** out);
hc_status hc_body_to_json(const hc_body* body, char** out_json);
void hc_body_free(hc_body* body);

/* Point-set document: {"points": [[x,y],...]}. */
hc_status hc_points_parse(const char* json, hc_points** out);
void hc_points_free(hc_points* points);

/* ---- analyses (JSON/CSV/SVG string results) ---- */

/* Inradius and the set of admissible incircle centers. */
hc_status hc_incircle(const hc_body* body, char** out_json);

/* Contact report(s): at the given center, or over all candidate centers
 * when center_xy is NULL. center_xy points to {x, y}. */
hc_status hc_contact(const hc_body* body, const double* center_xy,
                     char** out_json);

/* CSV profile "R,alpha" over the given radii, about (cx, cy). */
hc_status hc_alpha_profile_csv(const hc_body* body, double cx, double cy,
                               const double* radii, size_t count,
                               char** out_csv);

/* min/max of the perimeter-to-contact lower bound over candidate centers. */
hc_status hc_bound(const hc_body* body, char** out_json);

/* Build a counterexample certificate for k; deterministic given the seed. */
hc_status hc_construct(const hc_body* body, int k, int budget,
                       long long subset_budget, uint64_t seed,
                       char** out_cert_json);

/* Re-check a stored certificate. *out_clean is 1 iff no violations. */
hc_status hc_verify(const hc_body* body, const char* cert_json,
                    char** out_report_json, int* out_clean);

/* mode is "translate" or "rigid". grid_n/refine_iters apply to rigid mode. */
hc_status hc_cover(const hc_body* body, const hc_points* points,
                   const char* mode, int grid_n, int refine_iters, double tol,
                   char** out_json);

/* Empirical Helly-number estimate for a concrete configuration. */
hc_status hc_helly_estimate(const hc_body* body, const hc_points* points,
                            long long budget, uint64_t seed, char** out_json);

/* SVG figure: body + incircle, plus marked arcs and points when a
 * certificate document is supplied (cert_json may be NULL). */
hc_status hc_render_svg(const hc_body* body, const char* cert_json,
                        char** out_svg);

#ifdef __cplusplus
}
#endif

#endif /* HELLYCOVER_H */
