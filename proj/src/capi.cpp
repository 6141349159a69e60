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

#include "hellycover.h"

#include <cstring>
#include <string>

#include "hellycover/coverage.hpp"
#include "hellycover/io.hpp"
#include "hellycover/certificate.hpp"
#include "hellycover/svg.hpp"

using namespace hellycover;

struct hc_body {
  Body body;
};

struct hc_points {
  std::vector<Point2> points;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Translate the C++ error idiom into status codes at the boundary.
template <typename Fn>
hc_status guarded(Fn&& fn) {
  try {
    g_last_error.clear();
    fn();
    return HC_OK;
  } catch (const ParseError& e) {
    g_last_error = e.what();
    return HC_ERROR_PARSE;
  } catch (const ValidationError& e) {
    g_last_error = e.what();
    return HC_ERROR_INVALID_ARGUMENT;
  } catch (const BudgetExhausted& e) {
    g_last_error = e.what();
    return HC_ERROR_BUDGET_EXHAUSTED;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return HC_ERROR_INTERNAL;
  }
}

hc_status require(bool cond, const char* msg) {
  if (cond) return HC_OK;
  g_last_error = msg;
  return HC_ERROR_INVALID_ARGUMENT;
}

}  // namespace

extern "C" {

const char* hc_status_name(hc_status status) {
  switch (status) {
    case HC_OK: return "ok";
    case HC_ERROR_INVALID_ARGUMENT: return "invalid argument";
    case HC_ERROR_PARSE: return "parse error";
    case HC_ERROR_BUDGET_EXHAUSTED: return "budget exhausted";
    case HC_ERROR_VERIFICATION: return "verification failure";
    default: return "internal error";
  }
}

const char* hc_last_error(void) { return g_last_error.c_str(); }

void hc_string_free(char* s) { delete[] s; }

hc_status hc_body_parse(const char* json, hc_body** out) {
  if (hc_status st = require(json && out, "hc_body_parse: null argument"); st != HC_OK)
    return st;
  *out = nullptr;
  return guarded([&] { *out = new hc_body{parse_body_json(json)}; });
}

hc_status hc_body_to_json(const hc_body* body, char** out_json) {
  if (hc_status st = require(body && out_json, "hc_body_to_json: null argument");
      st != HC_OK)
    return st;
  return guarded([&] { *out_json = dup_string(body_to_json(body->body)); });
}

void hc_body_free(hc_body* body) { delete body; }

hc_status hc_points_parse(const char* json, hc_points** out) {
  if (hc_status st = require(json && out, "hc_points_parse: null argument");
      st != HC_OK)
    return st;
  *out = nullptr;
  return guarded([&] { *out = new hc_points{parse_points_json(json)}; });
}

void hc_points_free(hc_points* points) { delete points; }

hc_status hc_incircle(const hc_body* body, char** out_json) {
  if (hc_status st = require(body && out_json, "hc_incircle: null argument");
      st != HC_OK)
    return st;
  return guarded([&] {
    *out_json = dup_string(incircle_to_json(chebyshev_incircle(body->body)));
  });
}

hc_status hc_contact(const hc_body* body, const double* center_xy,
                     char** out_json) {
  if (hc_status st = require(body && out_json, "hc_contact: null argument");
      st != HC_OK)
    return st;
  return guarded([&] {
    if (center_xy) {
      const ContactReport rep =
          contact_report(body->body, {center_xy[0], center_xy[1]});
      *out_json = dup_string(contact_to_json(rep));
    } else {
      std::vector<ContactReport> reps;
      for (Point2 c : candidate_centers(body->body))
        reps.push_back(contact_report(body->body, c));
      *out_json = dup_string(contact_list_to_json(reps));
    }
  });
}

hc_status hc_alpha_profile_csv(const hc_body* body, double cx, double cy,
                               const double* radii, size_t count,
                               char** out_csv) {
  if (hc_status st = require(body && out_csv && (radii || count == 0),
                             "hc_alpha_profile_csv: null argument");
      st != HC_OK)
    return st;
  return guarded([&] {
    const AlphaProfile profile = alpha_profile(
        body->body, {cx, cy}, std::span<const double>(radii, count));
    *out_csv = dup_string(alpha_profile_to_csv(profile));
  });
}

hc_status hc_bound(const hc_body* body, char** out_json) {
  if (hc_status st = require(body && out_json, "hc_bound: null argument");
      st != HC_OK)
    return st;
  return guarded([&] { *out_json = dup_string(bound_to_json(body->body)); });
}

hc_status hc_construct(const hc_body* body, int k, int budget,
                       long long subset_budget, uint64_t seed,
                       char** out_cert_json) {
  if (hc_status st = require(body && out_cert_json, "hc_construct: null argument");
      st != HC_OK)
    return st;
  bool verdict = false;
  const hc_status st = guarded([&] {
    const CounterexampleCertificate cert =
        build_certificate(body->body, k, budget, subset_budget, seed);
    verdict = cert.verdict;
    *out_cert_json = dup_string(certificate_to_json(cert));
  });
  if (st != HC_OK) return st;
  if (verdict) return HC_OK;
  g_last_error = "construction completed but self-verification failed";
  return HC_ERROR_VERIFICATION;
}

hc_status hc_verify(const hc_body* body, const char* cert_json,
                    char** out_report_json, int* out_clean) {
  if (hc_status st = require(body && cert_json && out_report_json && out_clean,
                             "hc_verify: null argument");
      st != HC_OK)
    return st;
  const hc_status st = guarded([&] {
    const CounterexampleCertificate cert = parse_certificate_json(cert_json);
    const VerifyReport report = verify_certificate(body->body, cert);
    *out_report_json = dup_string(verify_report_to_json(report));
    *out_clean = report.clean ? 1 : 0;
  });
  if (st != HC_OK) return st;
  if (*out_clean) return HC_OK;
  g_last_error = "certificate failed verification";
  return HC_ERROR_VERIFICATION;
}

hc_status hc_cover(const hc_body* body, const hc_points* points,
                   const char* mode, int grid_n, int refine_iters, double tol,
                   char** out_json) {
  if (hc_status st = require(body && points && mode && out_json,
                             "hc_cover: null argument");
      st != HC_OK)
    return st;
  const std::string mode_s = mode;
  if (hc_status st = require(mode_s == "translate" || mode_s == "rigid",
                             "hc_cover: mode must be translate or rigid");
      st != HC_OK)
    return st;
  return guarded([&] {
    const CoverResult result =
        mode_s == "translate"
            ? translation_cover(points->points, body->body, tol)
            : rigid_cover(points->points, body->body, grid_n, refine_iters, tol);
    *out_json = dup_string(cover_to_json(result, mode_s));
  });
}

hc_status hc_helly_estimate(const hc_body* body, const hc_points* points,
                            long long budget, uint64_t seed, char** out_json) {
  if (hc_status st = require(body && points && out_json,
                             "hc_helly_estimate: null argument");
      st != HC_OK)
    return st;
  return guarded([&] {
    const HellyEstimate est =
        empirical_helly_number(points->points, body->body, budget, seed);
    *out_json = dup_string(
        helly_estimate_to_json(est, static_cast<int>(points->points.size())));
  });
}

hc_status hc_render_svg(const hc_body* body, const char* cert_json,
                        char** out_svg) {
  if (hc_status st = require(body && out_svg, "hc_render_svg: null argument");
      st != HC_OK)
    return st;
  return guarded([&] {
    const Scene scene =
        cert_json ? make_scene(body->body, parse_certificate_json(cert_json))
                  : make_scene(body->body);
    *out_svg = dup_string(render_svg(scene));
  });
}

}  // extern "C"
