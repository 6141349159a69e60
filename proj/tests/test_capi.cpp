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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <string>

#include "hellycover.h"

namespace {

constexpr const char* kSquare2 =
    "{\"core\": [[-1, -1], [1, -1], [1, 1], [-1, 1]], \"radius\": 0}";
constexpr const char* kDisc1 = "{\"core\": [[0, 0]], \"radius\": 1}";

struct Free {
  char* s = nullptr;
  ~Free() { hc_string_free(s); }
};

}  // namespace

TEST_CASE("body handles: parse, serialize, free") {
  hc_body* body = nullptr;
  REQUIRE(hc_body_parse(kSquare2, &body) == HC_OK);
  REQUIRE(body != nullptr);

  Free json;
  REQUIRE(hc_body_to_json(body, &json.s) == HC_OK);
  CHECK(std::string(json.s).find("\"radius\": 0") != std::string::npos);
  hc_body_free(body);
}

TEST_CASE("parse errors carry the offending field") {
  hc_body* body = nullptr;
  CHECK(hc_body_parse("{\"radius\": 1}", &body) == HC_ERROR_PARSE);
  CHECK(body == nullptr);
  CHECK(std::string(hc_last_error()).find("body.core") != std::string::npos);

  CHECK(hc_body_parse(nullptr, &body) == HC_ERROR_INVALID_ARGUMENT);

  hc_points* pts = nullptr;
  CHECK(hc_points_parse("{\"points\": []}", &pts) == HC_ERROR_PARSE);
  CHECK(pts == nullptr);
}

TEST_CASE("incircle, contact and bound through the C boundary") {
  hc_body* body = nullptr;
  REQUIRE(hc_body_parse(kSquare2, &body) == HC_OK);

  Free inc;
  REQUIRE(hc_incircle(body, &inc.s) == HC_OK);
  CHECK(std::string(inc.s).find("\"r\": 1") != std::string::npos);

  Free contact;
  const double center[2] = {0.0, 0.0};
  REQUIRE(hc_contact(body, center, &contact.s) == HC_OK);
  CHECK(std::string(contact.s).find("\"discrete\": true") != std::string::npos);

  // inadmissible center is an argument error
  Free bad;
  const double off[2] = {0.9, 0.9};
  CHECK(hc_contact(body, off, &bad.s) == HC_ERROR_INVALID_ARGUMENT);

  Free bound;
  REQUIRE(hc_bound(body, &bound.s) == HC_OK);
  CHECK(std::string(bound.s).find("\"inf\"") != std::string::npos);
  hc_body_free(body);
}

TEST_CASE("alpha profile CSV through the C boundary") {
  hc_body* body = nullptr;
  REQUIRE(hc_body_parse(kSquare2, &body) == HC_OK);
  const double radii[] = {1.0, 1.25};
  Free csv;
  REQUIRE(hc_alpha_profile_csv(body, 0.0, 0.0, radii, 2, &csv.s) == HC_OK);
  const std::string text = csv.s;
  CHECK(text.rfind("R,alpha\n", 0) == 0);
  CHECK(text.find("1.25,5.14800887035") != std::string::npos);
  hc_body_free(body);
}

TEST_CASE("construct / verify round trip and determinism") {
  hc_body* body = nullptr;
  REQUIRE(hc_body_parse(kSquare2, &body) == HC_OK);

  Free cert1, cert2;
  REQUIRE(hc_construct(body, 3, 8, 2000, 7, &cert1.s) == HC_OK);
  REQUIRE(hc_construct(body, 3, 8, 2000, 7, &cert2.s) == HC_OK);
  CHECK(std::strcmp(cert1.s, cert2.s) == 0);

  Free report;
  int clean = 0;
  CHECK(hc_verify(body, cert1.s, &report.s, &clean) == HC_OK);
  CHECK(clean == 1);
  CHECK(std::string(report.s).find("\"clean\": true") != std::string::npos);

  // a corrupted certificate verifies dirty
  std::string tampered = cert1.s;
  const size_t pos = tampered.find("\"verdict\": true");
  REQUIRE(pos != std::string::npos);
  tampered.replace(pos, 15, "\"verdict\": true");
  const size_t apos = tampered.find("\"alpha\": ");
  REQUIRE(apos != std::string::npos);
  tampered.replace(apos, 9, "\"alpha\": 2.2 , \"ignored\": ");
  Free bad_report;
  int bad_clean = 1;
  CHECK(hc_verify(body, tampered.c_str(), &bad_report.s, &bad_clean) ==
        HC_ERROR_VERIFICATION);
  CHECK(bad_clean == 0);
  hc_body_free(body);
}

TEST_CASE("budget exhaustion surfaces as its own status") {
  hc_body* disc = nullptr;
  REQUIRE(hc_body_parse(kDisc1, &disc) == HC_OK);
  Free cert;
  CHECK(hc_construct(disc, 2, 8, 1000, 0, &cert.s) == HC_ERROR_BUDGET_EXHAUSTED);
  CHECK(std::string(hc_last_error()).find("alpha") != std::string::npos);
  hc_body_free(disc);
}

TEST_CASE("cover and helly estimate through the C boundary") {
  hc_body* body = nullptr;
  REQUIRE(hc_body_parse(kSquare2, &body) == HC_OK);
  hc_points* far = nullptr;
  REQUIRE(hc_points_parse("{\"points\": [[0, 0], [3, 0]]}", &far) == HC_OK);

  Free cover;
  REQUIRE(hc_cover(body, far, "translate", 0, 0, 1e-7, &cover.s) == HC_OK);
  CHECK(std::string(cover.s).find("\"found\": false") != std::string::npos);

  Free bad_mode;
  CHECK(hc_cover(body, far, "warp", 0, 0, 1e-7, &bad_mode.s) ==
        HC_ERROR_INVALID_ARGUMENT);

  Free est;
  REQUIRE(hc_helly_estimate(body, far, 200, 0, &est.s) == HC_OK);
  CHECK(std::string(est.s).find("\"k_max\": 1") != std::string::npos);

  hc_points_free(far);
  hc_body_free(body);
}

TEST_CASE("SVG rendering through the C boundary") {
  hc_body* body = nullptr;
  REQUIRE(hc_body_parse(kSquare2, &body) == HC_OK);
  Free svg;
  REQUIRE(hc_render_svg(body, nullptr, &svg.s) == HC_OK);
  CHECK(std::string(svg.s).find("<svg") != std::string::npos);
  hc_body_free(body);
}
