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

#pragma once

#include <string>
#include <vector>

#include "hellycover/body.hpp"
#include "hellycover/coverage.hpp"
#include "hellycover/incircle.hpp"
#include "hellycover/certificate.hpp"
#include "hellycover/marking.hpp"

namespace hellycover {

/// Malformed or invalid input document; the message names the offending field.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// All serialized numbers use 12 significant digits ("%.12g"), so output is
/// byte-stable across runs. Infinities serialize as the string "inf".
std::string format_number(double v);

// ---- documents ----

Body parse_body_json(const std::string& text);
std::string body_to_json(const Body& body);

std::vector<Point2> parse_points_json(const std::string& text);
std::string points_to_json(std::span<const Point2> points);

std::string incircle_to_json(const Incircle& inc);
std::string contact_to_json(const ContactReport& rep);
std::string contact_list_to_json(std::span<const ContactReport> reps);

std::string alpha_profile_to_csv(const AlphaProfile& profile);
std::string alpha_profile_to_json(const AlphaProfile& profile, Point2 center);

std::string certificate_to_json(const CounterexampleCertificate& cert);
CounterexampleCertificate parse_certificate_json(const std::string& text);

std::string verify_report_to_json(const VerifyReport& report);
std::string cover_to_json(const CoverResult& result, const std::string& mode);
std::string bound_to_json(const Body& body);
std::string helly_estimate_to_json(const HellyEstimate& est, int point_count);

}  // namespace hellycover
