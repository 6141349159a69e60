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

#include <optional>
#include <string>

#include "hellycover/body.hpp"
#include "hellycover/certificate.hpp"
#include "hellycover/marking.hpp"

namespace hellycover {

/// Everything drawn comes from computed objects: the body outline from its
/// boundary pieces, the incircle from chebyshev_incircle, marked arcs from a
/// MarkedSet, points from a Configuration.
struct Scene {
  Body body;
  Point2 center;
  double r = 0.0;
  std::optional<MarkedSet> marked;
  std::optional<Configuration> points;
  std::vector<std::string> labels;
};

/// Body plus its incircle at the first candidate center.
Scene make_scene(const Body& body);

/// Body, incircle, marked arcs at the certificate's R, and the configuration.
Scene make_scene(const Body& body, const CounterexampleCertificate& cert);

/// Deterministic SVG 1.1: the body boundary as one closed path of line and
/// arc commands, the incircle as a circle element, marked intervals as red
/// strokes along the boundary, configuration points as dots.
std::string render_svg(const Scene& scene);

}  // namespace hellycover
