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

#include <utility>
#include <vector>

#include "hellycover/angular.hpp"
#include "hellycover/body.hpp"

namespace hellycover {

/// The set of boundary directions (angles at an interior center) whose
/// boundary point lies strictly closer than R to that center, together with
/// its angular measure alpha. Stored angularly: the rotation argument
/// operates on subtended angles, not on the boundary points themselves.
struct MarkedSet {
  double R = 0.0;
  AngularSet U;
  double alpha = 0.0;  // == U.measure()
};

/// Compute U(R) = { phi : radial_distance(body, center, phi) < R } in closed
/// form, piece by piece: the distance-R crossings are quadratic roots on
/// offset edges and law-of-cosines solutions on corner arcs. Points at
/// distance exactly R are excluded (strict inequality).
MarkedSet marked_set(const Body& body, Point2 center, double R);

/// Rows (R, alpha(R)), sorted by R. alpha is non-decreasing in R.
struct AlphaProfile {
  std::vector<std::pair<double, double>> rows;
};

AlphaProfile alpha_profile(const Body& body, Point2 center,
                           std::span<const double> radii);

}  // namespace hellycover
