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
#include <vector>

#include "hellycover/angular.hpp"
#include "hellycover/body.hpp"

namespace hellycover {

enum class CenterSetKind { point, segment, polygon };

/// The set of admissible incircle centers: a point, a segment (two
/// endpoints), or a convex polygon (CCW vertices).
struct CenterSet {
  CenterSetKind kind = CenterSetKind::point;
  std::vector<Point2> points;
};

/// A largest inscribed circle: its radius and the full set of centers
/// realizing it (incircles may be non-unique in center).
struct Incircle {
  double r = 0.0;
  CenterSet centers;
  /// Optimal inward offset of the core polygon (r = clearance + rho).
  double clearance = 0.0;
};

/// Largest circle inscribable in the body. For a core with >= 3 points the
/// optimal offset solves a linear program over the core edges; eroding
/// conv(core) + rho*D by rho*D recovers conv(core), so r = s* + rho. For 1-
/// or 2-point cores the incircle is the rho-disc anywhere on conv(core).
Incircle chebyshev_incircle(const Body& body);

/// Inradius of the convex hull of a point set. Throws ValidationError when
/// the hull is degenerate (fewer than 3 non-collinear points).
double inradius_of_points(std::span<const Point2> points);

/// Analysis of the contact set between the body's boundary and the incircle
/// at a given admissible center. Contact arcs (positive 1-D measure) occur
/// exactly when a core vertex coincides with the center and rho equals r;
/// otherwise contact is a finite set of tangency points.
struct ContactReport {
  Point2 center;
  double r = 0.0;
  std::vector<double> tangent_points;  // angles at the center, sorted
  AngularSet contact_arcs;             // angular intervals at the center
  double alpha_contact = 0.0;          // arc length of boundary∩incircle
  double beta = 0.0;                   // incircle perimeter, 2*pi*r
  bool discrete = true;
  double lower_bound = 0.0;            // beta/alpha_contact, +inf when discrete
};

ContactReport contact_report(const Body& body, Point2 center,
                             double tol = kDefaultTol);

/// Centers worth analyzing: extreme points of the center set, its
/// centroid/midpoint, and core vertices that are themselves admissible
/// centers; deduplicated, order-stable.
std::vector<Point2> candidate_centers(const Body& body);

/// Halfplane {x : <n, x> <= c} with unit normal n.
struct HalfPlane {
  Point2 n;
  double c = 0.0;
};

/// Core edges as outward halfplanes (conv(core) = their intersection).
std::vector<HalfPlane> core_halfplanes(std::span<const Point2> core);

/// Clip a convex CCW polygon by a halfplane (Sutherland–Hodgman step).
std::vector<Point2> clip_polygon(std::span<const Point2> poly, const HalfPlane& hp);

}  // namespace hellycover
