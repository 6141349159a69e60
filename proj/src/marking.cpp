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

#include "hellycover/marking.hpp"

#include <algorithm>
#include <cmath>

namespace hellycover {

MarkedSet marked_set(const Body& body, Point2 center, double R) {
  if (!(R > 0.0)) throw ValidationError("marked_set: R must be positive");
  if (signed_distance(body, center) >= -1e-12 * body.scale())
    throw ValidationError("marked_set: center must be strictly interior");

  const double rho = body.rho();
  std::vector<AngularInterval> marked;
  bool full = false;

  // Map a CCW boundary sub-curve, given by its endpoints, to the angular
  // interval it subtends at the center. The angle along the boundary is a
  // monotone bijection onto [0, 2pi) because the center is interior.
  const auto add_curve = [&](Point2 from, Point2 to) {
    // Degenerate sub-curves would flip to ~2pi under angle rounding.
    if (distance(from, to) <= 1e-13 * body.scale()) return;
    const double a = angle_of(from - center);
    const double len = normalize_angle(angle_of(to - center) - a);
    if (len > 0.0) marked.push_back({a, len});
  };

  for (const BoundaryPiece& piece : boundary_pieces(body)) {
    if (full) break;
    if (const EdgePiece* e = std::get_if<EdgePiece>(&piece)) {
      // |a + t(b-a) - center|^2 = R^2, an upward parabola in t: the
      // sub-threshold set is the root interval clipped to [0, 1].
      const Point2 w = e->a - center;
      const Point2 d = e->b - e->a;
      const double A = dot(d, d);
      if (A <= 0.0) continue;
      const double B = 2.0 * dot(w, d);
      const double C = dot(w, w) - R * R;
      const double disc = B * B - 4.0 * A * C;
      if (disc <= 0.0) continue;  // the edge never gets closer than R
      const double sq = std::sqrt(disc);
      const double ta = std::max((-B - sq) / (2.0 * A), 0.0);
      const double tb = std::min((-B + sq) / (2.0 * A), 1.0);
      if (ta >= tb) continue;
      add_curve(e->a + ta * d, e->a + tb * d);
    } else {
      const ArcPiece& arc = std::get<ArcPiece>(piece);
      if (rho <= 0.0) continue;
      const Point2 w = arc.center - center;
      const double dist = norm(w);

      if (dist <= 1e-14 * body.scale()) {
        // Concentric piece: constant distance rho; strictly-less test.
        if (rho < R) {
          if (arc.length >= kTau) {
            full = true;
          } else {
            // Angles at the center coincide with the arc parameter here.
            marked.push_back({normalize_angle(arc.start), arc.length});
          }
        }
        continue;
      }

      // |w + rho*u(psi)|^2 = dist^2 + rho^2 + 2 rho dist cos(psi - mu),
      // so the sub-threshold condition is cos(psi - mu) < C.
      const double C = (R * R - dist * dist - rho * rho) / (2.0 * rho * dist);
      if (C <= -1.0) continue;
      const double mu = angle_of(w);
      const auto arc_point = [&](double psi) { return arc.center + rho * unit(psi); };
      if (C >= 1.0) {
        // Whole circle is closer than R.
        if (arc.length >= kTau) {
          full = true;
        } else {
          add_curve(arc_point(arc.start), arc_point(arc.start + arc.length));
        }
        continue;
      }
      const double d0 = std::acos(C);
      const AngularSet sub = angular_intersection(
          AngularSet::single(mu + d0, kTau - 2.0 * d0),
          AngularSet::single(arc.start, std::min(arc.length, kTau)));
      for (const AngularInterval& piece_arc : sub.arcs()) {
        add_curve(arc_point(piece_arc.start),
                  arc_point(piece_arc.start + piece_arc.length));
      }
    }
  }

  MarkedSet out;
  out.R = R;
  out.U = full ? AngularSet::full_circle() : AngularSet::from_intervals(marked);
  out.alpha = out.U.measure();
  return out;
}

AlphaProfile alpha_profile(const Body& body, Point2 center,
                           std::span<const double> radii) {
  AlphaProfile profile;
  profile.rows.reserve(radii.size());
  for (double R : radii)
    profile.rows.emplace_back(R, marked_set(body, center, R).alpha);
  std::sort(profile.rows.begin(), profile.rows.end());
  return profile;
}

}  // namespace hellycover
