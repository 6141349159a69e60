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

#include <variant>
#include <vector>

#include "hellycover/geometry.hpp"

namespace hellycover {

/// A planar convex body represented as a disc-polygon:
/// K = conv(core) + disc of radius rho (Minkowski sum).
///
/// The core is a list of points in strictly convex position, counterclockwise.
/// Degenerate cores (one point: a disc; two points: a stadium) are legal only
/// with rho > 0, so every Body has nonempty interior. The boundary alternates
/// straight offset edges and circular corner arcs of radius rho.
class Body {
 public:
  Body(std::vector<Point2> core, double rho, double tol = kDefaultTol);

  static Body disc(Point2 center, double radius) { return Body({center}, radius); }

  const std::vector<Point2>& core() const { return core_; }
  double rho() const { return rho_; }

  /// Characteristic length used to scale tolerances.
  double scale() const { return scale_; }

 private:
  std::vector<Point2> core_;
  double rho_;
  double scale_;
};

/// Offset edge of the boundary, traversed a -> b (CCW); n is the outward
/// unit normal shared with the source core edge.
struct EdgePiece {
  Point2 a, b;
  Point2 n;
};

/// Corner arc of radius rho centered at a core vertex, CCW from angle
/// `start` over `length` radians. For a single-point core this is the full
/// circle (length 2pi).
struct ArcPiece {
  Point2 center;
  double start;
  double length;
};

using BoundaryPiece = std::variant<EdgePiece, ArcPiece>;

/// Boundary pieces in traversal order. Bodies with rho = 0 produce edges only.
std::vector<BoundaryPiece> boundary_pieces(const Body& body);

/// Membership up to tolerance: distance(p, conv(core)) <= rho + tol.
bool contains(const Body& body, Point2 p, double tol = kDefaultTol);

/// Signed distance to K (negative strictly inside).
double signed_distance(const Body& body, Point2 p);

/// Radial boundary profile about an interior point c: the unique s > 0 with
/// c + s*(cos phi, sin phi) on the boundary. Computed piecewise (ray-segment
/// for edges, ray-circle for corner arcs). Throws if c is not interior.
double radial_distance(const Body& body, Point2 c, double phi);

/// The reflected body -K (negated core, same rho; negation preserves CCW).
Body reflect(const Body& body);

/// Rigid image of the body: core rotated by g.theta about the origin, then
/// translated by g.t; rho unchanged.
Body apply(const RigidMotion& g, const Body& body);

/// Equality up to a cyclic rotation of the core list, within tol.
bool approx_equal(const Body& a, const Body& b, double tol = kDefaultTol);

}  // namespace hellycover
