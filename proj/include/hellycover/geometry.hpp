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

#include <cmath>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hellycover {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTau = 2.0 * kPi;

/// Default geometric tolerance, in body units. Every boundary comparison in
/// the library is qualified by a tolerance; this is the library-wide default.
inline constexpr double kDefaultTol = 1e-9;

/// Input that violates a documented invariant (bad body, degenerate hull, ...).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an unexpected numeric situation indicates a bug, not bad input.
class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  constexpr Point2() = default;
  constexpr Point2(double xx, double yy) : x(xx), y(yy) {}

  constexpr Point2 operator+(Point2 r) const { return {x + r.x, y + r.y}; }
  constexpr Point2 operator-(Point2 r) const { return {x - r.x, y - r.y}; }
  constexpr Point2 operator-() const { return {-x, -y}; }
  constexpr Point2 operator*(double s) const { return {x * s, y * s}; }
  friend constexpr Point2 operator*(double s, Point2 p) { return p * s; }
};

constexpr double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point2 a) { return std::hypot(a.x, a.y); }
constexpr double norm2(Point2 a) { return a.x * a.x + a.y * a.y; }
inline double distance(Point2 a, Point2 b) { return norm(a - b); }

/// 90-degree counterclockwise rotation.
constexpr Point2 perp(Point2 a) { return {-a.y, a.x}; }

/// Unit vector at angle phi.
inline Point2 unit(double phi) { return {std::cos(phi), std::sin(phi)}; }

/// Angle of a nonzero vector, in [0, 2pi).
double angle_of(Point2 v);

/// Reduce an angle to [0, 2pi).
double normalize_angle(double a);

/// Rotation by theta about the origin, followed by translation by t.
struct RigidMotion {
  double theta = 0.0;  // normalized to [0, 2pi)
  Point2 t{0.0, 0.0};

  RigidMotion() = default;
  RigidMotion(double th, Point2 tr) : theta(normalize_angle(th)), t(tr) {}

  RigidMotion inverse() const;
};

Point2 apply(const RigidMotion& g, Point2 p);
std::vector<Point2> apply(const RigidMotion& g, std::span<const Point2> pts);

/// Rotate p about a pivot by theta.
Point2 rotate_about(Point2 p, Point2 pivot, double theta);

/// Convex hull with an explicit degeneracy flag. A hull of fewer than three
/// vertices (single point or segment) is returned as-is and flagged.
struct Hull {
  std::vector<Point2> points;  // counterclockwise, collinear points removed
  bool degenerate = false;
};

Hull convex_hull(std::span<const Point2> points);

/// Signed distance from p to a convex polygon given by CCW vertices
/// (negative inside, zero on the boundary). Degenerate polygons (1 or 2
/// vertices) yield the plain nonnegative distance to the point/segment.
double signed_polygon_distance(std::span<const Point2> poly, Point2 p);

/// Distance from p to segment [a, b].
double segment_distance(Point2 a, Point2 b, Point2 p);

/// Closest point on segment [a, b] to p.
Point2 segment_closest(Point2 a, Point2 b, Point2 p);

}  // namespace hellycover
