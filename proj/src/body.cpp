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

#include "hellycover/body.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace hellycover {

namespace {

double body_scale(const std::vector<Point2>& core, double rho) {
  double s = std::max(1.0, rho);
  for (Point2 p : core) s = std::max({s, std::abs(p.x), std::abs(p.y)});
  return s;
}

}  // namespace

Body::Body(std::vector<Point2> core, double rho, double tol)
    : core_(std::move(core)), rho_(rho) {
  if (!(rho_ >= 0.0) || !std::isfinite(rho_))
    throw ValidationError("body: radius must be finite and >= 0");
  if (core_.empty()) throw ValidationError("body: core must have at least one point");
  for (Point2 p : core_)
    if (!std::isfinite(p.x) || !std::isfinite(p.y))
      throw ValidationError("body: core coordinates must be finite");

  scale_ = body_scale(core_, rho_);
  const double dup_tol = std::max(tol, 0.0) * scale_ + 1e-15;
  for (size_t i = 0; i < core_.size(); ++i)
    for (size_t j = i + 1; j < core_.size(); ++j)
      if (distance(core_[i], core_[j]) <= dup_tol)
        throw ValidationError("body: duplicate core points within tolerance");

  if (core_.size() <= 2) {
    if (rho_ <= 0.0)
      throw ValidationError(
          "body: a core with fewer than 3 points requires radius > 0");
    return;
  }

  // Strictly convex, counterclockwise: every consecutive triple turns left.
  const size_t m = core_.size();
  for (size_t i = 0; i < m; ++i) {
    const Point2 a = core_[i];
    const Point2 b = core_[(i + 1) % m];
    const Point2 c = core_[(i + 2) % m];
    if (cross(b - a, c - b) <= dup_tol * dup_tol)
      throw ValidationError(
          "body: core must be in strictly convex counterclockwise position");
  }
}

std::vector<BoundaryPiece> boundary_pieces(const Body& body) {
  const auto& core = body.core();
  const double rho = body.rho();
  std::vector<BoundaryPiece> pieces;

  if (core.size() == 1) {
    pieces.push_back(ArcPiece{core[0], 0.0, kTau});
    return pieces;
  }

  // Directed edges: a 2-point core contributes both directions, a polygon
  // its CCW cycle. Arc at a vertex spans from the incoming edge normal to
  // the outgoing one.
  const size_t m = core.size();
  const size_t edge_count = (m == 2) ? 2 : m;
  std::vector<Point2> normals(edge_count);
  for (size_t i = 0; i < edge_count; ++i) {
    const Point2 a = core[i % m];
    const Point2 b = core[(i + 1) % m];
    const Point2 e = b - a;
    const double len = norm(e);
    normals[i] = {e.y / len, -e.x / len};  // outward for CCW
  }
  for (size_t i = 0; i < edge_count; ++i) {
    const Point2 a = core[i % m];
    const Point2 b = core[(i + 1) % m];
    pieces.push_back(EdgePiece{a + rho * normals[i], b + rho * normals[i], normals[i]});
    if (rho > 0.0) {
      const Point2 n_in = normals[i];
      const Point2 n_out = normals[(i + 1) % edge_count];
      const double from = angle_of(n_in);
      double len = normalize_angle(angle_of(n_out) - from);
      if (m == 2) len = kPi;  // caps are exact semicircles
      if (len > 0.0)
        pieces.push_back(ArcPiece{core[(i + 1) % m], from, len});
    }
  }
  return pieces;
}

double signed_distance(const Body& body, Point2 p) {
  return signed_polygon_distance(body.core(), p) - body.rho();
}

bool contains(const Body& body, Point2 p, double tol) {
  return signed_distance(body, p) <= tol;
}

double radial_distance(const Body& body, Point2 c, double phi) {
  if (signed_distance(body, c) >= -1e-12 * body.scale())
    throw ValidationError("radial_distance: center must be strictly interior");

  const Point2 u = unit(phi);
  const double ang_tol = 1e-9;
  double best = -1.0;

  for (const BoundaryPiece& piece : boundary_pieces(body)) {
    if (const EdgePiece* e = std::get_if<EdgePiece>(&piece)) {
      // c + s*u = a + t*(b - a)
      const Point2 d = e->b - e->a;
      const double det = cross(u, -1.0 * d);
      if (std::abs(det) < 1e-15 * body.scale()) continue;
      const Point2 w = e->a - c;
      const double s = cross(w, -1.0 * d) / det;
      const double t = cross(u, w) / det;
      if (s > 0.0 && t >= -1e-9 && t <= 1.0 + 1e-9) best = std::max(best, s);
    } else {
      const ArcPiece& arc = std::get<ArcPiece>(piece);
      const double rho = body.rho();
      if (rho <= 0.0) continue;
      // |c + s*u - v|^2 = rho^2
      const Point2 w = c - arc.center;
      const double b2 = dot(u, w);
      const double disc = b2 * b2 - (norm2(w) - rho * rho);
      if (disc < 0.0) continue;
      const double sq = std::sqrt(disc);
      for (const double s : {-b2 - sq, -b2 + sq}) {
        if (s <= 0.0) continue;
        const double psi = angle_of(c + s * u - arc.center);
        const double along = normalize_angle(psi - arc.start);
        if (along <= arc.length + ang_tol || along >= kTau - ang_tol)
          best = std::max(best, s);
      }
    }
  }
  if (best <= 0.0)
    throw GeometryError("radial_distance: ray missed the boundary");
  return best;
}

Body reflect(const Body& body) {
  std::vector<Point2> neg;
  neg.reserve(body.core().size());
  for (Point2 p : body.core()) neg.push_back(-p);
  return Body(std::move(neg), body.rho());
}

Body apply(const RigidMotion& g, const Body& body) {
  return Body(apply(g, std::span<const Point2>(body.core())), body.rho());
}

bool approx_equal(const Body& a, const Body& b, double tol) {
  if (a.core().size() != b.core().size()) return false;
  if (std::abs(a.rho() - b.rho()) > tol) return false;
  const size_t m = a.core().size();
  for (size_t off = 0; off < m; ++off) {
    bool ok = true;
    for (size_t i = 0; i < m && ok; ++i)
      ok = distance(a.core()[i], b.core()[(i + off) % m]) <= tol;
    if (ok) return true;
  }
  return false;
}

}  // namespace hellycover
