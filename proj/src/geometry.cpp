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

#include "hellycover/geometry.hpp"

#include <algorithm>
#include <limits>

namespace hellycover {

double normalize_angle(double a) {
  if (a >= 0.0 && a < kTau) return a;
  a = std::fmod(a, kTau);
  if (a < 0.0) a += kTau;
  if (a >= kTau) a = 0.0;  // fmod round-up guard
  return a;
}

double angle_of(Point2 v) { return normalize_angle(std::atan2(v.y, v.x)); }

RigidMotion RigidMotion::inverse() const {
  const double c = std::cos(theta), s = std::sin(theta);
  // inverse rotation applied to -t
  return RigidMotion(-theta, {-(c * t.x + s * t.y), -(-s * t.x + c * t.y)});
}

Point2 apply(const RigidMotion& g, Point2 p) {
  const double c = std::cos(g.theta), s = std::sin(g.theta);
  return {c * p.x - s * p.y + g.t.x, s * p.x + c * p.y + g.t.y};
}

std::vector<Point2> apply(const RigidMotion& g, std::span<const Point2> pts) {
  std::vector<Point2> out;
  out.reserve(pts.size());
  for (Point2 p : pts) out.push_back(apply(g, p));
  return out;
}

Point2 rotate_about(Point2 p, Point2 pivot, double theta) {
  const double c = std::cos(theta), s = std::sin(theta);
  const Point2 d = p - pivot;
  return {pivot.x + c * d.x - s * d.y, pivot.y + s * d.x + c * d.y};
}

Hull convex_hull(std::span<const Point2> points) {
  if (points.empty()) throw ValidationError("convex_hull: empty point set");
  std::vector<Point2> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end(), [](Point2 a, Point2 b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](Point2 a, Point2 b) {
                          return a.x == b.x && a.y == b.y;
                        }),
            pts.end());

  Hull h;
  if (pts.size() == 1) {
    h.points = pts;
    h.degenerate = true;
    return h;
  }

  // Andrew monotone chain; strict turns only, so collinear points drop out.
  const auto build = [&](auto begin, auto end) {
    std::vector<Point2> chain;
    for (auto it = begin; it != end; ++it) {
      while (chain.size() >= 2 &&
             cross(chain.back() - chain[chain.size() - 2],
                   *it - chain.back()) <= 0.0) {
        chain.pop_back();
      }
      chain.push_back(*it);
    }
    return chain;
  };
  std::vector<Point2> lower = build(pts.begin(), pts.end());
  std::vector<Point2> upper = build(pts.rbegin(), pts.rend());

  h.points = std::move(lower);
  h.points.insert(h.points.end(), upper.begin() + 1, upper.end() - 1);
  if (h.points.size() < 3) {
    // all input points collinear: keep the two extremes
    h.points = {pts.front(), pts.back()};
    h.degenerate = true;
  }
  return h;
}

Point2 segment_closest(Point2 a, Point2 b, Point2 p) {
  const Point2 e = b - a;
  const double len2 = norm2(e);
  if (len2 <= 0.0) return a;
  const double t = std::clamp(dot(p - a, e) / len2, 0.0, 1.0);
  return a + t * e;
}

double segment_distance(Point2 a, Point2 b, Point2 p) {
  return distance(p, segment_closest(a, b, p));
}

double signed_polygon_distance(std::span<const Point2> poly, Point2 p) {
  if (poly.empty()) throw ValidationError("signed_polygon_distance: empty polygon");
  if (poly.size() == 1) return distance(p, poly[0]);
  if (poly.size() == 2) return segment_distance(poly[0], poly[1], p);

  // Inside iff p is left of (or on) every CCW edge; then the signed distance
  // is minus the smallest edge clearance. Outside it is the distance to the
  // nearest edge segment.
  double max_side = -std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < poly.size(); ++i) {
    const Point2 a = poly[i];
    const Point2 b = poly[(i + 1) % poly.size()];
    const Point2 e = b - a;
    const double len = norm(e);
    if (len <= 0.0) continue;
    // outward normal of a CCW edge
    const Point2 n{e.y / len, -e.x / len};
    max_side = std::max(max_side, dot(p - a, n));
  }
  if (max_side <= 0.0) return max_side;

  double best = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < poly.size(); ++i) {
    best = std::min(best, segment_distance(poly[i], poly[(i + 1) % poly.size()], p));
  }
  return best;
}

}  // namespace hellycover
