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

#include "hellycover/coverage.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <vector>

#include "hellycover/certificate.hpp"
#include "hellycover/rng.hpp"

namespace hellycover {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct GapEval {
  double value;     // max_i sdist(v_i - t, core) - rho
  Point2 subgrad;   // a subgradient in t (zero on interior plateaus)
};

// Signed distance of q to the core with an explicit subgradient in q.
std::pair<double, Point2> sdist_with_grad(std::span<const Point2> core, Point2 q) {
  if (core.size() == 1) {
    const Point2 d = q - core[0];
    const double n = norm(d);
    if (n <= 0.0) return {0.0, {0.0, 0.0}};
    return {n, d * (1.0 / n)};
  }
  if (core.size() == 2) {
    const Point2 p = segment_closest(core[0], core[1], q);
    const Point2 d = q - p;
    const double n = norm(d);
    if (n <= 0.0) return {0.0, {0.0, 0.0}};
    return {n, d * (1.0 / n)};
  }
  // Inside: the max of the linear edge functionals; its gradient is the
  // active outward normal. Outside: Euclidean distance to the boundary.
  double max_side = -kInf;
  Point2 max_n{0.0, 0.0};
  const size_t m = core.size();
  for (size_t i = 0; i < m; ++i) {
    const Point2 a = core[i];
    const Point2 e = core[(i + 1) % m] - a;
    const double len = norm(e);
    const Point2 n{e.y / len, -e.x / len};
    const double side = dot(q - a, n);
    if (side > max_side) {
      max_side = side;
      max_n = n;
    }
  }
  if (max_side <= 0.0) return {max_side, max_n};
  double best = kInf;
  Point2 best_p{0.0, 0.0};
  for (size_t i = 0; i < m; ++i) {
    const Point2 p = segment_closest(core[i], core[(i + 1) % m], q);
    const double d = distance(q, p);
    if (d < best) {
      best = d;
      best_p = p;
    }
  }
  const Point2 d = q - best_p;
  return {best, best <= 0.0 ? Point2{0.0, 0.0} : d * (1.0 / best)};
}

GapEval eval_gap(std::span<const Point2> points, const Body& body, Point2 t) {
  GapEval ev{-kInf, {0.0, 0.0}};
  for (Point2 v : points) {
    auto [d, grad] = sdist_with_grad(body.core(), v - t);
    if (d > ev.value) {
      ev.value = d;
      ev.subgrad = -1.0 * grad;  // d/dt of sdist(v - t, core)
    }
  }
  ev.value -= body.rho();
  return ev;
}

Point2 area_centroid(const std::vector<Point2>& poly) {
  double area2 = 0.0;
  Point2 c{0.0, 0.0};
  const size_t m = poly.size();
  for (size_t i = 0; i < m; ++i) {
    const Point2 a = poly[i];
    const Point2 b = poly[(i + 1) % m];
    const double w = cross(a, b);
    area2 += w;
    c = c + (a + b) * w;
  }
  if (std::abs(area2) < 1e-300) {
    // collapsed localization region: plain vertex average
    Point2 avg{0.0, 0.0};
    for (Point2 p : poly) avg = avg + p;
    return avg * (1.0 / m);
  }
  return c * (1.0 / (3.0 * area2));
}

double poly_diameter(const std::vector<Point2>& poly) {
  double d = 0.0;
  for (size_t i = 0; i < poly.size(); ++i)
    for (size_t j = i + 1; j < poly.size(); ++j)
      d = std::max(d, distance(poly[i], poly[j]));
  return d;
}

struct MinimizeResult {
  double gap = kInf;
  Point2 t{0.0, 0.0};
};

// Nested golden-section descent over a box; the inner search minimizes over
// the second coordinate. Exact for convex functions, used to finish off
// localizations the cutting-plane scheme left as slivers.
MinimizeResult golden_polish(std::span<const Point2> points, const Body& body,
                             Point2 center, double halfwidth, double target,
                             MinimizeResult seed) {
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  const auto value_at = [&](Point2 t) { return eval_gap(points, body, t).value; };

  const auto inner_min = [&](double x) {
    double a = center.y - halfwidth, b = center.y + halfwidth;
    double y1 = b - gr * (b - a), y2 = a + gr * (b - a);
    double f1 = value_at({x, y1}), f2 = value_at({x, y2});
    for (int i = 0; i < 90 && (b - a) > target; ++i) {
      if (f1 < f2) {
        b = y2;
        y2 = y1;
        f2 = f1;
        y1 = b - gr * (b - a);
        f1 = value_at({x, y1});
      } else {
        a = y1;
        y1 = y2;
        f1 = f2;
        y2 = a + gr * (b - a);
        f2 = value_at({x, y2});
      }
    }
    const double y = 0.5 * (a + b);
    return std::pair<double, double>{value_at({x, y}), y};
  };

  MinimizeResult best = seed;
  const auto consider = [&](std::pair<double, double> fy, double x) {
    if (fy.first < best.gap) best = {fy.first, {x, fy.second}};
  };

  double a = center.x - halfwidth, b = center.x + halfwidth;
  double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
  auto f1 = inner_min(x1), f2 = inner_min(x2);
  consider(f1, x1);
  consider(f2, x2);
  for (int i = 0; i < 90 && (b - a) > target; ++i) {
    if (f1.first < f2.first) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - gr * (b - a);
      f1 = inner_min(x1);
      consider(f1, x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + gr * (b - a);
      f2 = inner_min(x2);
      consider(f2, x2);
    }
  }
  return best;
}

// Centroid cutting-plane minimization of the convex gap function. Each cut
// through the centroid removes at least 4/9 of the localization area. Along
// a nonsmooth valley the region can collapse into a sliver whose diameter
// stops shrinking; every evaluation is exact, so the running best only
// overestimates the minimum, and a golden-section polish over the stalled
// neighborhood finishes the job when requested.
MinimizeResult minimize_gap(std::span<const Point2> points, const Body& body,
                            bool polish = true) {
  double lo_x = kInf, lo_y = kInf, hi_x = -kInf, hi_y = -kInf;
  for (Point2 p : points) {
    lo_x = std::min(lo_x, p.x);
    lo_y = std::min(lo_y, p.y);
    hi_x = std::max(hi_x, p.x);
    hi_y = std::max(hi_y, p.y);
  }
  double pad = body.scale() + body.rho() + 1.0;
  for (Point2 p : body.core()) pad += std::abs(p.x) + std::abs(p.y);
  std::vector<Point2> region = {{lo_x - pad, lo_y - pad},
                                {hi_x + pad, lo_y - pad},
                                {hi_x + pad, hi_y + pad},
                                {lo_x - pad, hi_y + pad}};
  const double scale = std::max({1.0, hi_x - lo_x, hi_y - lo_y, pad});

  MinimizeResult best;
  bool plateau = false;
  double diam = poly_diameter(region);
  int last_improvement_at = 0;
  for (int iter = 0; iter < 10000; ++iter) {
    const Point2 t = area_centroid(region);
    const GapEval ev = eval_gap(points, body, t);
    if (ev.value < best.gap) {
      best = {ev.value, t};
      last_improvement_at = iter;
    }
    if (norm(ev.subgrad) == 0.0) {  // interior plateau: global minimum
      plateau = true;
      break;
    }
    region = clip_polygon(region, {ev.subgrad, dot(ev.subgrad, t)});
    if (region.size() < 3) break;
    diam = poly_diameter(region);
    if (diam < 1e-13 * scale) break;
    if (iter - last_improvement_at > 60) break;  // value decrease stalled
  }

  if (polish && !plateau && diam > 1e-12 * scale) {
    const Point2 center = region.size() >= 3 ? area_centroid(region) : best.t;
    const double halfwidth = 2.0 * diam + distance(center, best.t) + 1e-12;
    best = golden_polish(points, body, center, halfwidth, 1e-13 * scale, best);
  }
  return best;
}

}  // namespace

bool translation_feasible_exact(std::span<const Point2> points, const Body& body,
                                double tol) {
  if (body.core().size() < 3)
    throw ValidationError("translation_feasible_exact: needs a polygonal core");
  // t + conv(core) covers every v_i  iff  <n_j, t> >= max_i <n_j, v_i> - c_j
  // for every core edge j.
  const std::vector<HalfPlane> hps = core_halfplanes(body.core());
  double lo_x = kInf, lo_y = kInf, hi_x = -kInf, hi_y = -kInf;
  for (Point2 p : points) {
    lo_x = std::min(lo_x, p.x);
    lo_y = std::min(lo_y, p.y);
    hi_x = std::max(hi_x, p.x);
    hi_y = std::max(hi_y, p.y);
  }
  const double pad = 4.0 * (body.scale() + std::max(hi_x - lo_x, hi_y - lo_y) + 1.0);
  std::vector<Point2> region = {{lo_x - pad, lo_y - pad},
                                {hi_x + pad, lo_y - pad},
                                {hi_x + pad, hi_y + pad},
                                {lo_x - pad, hi_y + pad}};
  for (const HalfPlane& h : hps) {
    double support = -kInf;
    for (Point2 v : points) support = std::max(support, dot(h.n, v));
    // <n, t> >= support - c - tol   <=>   <-n, t> <= c - support + tol
    region = clip_polygon(region, {-1.0 * h.n, h.c - support + tol});
    if (region.empty()) return false;
  }
  return !region.empty();
}

CoverResult translation_cover(std::span<const Point2> points, const Body& body,
                              double tol) {
  if (points.empty())
    throw ValidationError("translation_cover: empty point set");

  const MinimizeResult min = minimize_gap(points, body);
  CoverResult result;
  result.found = min.gap <= tol;
  result.margin = -min.gap;
  result.motion = RigidMotion(0.0, min.t);

  if (body.rho() == 0.0 && body.core().size() >= 3) {
    const bool feasible = translation_feasible_exact(points, body, tol);
    if (feasible != result.found && std::abs(min.gap - tol) > 10.0 * tol)
      throw GeometryError(
          "translation_cover: convex minimization and exact feasibility disagree");
    if (feasible && !result.found) result.found = true;  // boundary-band case
  }
  return result;
}

HellyTripleReport helly_triple_property(std::span<const Point2> points,
                                        const Body& body, double tol) {
  if (points.size() < 3)
    throw ValidationError("helly_triple_property: needs at least 3 points");

  HellyTripleReport report;
  report.all_triples_coverable = true;
  report.worst_triple_margin = kInf;
  const int n = static_cast<int>(points.size());
  for (int i = 0; i < n && report.all_triples_coverable; ++i) {
    for (int j = i + 1; j < n && report.all_triples_coverable; ++j) {
      for (int k = j + 1; k < n; ++k) {
        const Point2 triple[3] = {points[i], points[j], points[k]};
        const CoverResult r = translation_cover(triple, body, tol);
        report.worst_triple_margin = std::min(report.worst_triple_margin, r.margin);
        if (!r.found) {
          report.all_triples_coverable = false;
          report.witness = {{i, j, k}};
          break;
        }
      }
    }
  }
  const CoverResult whole = translation_cover(points, body, tol);
  report.whole_coverable = whole.found;
  report.whole_margin = whole.margin;
  return report;
}

CoverResult rigid_cover(std::span<const Point2> points, const Body& body,
                        int grid_n, int refine_iters, double tol) {
  if (grid_n < 1) throw ValidationError("rigid_cover: grid_n must be >= 1");
  if (points.empty()) throw ValidationError("rigid_cover: empty point set");

  CoverResult result;

  // Impossibility first: a cover g(K) of all points would contain their
  // hull, so the hull inradius cannot exceed the body's.
  if (points.size() >= 3) {
    const Hull hull = convex_hull(points);
    if (!hull.degenerate && hull.points.size() >= 3) {
      const double hull_r = inradius_of_points(points);
      const double body_r = chebyshev_incircle(body).r;
      if (hull_r > body_r + tol) {
        result.found = false;
        result.impossibility = Impossibility{hull_r, body_r};
        result.margin = body_r - hull_r;
        return result;
      }
    }
  }

  // m(theta) = min over translations of the gap for the body rotated by
  // theta; equivalently the points rotated by -theta against the fixed body.
  // Raw (unpolished) evaluations overestimate, so a raw value below tol is
  // already a sound covering witness; only the final candidate is polished.
  const auto eval_angle = [&](double theta, bool polish = false) {
    const RigidMotion back(-theta, {0.0, 0.0});
    const std::vector<Point2> rotated = apply(back, points);
    return minimize_gap(rotated, body, polish);
  };

  double best_theta = 0.0;
  MinimizeResult best = eval_angle(0.0);
  for (int i = 1; i < grid_n && best.gap > tol; ++i) {
    const double theta = kTau * i / grid_n;
    const MinimizeResult m = eval_angle(theta);
    if (m.gap < best.gap) {
      best = m;
      best_theta = theta;
    }
  }

  if (best.gap > tol && refine_iters > 0) {
    // Golden-section around the best grid angle.
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = best_theta - kTau / grid_n;
    double b = best_theta + kTau / grid_n;
    double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
    MinimizeResult f1 = eval_angle(x1), f2 = eval_angle(x2);
    for (int it = 0; it < refine_iters; ++it) {
      if (f1.gap < f2.gap) {
        b = x2;
        x2 = x1;
        f2 = f1;
        x1 = b - gr * (b - a);
        f1 = eval_angle(x1);
      } else {
        a = x1;
        x1 = x2;
        f1 = f2;
        x2 = a + gr * (b - a);
        f2 = eval_angle(x2);
      }
      const MinimizeResult& cand = f1.gap < f2.gap ? f1 : f2;
      const double cand_theta = f1.gap < f2.gap ? x1 : x2;
      if (cand.gap < best.gap) {
        best = cand;
        best_theta = cand_theta;
      }
      if (best.gap <= tol) break;
    }
  }

  if (best.gap > tol) {
    const MinimizeResult polished = eval_angle(best_theta, true);
    if (polished.gap < best.gap) best = polished;
  }

  result.found = best.gap <= tol;
  result.margin = -best.gap;
  // The points were rotated by -theta; undo on the translation to express
  // the motion applied to the body.
  const double theta = normalize_angle(best_theta);
  result.motion = RigidMotion(theta, rotate_about(best.t, {0.0, 0.0}, theta));
  result.inconclusive = !result.found;  // no impossibility proof at this point
  return result;
}

HellyEstimate empirical_helly_number(std::span<const Point2> points,
                                     const Body& body, long long budget,
                                     uint64_t seed, int grid_n, double tol) {
  if (points.empty())
    throw ValidationError("empirical_helly_number: empty point set");
  if (budget < 1) throw ValidationError("empirical_helly_number: budget must be >= 1");
  const int n = static_cast<int>(points.size());

  HellyEstimate est;
  if (rigid_cover(points, body, grid_n, 30, tol).found) {
    est.k_max = n;
    return est;
  }

  std::vector<std::vector<int>> failing;  // known uncoverable subsets
  const auto dominated = [&](const std::vector<int>& subset) {
    for (const auto& f : failing)
      if (std::includes(subset.begin(), subset.end(), f.begin(), f.end()))
        return true;
    return false;
  };

  const auto subset_coverable = [&](const std::vector<int>& subset) {
    if (dominated(subset)) return false;
    std::vector<Point2> pts;
    pts.reserve(subset.size());
    for (int i : subset) pts.push_back(points[i]);
    const CoverResult r = rigid_cover(pts, body, grid_n, 30, tol);
    if (!r.found) failing.push_back(subset);
    return r.found;
  };

  const auto level_ok = [&](int k) {
    const long long total = count_subsets_clamped(n, k, budget);
    if (total <= budget) {
      std::vector<int> idx(k);
      for (int i = 0; i < k; ++i) idx[i] = i;
      while (true) {
        if (!subset_coverable(idx)) return false;
        // next combination
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      }
      return true;
    }
    est.sampled = true;
    DetRng rng(seed + static_cast<uint64_t>(k));
    for (long long it = 0; it < budget; ++it)
      if (!subset_coverable(rng.subset(n, k))) return false;
    return true;
  };

  // "every k-subset coverable" is monotone decreasing in k.
  int lo = 1, hi = n - 1;  // k = n failed above
  while (lo < hi) {
    const int mid = (lo + hi + 1) / 2;
    if (level_ok(mid))
      lo = mid;
    else
      hi = mid - 1;
  }
  est.k_max = lo;
  return est;
}

}  // namespace hellycover
