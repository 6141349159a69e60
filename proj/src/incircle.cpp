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

#include "hellycover/incircle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace hellycover {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Classification thresholds for the center set (absolute, desk scale).
constexpr double kKindThreshold = 1e-7;

struct LpSolution {
  double s = -kInf;  // optimal inward offset
  Point2 x{0.0, 0.0};
};

// Maximize s subject to <n_j, x> + s <= c_j. The optimum of this 3-variable
// linear program is attained at a basis of three tight constraints; with a
// few hundred constraints at most, enumerating bases and keeping the best
// feasible one is exact and fast enough. Near-parallel triples produce large
// candidate s values that fail the feasibility scan immediately.
LpSolution solve_chebyshev_lp(const std::vector<HalfPlane>& hp, double scale) {
  const size_t m = hp.size();
  const double feas_slack = 1e-12 * scale;
  LpSolution best;

  const auto feasible = [&](Point2 x, double s) {
    for (const HalfPlane& h : hp)
      if (dot(h.n, x) + s > h.c + feas_slack) return false;
    return true;
  };

  for (size_t i = 0; i < m; ++i) {
    for (size_t j = i + 1; j < m; ++j) {
      for (size_t k = j + 1; k < m; ++k) {
        // Solve the 3x3 system  n.x*x1 + n.y*x2 + s = c  for the triple.
        const Point2 a = hp[i].n, b = hp[j].n, c = hp[k].n;
        const double det = a.x * (b.y - c.y) - a.y * (b.x - c.x) +
                           (b.x * c.y - b.y * c.x);
        if (std::abs(det) < 1e-14) continue;
        const double r1 = hp[i].c, r2 = hp[j].c, r3 = hp[k].c;
        const double x1 = (r1 * (b.y - c.y) - a.y * (r2 - r3) +
                           (r2 * c.y - b.y * r3)) / det;
        const double x2 = (a.x * (r2 - r3) - r1 * (b.x - c.x) +
                           (b.x * r3 - r2 * c.x)) / det;
        const double s = (a.x * (b.y * r3 - r2 * c.y) -
                          a.y * (b.x * r3 - r2 * c.x) +
                          r1 * (b.x * c.y - b.y * c.x)) / det;
        if (s <= best.s) continue;
        if (feasible({x1, x2}, s)) best = {s, {x1, x2}};
      }
    }
  }
  if (best.s == -kInf)
    throw GeometryError("chebyshev: no feasible basis found");
  return best;
}

std::vector<Point2> bounding_box_polygon(std::span<const Point2> pts, double pad) {
  double lo_x = kInf, lo_y = kInf, hi_x = -kInf, hi_y = -kInf;
  for (Point2 p : pts) {
    lo_x = std::min(lo_x, p.x);
    lo_y = std::min(lo_y, p.y);
    hi_x = std::max(hi_x, p.x);
    hi_y = std::max(hi_y, p.y);
  }
  return {{lo_x - pad, lo_y - pad},
          {hi_x + pad, lo_y - pad},
          {hi_x + pad, hi_y + pad},
          {lo_x - pad, hi_y + pad}};
}

double polygon_diameter(const std::vector<Point2>& poly) {
  double d = 0.0;
  for (size_t i = 0; i < poly.size(); ++i)
    for (size_t j = i + 1; j < poly.size(); ++j)
      d = std::max(d, distance(poly[i], poly[j]));
  return d;
}

double polygon_area(const std::vector<Point2>& poly) {
  double a = 0.0;
  for (size_t i = 0; i < poly.size(); ++i)
    a += cross(poly[i], poly[(i + 1) % poly.size()]);
  return 0.5 * std::abs(a);
}

Point2 polygon_centroid(const std::vector<Point2>& poly) {
  Point2 c{0.0, 0.0};
  for (Point2 p : poly) c = c + p;
  return c * (1.0 / static_cast<double>(poly.size()));
}

CenterSet classify_center_polygon(std::vector<Point2> poly, double scale) {
  CenterSet cs;
  if (poly.empty())
    throw GeometryError("incircle: empty center set after clipping");
  const double thr = kKindThreshold * std::max(1.0, scale);
  const double diam = polygon_diameter(poly);
  if (diam <= thr) {
    cs.kind = CenterSetKind::point;
    cs.points = {polygon_centroid(poly)};
    return cs;
  }
  if (polygon_area(poly) <= thr * diam) {
    // Near-degenerate sliver: collapse to the segment along its long axis.
    size_t bi = 0, bj = 1;
    double bd = 0.0;
    for (size_t i = 0; i < poly.size(); ++i)
      for (size_t j = i + 1; j < poly.size(); ++j)
        if (double d = distance(poly[i], poly[j]); d > bd) {
          bd = d;
          bi = i;
          bj = j;
        }
    const Point2 dir = (poly[bj] - poly[bi]) * (1.0 / bd);
    double lo = kInf, hi = -kInf;
    Point2 lo_sum{0, 0}, hi_sum{0, 0};
    int lo_n = 0, hi_n = 0;
    for (Point2 p : poly) {
      const double t = dot(p - poly[bi], dir);
      lo = std::min(lo, t);
      hi = std::max(hi, t);
    }
    for (Point2 p : poly) {
      const double t = dot(p - poly[bi], dir);
      if (t <= lo + thr) {
        lo_sum = lo_sum + p;
        ++lo_n;
      }
      if (t >= hi - thr) {
        hi_sum = hi_sum + p;
        ++hi_n;
      }
    }
    cs.kind = CenterSetKind::segment;
    cs.points = {lo_sum * (1.0 / lo_n), hi_sum * (1.0 / hi_n)};
    return cs;
  }
  cs.kind = CenterSetKind::polygon;
  cs.points = std::move(poly);
  return cs;
}

}  // namespace

std::vector<HalfPlane> core_halfplanes(std::span<const Point2> core) {
  std::vector<HalfPlane> hp;
  const size_t m = core.size();
  hp.reserve(m);
  for (size_t i = 0; i < m; ++i) {
    const Point2 a = core[i];
    const Point2 b = core[(i + 1) % m];
    const Point2 e = b - a;
    const double len = norm(e);
    const Point2 n{e.y / len, -e.x / len};
    hp.push_back({n, dot(n, a)});
  }
  return hp;
}

std::vector<Point2> clip_polygon(std::span<const Point2> poly, const HalfPlane& hp) {
  std::vector<Point2> out;
  const size_t m = poly.size();
  for (size_t i = 0; i < m; ++i) {
    const Point2 cur = poly[i];
    const Point2 nxt = poly[(i + 1) % m];
    const double dc = dot(hp.n, cur) - hp.c;
    const double dn = dot(hp.n, nxt) - hp.c;
    if (dc <= 0.0) out.push_back(cur);
    if ((dc < 0.0 && dn > 0.0) || (dc > 0.0 && dn < 0.0)) {
      const double t = dc / (dc - dn);
      out.push_back(cur + t * (nxt - cur));
    }
  }
  return out;
}

Incircle chebyshev_incircle(const Body& body) {
  Incircle result;
  const auto& core = body.core();

  if (core.size() == 1) {
    result.r = body.rho();
    result.clearance = 0.0;
    result.centers = {CenterSetKind::point, {core[0]}};
    return result;
  }
  if (core.size() == 2) {
    result.r = body.rho();
    result.clearance = 0.0;
    result.centers = {CenterSetKind::segment, {core[0], core[1]}};
    return result;
  }

  const std::vector<HalfPlane> hp = core_halfplanes(core);
  const LpSolution lp = solve_chebyshev_lp(hp, body.scale());
  result.clearance = lp.s;
  result.r = lp.s + body.rho();

  // Optimal centers: halfplanes offset inward by s*, with a small slack so
  // the optimal face survives floating point.
  std::vector<Point2> poly = bounding_box_polygon(core, 1.0);
  for (const HalfPlane& h : hp) {
    poly = clip_polygon(poly, {h.n, h.c - lp.s + 1e-9});
    if (poly.empty()) break;
  }
  if (poly.empty()) poly = {lp.x};  // fall back to the LP witness
  result.centers = classify_center_polygon(std::move(poly), body.scale());
  return result;
}

double inradius_of_points(std::span<const Point2> points) {
  const Hull h = convex_hull(points);
  if (h.degenerate || h.points.size() < 3)
    throw ValidationError("inradius_of_points: degenerate hull");
  const std::vector<HalfPlane> hp = core_halfplanes(h.points);
  double scale = 1.0;
  for (Point2 p : h.points) scale = std::max({scale, std::abs(p.x), std::abs(p.y)});
  return solve_chebyshev_lp(hp, scale).s;
}

ContactReport contact_report(const Body& body, Point2 center, double tol) {
  const Incircle inc = chebyshev_incircle(body);
  const double scale = body.scale();
  const double adm_tol = std::max(tol, 0.0) * scale + 1e-12;

  // Admissibility: a disc of radius r centered here must fit, i.e. the
  // center clears every core edge by at least s* (up to tol); degenerate
  // cores admit exactly conv(core).
  if (body.core().size() >= 3) {
    const std::vector<HalfPlane> hp = core_halfplanes(body.core());
    for (const HalfPlane& h : hp)
      if (dot(h.n, center) > h.c - inc.clearance + adm_tol)
        throw ValidationError("contact_report: center is not an admissible incircle center");
  } else {
    if (signed_polygon_distance(body.core(), center) > adm_tol)
      throw ValidationError("contact_report: center is not an admissible incircle center");
  }

  ContactReport rep;
  rep.center = center;
  rep.r = inc.r;
  rep.beta = kTau * inc.r;

  const double touch_tol = std::max(tol, 0.0) * scale + 1e-12;
  std::vector<AngularInterval> arcs;
  std::vector<double> tangents;

  for (const BoundaryPiece& piece : boundary_pieces(body)) {
    if (const EdgePiece* e = std::get_if<EdgePiece>(&piece)) {
      // On an admissible center every boundary point is at distance >= r,
      // so tangencies are per-piece minima.
      const Point2 p = segment_closest(e->a, e->b, center);
      if (std::abs(distance(p, center) - inc.r) <= touch_tol)
        tangents.push_back(angle_of(p - center));
    } else {
      const ArcPiece& arc = std::get<ArcPiece>(piece);
      const double d = distance(arc.center, center);
      if (d <= touch_tol && std::abs(body.rho() - inc.r) <= touch_tol) {
        // Concentric corner arc: a positive-measure contact arc.
        arcs.push_back({arc.start, arc.length});
        continue;
      }
      if (d <= touch_tol) continue;  // concentric but wrong radius
      // Minimum of |x - center| over the arc: attained toward the center
      // (angle mu + pi in the arc's own parameter) or at the arc endpoints.
      const double mu = angle_of(arc.center - center);
      const auto arc_point = [&](double psi) {
        return arc.center + body.rho() * unit(psi);
      };
      const double psi_min = normalize_angle(mu + kPi);
      const double along = normalize_angle(psi_min - arc.start);
      std::vector<double> cand;
      if (along <= arc.length) cand.push_back(psi_min);
      cand.push_back(arc.start);
      cand.push_back(arc.start + arc.length);
      for (double psi : cand) {
        const Point2 p = arc_point(psi);
        if (std::abs(distance(p, center) - inc.r) <= touch_tol)
          tangents.push_back(angle_of(p - center));
      }
    }
  }

  rep.contact_arcs = AngularSet::from_intervals(arcs);
  rep.alpha_contact = inc.r * rep.contact_arcs.measure();
  rep.discrete = rep.contact_arcs.is_empty();
  rep.lower_bound = rep.discrete ? kInf : rep.beta / rep.alpha_contact;

  std::sort(tangents.begin(), tangents.end());
  const double ang_dedupe = 1e-9;
  for (double a : tangents) {
    if (!rep.tangent_points.empty() &&
        std::abs(a - rep.tangent_points.back()) <= ang_dedupe)
      continue;
    rep.tangent_points.push_back(a);
  }
  // Seam duplicate (angle 0 vs 2pi).
  if (rep.tangent_points.size() >= 2 &&
      rep.tangent_points.front() <= ang_dedupe &&
      rep.tangent_points.back() >= kTau - ang_dedupe)
    rep.tangent_points.pop_back();

  return rep;
}

std::vector<Point2> candidate_centers(const Body& body) {
  const Incircle inc = chebyshev_incircle(body);
  std::vector<Point2> out;

  auto push_unique = [&](Point2 p) {
    for (Point2 q : out)
      if (distance(p, q) <= 1e-9 * body.scale()) return;
    out.push_back(p);
  };

  for (Point2 p : inc.centers.points) push_unique(p);
  if (inc.centers.points.size() > 1) {
    Point2 mid{0.0, 0.0};
    for (Point2 p : inc.centers.points) mid = mid + p;
    push_unique(mid * (1.0 / inc.centers.points.size()));
  }
  // Core vertices that are admissible centers (concentric-arc candidates).
  for (Point2 v : body.core()) {
    bool admissible;
    if (body.core().size() >= 3) {
      admissible = true;
      for (const HalfPlane& h : core_halfplanes(body.core()))
        if (dot(h.n, v) > h.c - inc.clearance + 1e-9 * body.scale())
          admissible = false;
    } else {
      admissible = signed_polygon_distance(body.core(), v) <= 1e-9 * body.scale();
    }
    if (admissible) push_unique(v);
  }
  return out;
}

}  // namespace hellycover
