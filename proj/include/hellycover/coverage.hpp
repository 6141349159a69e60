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

#include <array>
#include <cstdint>
#include <optional>

#include "hellycover/body.hpp"
#include "hellycover/incircle.hpp"

namespace hellycover {

/// Proof that no rigid image of the body covers the points: the point hull's
/// inradius exceeds the body's.
struct Impossibility {
  double hull_inradius = 0.0;
  double body_inradius = 0.0;
};

struct CoverResult {
  bool found = false;
  RigidMotion motion;  // meaningful when found
  /// Best containment margin, signed: minus the smallest achievable value of
  /// max_i signed_distance(body under motion, point_i).
  double margin = 0.0;
  std::optional<Impossibility> impossibility;
  /// Set when a heuristic search failed without an impossibility proof.
  bool inconclusive = false;
};

/// Exact translation covering: minimize over translations t the convex gap
///   g(t) = max_i signed_polygon_distance(core, v_i - t) - rho
/// by a centroid cutting-plane scheme (each evaluation is an exact
/// point-polygon distance; the cut normal is the active subgradient).
/// found iff min g <= tol. For rho = 0 the answer is cross-checked against
/// the exact linear feasibility system over the core edge normals.
CoverResult translation_cover(std::span<const Point2> points, const Body& body,
                              double tol = 1e-7);

/// Exact halfplane-feasibility route for rho = 0 bodies, exposed for tests:
/// the translations covering all points form the intersection of one
/// halfplane per core edge.
bool translation_feasible_exact(std::span<const Point2> points, const Body& body,
                                double tol = 1e-7);

struct HellyTripleReport {
  bool all_triples_coverable = false;
  bool whole_coverable = false;
  std::optional<std::array<int, 3>> witness;  // a failing triple, if any
  double worst_triple_margin = 0.0;
  double whole_margin = 0.0;
};

/// Evaluate translation_cover on every 3-subset and on the whole set. By
/// Helly's theorem all_triples_coverable implies whole_coverable; a
/// violation beyond tolerance signals an oracle bug, not mathematics.
HellyTripleReport helly_triple_property(std::span<const Point2> points,
                                        const Body& body, double tol = 1e-7);

/// Heuristic rigid-motion covering: impossibility test first, then a uniform
/// grid over rotation angles with golden-section refinement around the best
/// angle. A not-found result without an impossibility certificate is
/// inconclusive and labeled so.
CoverResult rigid_cover(std::span<const Point2> points, const Body& body,
                        int grid_n = 720, int refine_iters = 60,
                        double tol = 1e-7);

struct HellyEstimate {
  int k_max = 0;
  bool sampled = false;  // sampled mode is evidence, not proof
};

/// Largest k such that every k-subset is rigid_cover-able, evaluated
/// exhaustively when C(n,k) <= budget and by seeded sampling otherwise.
/// Failing subsets are cached: a failing subset dooms every superset.
HellyEstimate empirical_helly_number(std::span<const Point2> points,
                                     const Body& body, long long budget,
                                     uint64_t seed, int grid_n = 180,
                                     double tol = 1e-7);

}  // namespace hellycover
