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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hellycover/angular.hpp"
#include "hellycover/body.hpp"
#include "hellycover/incircle.hpp"
#include "hellycover/marking.hpp"

namespace hellycover {

/// Thrown when no construction parameters meet the angular budget, e.g. for
/// a disc, whose marked set is the full circle for every R > r. The caller
/// may retry with a different candidate center.
class BudgetExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A finite planar point set to be covered.
struct Configuration {
  std::vector<Point2> points;
  std::string provenance;
};

/// Parameters of a counterexample construction: a regular n-gon whose
/// incircle has radius r + epsilon; its vertices sit at distance
/// R = (r + epsilon)/cos(pi/n) from the shared center.
struct ConstructionParams {
  double epsilon = 0.0;
  int n = 0;
  double R = 0.0;
  Point2 center;
};

struct SubsetStrategy {
  bool exhaustive = true;
  long long count = 0;  // subsets verified
  uint64_t seed = 0;    // meaningful when sampled
};

struct SubsetResult {
  std::vector<int> subset;  // ascending vertex indices
  double theta = 0.0;       // common rotation applied to the subset
  double margin = 0.0;      // min radial containment margin over the subset
};

struct NoncoverCheck {
  double hull_inradius = 0.0;
  double body_inradius = 0.0;
};

/// Machine-checkable record of one counterexample construction: the body,
/// the chosen center, k, the polygon parameters, the marked measure alpha,
/// the point configuration, one verified rotation per examined k-subset,
/// and the non-coverage inequality.
struct CounterexampleCertificate {
  Body body;
  Point2 center;
  int k = 0;
  ConstructionParams params;
  double alpha = 0.0;
  Configuration points;
  SubsetStrategy strategy;
  std::vector<SubsetResult> subset_results;
  NoncoverCheck noncover;
  bool verdict = false;
};

/// Vertices of a regular n-gon centered at `center` whose inscribed circle
/// has radius r + epsilon. Returns the configuration and the circumradius R.
/// epsilon = 0 is allowed (it reproduces the polygon with inradius r).
std::pair<Configuration, double> regular_polygon_config(Point2 center, double r,
                                                        double epsilon, int n,
                                                        double phase);

struct ChosenParams {
  ConstructionParams params;
  double alpha = 0.0;
};

/// Search the schedule (epsilon_j, n_j) = (r/10^j, 8*5^(j-1)), j = 1..budget,
/// and return the first entry whose marked measure satisfies
/// alpha < 2pi/(k*(1+slack)) with slack = 0.05. Throws BudgetExhausted when
/// no entry qualifies (alpha does not approach 0, e.g. positive-measure
/// contact at this center).
ChosenParams choose_construction_params(const Body& body, Point2 center, int k,
                                        int budget);

/// Rotations theta such that every vertex angle, shifted by theta, avoids the
/// marked set U: the complement of the union of U - phi_i over the vertices.
/// Its measure is at least 2pi - count*measure(U).
AngularSet rotation_feasible_set(const AngularSet& U,
                                 std::span<const double> vertex_angles);

/// Rotate the selected configuration points by theta about the center and
/// return the minimum radial containment margin
///   min_i ( radial_distance(body, center, angle_i) - |p_i - center| ).
/// Non-negative iff every selected point lies in the body. An empty subset
/// yields +infinity.
double verify_subset(const Body& body, Point2 center, const Configuration& config,
                     std::span<const int> subset, double theta);

/// True iff the configuration hull's inradius strictly exceeds the body's
/// inradius (plus tol): no rigid image of the body can cover all points.
/// A false return is inconclusive on its own.
bool verify_noncover(const Body& body, const Configuration& config,
                     double tol = kDefaultTol);

/// Run the full construction pipeline for a given k and verify it:
/// choose the candidate center with the smallest marked measure, pick
/// construction parameters, place the polygon, find and check one rotation
/// per k-subset (exhaustive when C(n,k) <= subset_budget, else seeded
/// sampling), and check non-coverage.
CounterexampleCertificate build_certificate(const Body& body, int k, int budget,
                                   long long subset_budget, uint64_t seed);

struct VerifyReport {
  std::vector<std::string> violations;
  long long checked_subsets = 0;
  bool clean = false;
};

/// Independently re-check a stored certificate against a body: recompute
/// alpha, the k*alpha < 2pi precondition, every stored subset rotation via
/// containment, and the non-coverage inequality.
VerifyReport verify_certificate(const Body& body, const CounterexampleCertificate& cert);

/// Number of k-subsets of an n-set, clamped to `cap` to avoid overflow.
long long count_subsets_clamped(int n, int k, long long cap);

}  // namespace hellycover
