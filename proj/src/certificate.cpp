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

#include "hellycover/certificate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "hellycover/rng.hpp"

namespace hellycover {

namespace {

constexpr double kSlack = 0.05;        // headroom on the k*alpha < 2pi test
constexpr double kMarginTol = 1e-9;    // strict-margin tolerance

std::vector<double> vertex_angles_about(const Configuration& config, Point2 center) {
  std::vector<double> out;
  out.reserve(config.points.size());
  for (Point2 p : config.points) out.push_back(angle_of(p - center));
  return out;
}

// Lexicographically next k-combination of {0..n-1}; false when done.
bool next_combination(std::vector<int>& idx, int n) {
  const int k = static_cast<int>(idx.size());
  for (int i = k - 1; i >= 0; --i) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

long long count_subsets_clamped(int n, int k, long long cap) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long c = 1;
  for (int i = 1; i <= k; ++i) {
    // partial products C(n-k+i, i) are nondecreasing, so bail early before
    // the exact update can overflow or exceed the cap
    if (c > cap ||
        c > std::numeric_limits<long long>::max() / (n - k + i))
      return cap + 1;
    c = c * (n - k + i) / i;
  }
  return std::min(c, cap + 1);
}

std::pair<Configuration, double> regular_polygon_config(Point2 center, double r,
                                                        double epsilon, int n,
                                                        double phase) {
  if (n < 3) throw ValidationError("regular_polygon_config: n must be >= 3");
  if (!(epsilon >= 0.0) || !std::isfinite(epsilon))
    throw ValidationError("regular_polygon_config: epsilon must be >= 0");
  const double R = (r + epsilon) / std::cos(kPi / n);
  Configuration config;
  config.points.reserve(n);
  for (int i = 0; i < n; ++i) {
    const double ang = phase + kTau * i / n;
    config.points.push_back(center + R * unit(ang));
  }
  std::ostringstream prov;
  prov << "regular_polygon n=" << n << " inradius=" << (r + epsilon)
       << " phase=" << phase;
  config.provenance = prov.str();
  return {std::move(config), R};
}

ChosenParams choose_construction_params(const Body& body, Point2 center, int k,
                                        int budget) {
  if (k < 1) throw ValidationError("choose_construction_params: k must be >= 1");
  if (budget < 1) throw ValidationError("choose_construction_params: budget must be >= 1");
  const double r = chebyshev_incircle(body).r;
  const double target = kTau / (k * (1.0 + kSlack));

  double epsilon = r;
  long long n = 8;
  for (int j = 1; j <= budget; ++j) {
    epsilon /= 10.0;
    if (j > 1) n *= 5;
    if (n > 10'000'000)
      throw BudgetExhausted(
          "choose_construction_params: vertex count limit reached before "
          "alpha fell below 2*pi/k");
    if (n < k) continue;  // a k-subset needs at least k vertices
    const double R = (r + epsilon) / std::cos(kPi / static_cast<double>(n));
    const MarkedSet ms = marked_set(body, center, R);
    if (ms.alpha < target) {
      ChosenParams chosen;
      chosen.params = {epsilon, static_cast<int>(n), R, center};
      chosen.alpha = ms.alpha;
      return chosen;
    }
  }
  throw BudgetExhausted(
      "choose_construction_params: alpha did not fall below 2*pi/k within "
      "the budget (positive-measure contact at this center?)");
}

AngularSet rotation_feasible_set(const AngularSet& U,
                                 std::span<const double> vertex_angles) {
  std::vector<AngularSet> shifted;
  shifted.reserve(vertex_angles.size());
  for (double phi : vertex_angles) shifted.push_back(U.shifted(-phi));
  return angular_complement(angular_union(shifted));
}

double verify_subset(const Body& body, Point2 center, const Configuration& config,
                     std::span<const int> subset, double theta) {
  double margin = std::numeric_limits<double>::infinity();
  for (int idx : subset) {
    if (idx < 0 || idx >= static_cast<int>(config.points.size()))
      throw ValidationError("verify_subset: index out of range");
    const Point2 p = rotate_about(config.points[idx], center, theta);
    const double dist = distance(p, center);
    const double reach = radial_distance(body, center, angle_of(p - center));
    margin = std::min(margin, reach - dist);
  }
  return margin;
}

bool verify_noncover(const Body& body, const Configuration& config, double tol) {
  const double hull_r = inradius_of_points(config.points);
  return hull_r > chebyshev_incircle(body).r + tol;
}

CounterexampleCertificate build_certificate(const Body& body, int k, int budget,
                                   long long subset_budget, uint64_t seed) {
  if (k < 1) throw ValidationError("build_certificate: k must be >= 1");
  if (subset_budget < 1)
    throw ValidationError("build_certificate: subset_budget must be >= 1");

  const Incircle inc = chebyshev_incircle(body);
  const double r = inc.r;

  // The center with the smallest marked measure just above r has the best
  // chance of discrete contact.
  const std::vector<Point2> cands = candidate_centers(body);
  Point2 center = cands.front();
  double best_alpha = std::numeric_limits<double>::infinity();
  for (Point2 c : cands) {
    const double a = marked_set(body, c, r * (1.0 + 1e-6)).alpha;
    if (a < best_alpha) {
      best_alpha = a;
      center = c;
    }
  }

  const ChosenParams chosen = choose_construction_params(body, center, k, budget);

  CounterexampleCertificate cert{.body = body,
                        .center = center,
                        .k = k,
                        .params = chosen.params,
                        .alpha = chosen.alpha,
                        .points = {},
                        .strategy = {},
                        .subset_results = {},
                        .noncover = {},
                        .verdict = false};

  auto [config, R] = regular_polygon_config(center, r, chosen.params.epsilon,
                                            chosen.params.n, 0.0);
  cert.points = std::move(config);
  cert.params.R = R;

  const AngularSet U = marked_set(body, center, R).U;
  cert.alpha = U.measure();
  const std::vector<double> angles = vertex_angles_about(cert.points, center);

  const int n = chosen.params.n;
  const long long total = count_subsets_clamped(n, k, subset_budget);
  const bool exhaustive = total <= subset_budget;

  bool all_margins_ok = true;
  const auto check_subset = [&](const std::vector<int>& subset) {
    std::vector<double> sub_angles;
    sub_angles.reserve(subset.size());
    for (int i : subset) sub_angles.push_back(angles[i]);
    const AngularSet feasible = rotation_feasible_set(U, sub_angles);
    if (feasible.is_empty())
      throw GeometryError(
          "build_certificate: empty feasible rotation set despite k*alpha < 2*pi");
    const AngularInterval arc = largest_arc(feasible);
    const double theta = normalize_angle(arc.start + arc.length / 2.0);
    const double margin = verify_subset(body, center, cert.points, subset, theta);
    if (margin < -kMarginTol) all_margins_ok = false;
    cert.subset_results.push_back({subset, theta, margin});
  };

  if (exhaustive) {
    cert.strategy = {true, total, seed};
    cert.subset_results.reserve(static_cast<size_t>(total));
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    do {
      check_subset(idx);
    } while (next_combination(idx, n));
  } else {
    cert.strategy = {false, subset_budget, seed};
    cert.subset_results.reserve(static_cast<size_t>(subset_budget));
    DetRng rng(seed);
    for (long long it = 0; it < subset_budget; ++it) check_subset(rng.subset(n, k));
  }

  cert.noncover.hull_inradius = inradius_of_points(cert.points.points);
  cert.noncover.body_inradius = r;
  const bool noncover_ok =
      cert.noncover.hull_inradius > cert.noncover.body_inradius + kMarginTol;

  cert.verdict = all_margins_ok && noncover_ok && (k * cert.alpha < kTau);
  return cert;
}

VerifyReport verify_certificate(const Body& body, const CounterexampleCertificate& cert) {
  VerifyReport report;
  auto fail = [&](const std::string& msg) { report.violations.push_back(msg); };

  if (!approx_equal(body, cert.body, 1e-9 * body.scale()))
    fail("body mismatch: certificate was built for a different body");

  const double r = chebyshev_incircle(body).r;
  const ConstructionParams& p = cert.params;
  if (p.n < 3) {
    fail("params: n < 3");
    report.clean = false;
    return report;
  }
  const double R_expected = (r + p.epsilon) / std::cos(kPi / p.n);
  if (std::abs(R_expected - p.R) > 1e-8 * body.scale())
    fail("params: R inconsistent with (epsilon, n) and the body inradius");

  double alpha = 0.0;
  AngularSet U;
  try {
    const MarkedSet ms = marked_set(body, p.center, p.R);
    U = ms.U;
    alpha = ms.alpha;
  } catch (const ValidationError& e) {
    fail(std::string("marked set: ") + e.what());
    report.clean = false;
    return report;
  }
  if (std::abs(alpha - cert.alpha) > 1e-8)
    fail("alpha mismatch: recomputed marked measure differs from the stored one");
  if (cert.k * cert.alpha >= kTau)
    fail("precondition violation: k*alpha >= 2*pi");

  if (static_cast<int>(cert.points.points.size()) != p.n)
    fail("points: configuration size differs from params.n");

  long long bad_subsets = 0;
  for (size_t si = 0; si < cert.subset_results.size(); ++si) {
    const SubsetResult& sr = cert.subset_results[si];
    bool subset_ok = true;
    double margin = std::numeric_limits<double>::infinity();
    for (int idx : sr.subset) {
      if (idx < 0 || idx >= static_cast<int>(cert.points.points.size())) {
        fail("subset " + std::to_string(si) + ": index out of range");
        subset_ok = false;
        break;
      }
      const Point2 q = rotate_about(cert.points.points[idx], cert.center, sr.theta);
      if (!contains(body, q, kMarginTol)) subset_ok = false;
      const double reach = radial_distance(body, cert.center, angle_of(q - cert.center));
      margin = std::min(margin, reach - distance(q, cert.center));
    }
    if (!subset_ok || margin < -kMarginTol) {
      ++bad_subsets;
      if (bad_subsets <= 8)
        fail("subset " + std::to_string(si) +
             ": rotated points leave the body (margin " + std::to_string(margin) + ")");
    } else if (std::abs(margin - sr.margin) > 1e-7) {
      ++bad_subsets;
      if (bad_subsets <= 8)
        fail("subset " + std::to_string(si) + ": stored margin differs from recomputed");
    }
    ++report.checked_subsets;
  }
  if (bad_subsets > 8)
    fail("... " + std::to_string(bad_subsets - 8) + " further subset violations");

  try {
    const double hull_r = inradius_of_points(cert.points.points);
    if (std::abs(hull_r - cert.noncover.hull_inradius) > 1e-8)
      fail("noncover: stored hull inradius differs from recomputed");
    if (std::abs(r - cert.noncover.body_inradius) > 1e-8)
      fail("noncover: stored body inradius differs from recomputed");
    if (!(hull_r > r + kMarginTol))
      fail("noncover: hull inradius does not exceed the body inradius");
  } catch (const ValidationError& e) {
    fail(std::string("noncover: ") + e.what());
  }

  if (cert.verdict && !report.violations.empty())
    fail("verdict: certificate claims success but checks failed");
  report.clean = report.violations.empty() && cert.verdict;
  return report;
}

}  // namespace hellycover
