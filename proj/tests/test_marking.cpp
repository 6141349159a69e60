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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hellycover/incircle.hpp"
#include "hellycover/marking.hpp"
#include "test_support.hpp"

using namespace hellycover;
using namespace hellycover::test;

namespace {

// Closed form for the square with side 2 about its center: each of the four
// edges contributes an interval of half-width arctan(sqrt(R^2 - 1)).
double square_alpha(double R) {
  if (R <= 1.0) return 0.0;
  if (R >= std::sqrt(2.0)) return kTau;
  return 8.0 * std::atan(std::sqrt(R * R - 1.0));
}

// Sampling oracle: locate sign changes of rho_K(phi) - R on a dense grid and
// refine each crossing by bisection; sum the sub-threshold intervals.
double alpha_by_sampling(const Body& body, Point2 c, double R, int samples) {
  const auto below = [&](double phi) {
    return radial_distance(body, c, phi) < R;
  };
  const double step = kTau / samples;
  double measure = 0.0;
  double interval_start = 0.0;
  bool inside = below(0.0);
  const auto refine = [&](double lo, double hi) {
    for (int i = 0; i < 60; ++i) {
      const double mid = 0.5 * (lo + hi);
      (below(mid) != below(lo)) ? hi = mid : lo = mid;
    }
    return 0.5 * (lo + hi);
  };
  for (int i = 1; i <= samples; ++i) {
    const double phi = i * step;
    const bool now = below(phi);
    if (now == inside) continue;
    const double crossing = refine(phi - step, phi);
    if (inside)
      measure += crossing - interval_start;
    else
      interval_start = crossing;
    inside = now;
  }
  if (inside) measure += kTau - interval_start;
  return measure;
}

}  // namespace

TEST_CASE("marked set on the square: empty at R = r") {
  const MarkedSet ms = marked_set(square2(), {0, 0}, 1.0);
  CHECK(ms.U.is_empty());
  CHECK(ms.alpha == 0.0);
}

TEST_CASE("marked set on the square at R = 1.25: four symmetric intervals") {
  const double R = 1.25;
  const MarkedSet ms = marked_set(square2(), {0, 0}, R);
  CHECK(ms.alpha == doctest::Approx(square_alpha(R)).epsilon(1e-12));
  CHECK(ms.alpha == doctest::Approx(5.1480088703).epsilon(1e-9));
  REQUIRE(ms.U.arcs().size() == 4);
  // each interval has width 2*arctan(0.75) and is centered on an axis
  const double half = std::atan(0.75);
  const double centers[] = {3.0 * kPi / 2.0, 0.0, kPi / 2.0, kPi};
  for (const AngularInterval& arc : ms.U.arcs()) {
    CHECK(arc.length == doctest::Approx(2.0 * half).epsilon(1e-12));
    const double mid = normalize_angle(arc.start + arc.length / 2.0);
    bool matched = false;
    for (double c : centers)
      if (std::abs(normalize_angle(mid - c + kPi) - kPi) < 1e-9) matched = true;
    CHECK(matched);
  }
}

TEST_CASE("marked set on the square at R = 1.5: the full circle") {
  const MarkedSet ms = marked_set(square2(), {0, 0}, 1.5);
  CHECK(ms.U.is_full());
  CHECK(ms.alpha == doctest::Approx(kTau).epsilon(1e-15));
  // oracle: max of the radial profile is sqrt(2) < 1.5
  double max_reach = 0.0;
  for (int i = 0; i < 3600; ++i)
    max_reach = std::max(max_reach,
                         radial_distance(square2(), {0, 0}, kTau * i / 3600.0));
  CHECK(max_reach < 1.5);
}

TEST_CASE("marked alpha matches the dense sampling oracle") {
  for (double R : {1.05, 1.25, 1.4}) {
    const MarkedSet ms = marked_set(square2(), {0, 0}, R);
    CHECK(std::abs(ms.alpha - square_alpha(R)) < 1e-9);
    CHECK(std::abs(ms.alpha - alpha_by_sampling(square2(), {0, 0}, R, 20000)) < 1e-5);
  }
  // an asymmetric body and an off-center interior point
  const Body blob({{0.0, 1.1}, {-1.2, -0.3}, {0.3, -1.0}, {1.1, 0.2}}, 0.25);
  const Point2 c{0.1, -0.05};
  for (double R : {0.9, 1.1, 1.3}) {
    const MarkedSet ms = marked_set(blob, c, R);
    CHECK(std::abs(ms.alpha - alpha_by_sampling(blob, c, R, 20000)) < 1e-5);
  }
}

TEST_CASE("disc marking is all or nothing") {
  CHECK(marked_set(disc1(), {0, 0}, 0.9).alpha == 0.0);
  CHECK(marked_set(disc1(), {0, 0}, 1.0).alpha == 0.0);  // strict inequality
  CHECK(marked_set(disc1(), {0, 0}, 1.0001).U.is_full());
  CHECK(marked_set(disc1(), {0, 0}, 1.0001).alpha == doctest::Approx(kTau));
}

TEST_CASE("marked set rejects bad inputs") {
  CHECK_THROWS_AS(marked_set(square2(), {2, 0}, 1.2), ValidationError);
  CHECK_THROWS_AS(marked_set(square2(), {0, 0}, 0.0), ValidationError);
  CHECK_THROWS_AS(marked_set(square2(), {0, 0}, -1.0), ValidationError);
}

TEST_CASE("monotonicity: U grows with R") {
  const Body st = stadium();
  const double rs[] = {1.0001, 1.01, 1.05, 1.2, 1.5};
  MarkedSet prev = marked_set(st, {1, 0}, rs[0]);
  for (size_t i = 1; i < std::size(rs); ++i) {
    const MarkedSet cur = marked_set(st, {1, 0}, rs[i]);
    CHECK(angular_covers(cur.U, prev.U, 1e-9));
    CHECK(cur.alpha >= prev.alpha - 1e-12);
    prev = cur;
  }
}

TEST_CASE("membership in U is consistent with the radial profile") {
  DetRng rng(404);
  const Body bodies[] = {square2(), stadium(),
                         Body({{0, 1.3}, {-1.1, -0.2}, {0.9, -0.8}}, 0.15)};
  for (const Body& body : bodies) {
    const Point2 c{0.15, 0.05};
    for (double R : {1.02, 1.25}) {
      const MarkedSet ms = marked_set(body, c, R);
      for (int i = 0; i < 1000; ++i) {
        const double phi = rng.real(0.0, kTau);
        const double reach = radial_distance(body, c, phi);
        if (std::abs(reach - R) < 1e-9) continue;  // tolerance band
        CHECK(ms.U.contains(phi) == (reach < R));
      }
    }
  }
}

TEST_CASE("rotation equivariance of the marked set") {
  const Body blob({{0.0, 1.1}, {-1.2, -0.3}, {0.3, -1.0}, {1.1, 0.2}}, 0.2);
  const Point2 c{0.1, 0.0};
  const double R = 1.15;
  const MarkedSet base = marked_set(blob, c, R);
  for (double theta : {0.7, 2.1, 4.9}) {
    const RigidMotion g(theta, {0, 0});
    const MarkedSet rotated = marked_set(apply(g, blob), apply(g, c), R);
    const double sym = angular_symmetric_difference_measure(
        rotated.U, base.U.shifted(theta));
    CHECK(sym < 1e-9);
  }
}

TEST_CASE("limit to contact: alpha just above r approaches the contact measure") {
  // Tangential contact scales like sqrt(delta), so at delta = 1e-9 the
  // attainable agreement is ~1e-3, not tighter.
  const double a_sq = marked_set(square2(), {0, 0}, 1.0 + 1e-9).alpha;
  CHECK(a_sq < 1e-3);  // discrete contact: limit 0

  const ContactReport cap = contact_report(stadium(), {0, 0});
  const double a_st = marked_set(stadium(), {0, 0}, 1.0 + 1e-9).alpha;
  CHECK(std::abs(a_st - cap.contact_arcs.measure()) < 1e-3);
}

TEST_CASE("alpha profile rows are sorted and match the closed form") {
  const double rs[] = {1.1, 1.0, 1.01, 1.001};
  const AlphaProfile profile = alpha_profile(square2(), {0, 0}, rs);
  REQUIRE(profile.rows.size() == 4);
  for (size_t i = 1; i < profile.rows.size(); ++i) {
    CHECK(profile.rows[i - 1].first < profile.rows[i].first);
    CHECK(profile.rows[i - 1].second <= profile.rows[i].second + 1e-12);
  }
  for (const auto& [R, alpha] : profile.rows)
    CHECK(alpha == doctest::Approx(square_alpha(R)).epsilon(1e-9));
  // frozen closed-form values
  CHECK(profile.rows[0].second == 0.0);
  CHECK(profile.rows[1].second == doctest::Approx(0.3576219013).epsilon(1e-8));
  CHECK(profile.rows[2].second == doctest::Approx(1.1266869885).epsilon(1e-8));
  CHECK(profile.rows[3].second == doctest::Approx(3.4375973292).epsilon(1e-8));
}

TEST_CASE("disc profile rows") {
  const double rs[] = {0.9, 1.0};
  const AlphaProfile profile = alpha_profile(disc1(), {0, 0}, rs);
  CHECK(profile.rows[0].second == 0.0);
  CHECK(profile.rows[1].second == 0.0);
}
