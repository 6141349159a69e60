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
#include "test_support.hpp"

using namespace hellycover;
using namespace hellycover::test;

namespace {

// Independent oracle: grid search over interior candidate centers maximizing
// the smallest edge clearance.
double inradius_grid_oracle(const std::vector<Point2>& poly, int n_grid) {
  double lo_x = 1e300, lo_y = 1e300, hi_x = -1e300, hi_y = -1e300;
  for (Point2 p : poly) {
    lo_x = std::min(lo_x, p.x);
    lo_y = std::min(lo_y, p.y);
    hi_x = std::max(hi_x, p.x);
    hi_y = std::max(hi_y, p.y);
  }
  double best = 0.0;
  for (int i = 0; i <= n_grid; ++i) {
    for (int j = 0; j <= n_grid; ++j) {
      const Point2 c{lo_x + (hi_x - lo_x) * i / n_grid,
                     lo_y + (hi_y - lo_y) * j / n_grid};
      best = std::max(best, -signed_polygon_distance(poly, c));
    }
  }
  return best;
}

}  // namespace

TEST_CASE("incircle of the square: r = 1 at the center") {
  const Incircle inc = chebyshev_incircle(square2());
  CHECK(inc.r == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(inc.centers.kind == CenterSetKind::point);
  REQUIRE(inc.centers.points.size() == 1);
  CHECK(norm(inc.centers.points[0]) < 1e-9);
  // frozen grid-oracle cross-check
  CHECK(std::abs(inc.r - inradius_grid_oracle(square2().core(), 200)) < 0.02);
}

TEST_CASE("incircle of a disc is the disc itself") {
  const Incircle inc = chebyshev_incircle(disc1());
  CHECK(inc.r == doctest::Approx(1.0));
  CHECK(inc.centers.kind == CenterSetKind::point);
  CHECK(distance(inc.centers.points[0], {0, 0}) < 1e-15);
}

TEST_CASE("incircle of the stadium: the whole segment of centers") {
  const Incircle inc = chebyshev_incircle(stadium());
  CHECK(inc.r == doctest::Approx(1.0));
  REQUIRE(inc.centers.kind == CenterSetKind::segment);
  CHECK(distance(inc.centers.points[0], {0, 0}) < 1e-12);
  CHECK(distance(inc.centers.points[1], {2, 0}) < 1e-12);
}

TEST_CASE("inradius_of_points examples") {
  // regular 40-gon with circumradius 1.01/cos(pi/40): inradius exactly 1.01
  const double R = 1.01 / std::cos(kPi / 40.0);
  std::vector<Point2> gon;
  for (int i = 0; i < 40; ++i) gon.push_back(R * unit(kTau * i / 40.0));
  CHECK(inradius_of_points(gon) == doctest::Approx(1.01).epsilon(1e-12));

  // equilateral triangle with circumradius 2: inradius 1
  CHECK(inradius_of_points(tri_eq().core()) == doctest::Approx(1.0).epsilon(1e-12));

  const std::vector<Point2> collinear = {{0, 0}, {1, 0}, {2, 0}};
  CHECK_THROWS_AS(inradius_of_points(collinear), ValidationError);
}

TEST_CASE("random polygons: LP inradius matches the grid oracle") {
  DetRng rng(101);
  for (int trial = 0; trial < 10; ++trial) {
    const std::vector<Point2> poly = random_convex_polygon(rng, 5, 10);
    const double r_lp = inradius_of_points(poly);
    const double r_grid = inradius_grid_oracle(poly, 200);
    const double step = 2.8 / 200.0;  // generator keeps the hull in [-1.4, 1.4]
    CHECK(std::abs(r_lp - r_grid) <= 2.0 * step);
    CHECK(r_lp >= r_grid - 1e-12);  // the oracle can only undershoot
  }
}

TEST_CASE("incircle discs actually fit: sampled boundary containment") {
  DetRng rng(55);
  for (int trial = 0; trial < 8; ++trial) {
    const Body body(random_convex_polygon(rng, 5, 9), trial % 2 ? 0.5 : 0.0);
    const Incircle inc = chebyshev_incircle(body);
    for (Point2 c : inc.centers.points) {
      for (int i = 0; i < 360; ++i)
        CHECK(contains(body, c + (inc.r - 1e-6) * unit(kTau * i / 360.0), kDefaultTol));
    }
    // no disc of radius r + 1e-6 fits anywhere on a coarse interior grid
    bool bigger_fits = false;
    for (int gx = 0; gx <= 50 && !bigger_fits; ++gx) {
      for (int gy = 0; gy <= 50; ++gy) {
        const Point2 c{-1.5 + 3.0 * gx / 50.0, -1.5 + 3.0 * gy / 50.0};
        if (signed_distance(body, c) > 0) continue;
        bool fits = true;
        for (int i = 0; i < 90 && fits; ++i)
          fits = contains(body, c + (inc.r + 1e-6) * unit(kTau * i / 90.0), 0.0);
        if (fits) {
          bigger_fits = true;
          break;
        }
      }
    }
    CHECK_FALSE(bigger_fits);
  }
}

TEST_CASE("Minkowski identity: r(P + rho D) = r(P) + rho, same centers") {
  DetRng rng(77);
  for (int trial = 0; trial < 6; ++trial) {
    const std::vector<Point2> poly = random_convex_polygon(rng, 5, 9);
    const Incircle bare = chebyshev_incircle(Body(poly, 0.0));
    for (double rho : {0.1, 1.0}) {
      const Incircle fat = chebyshev_incircle(Body(poly, rho));
      CHECK(std::abs(fat.r - bare.r - rho) < 1e-9);
      REQUIRE(fat.centers.points.size() == bare.centers.points.size());
      for (size_t i = 0; i < fat.centers.points.size(); ++i)
        CHECK(distance(fat.centers.points[i], bare.centers.points[i]) < 1e-9);
    }
  }
}

TEST_CASE("scaling law: r scales, lower bound does not") {
  const Body st = stadium();
  const ContactReport rep1 = contact_report(st, {0, 0});
  for (double s : {0.5, 3.0}) {
    std::vector<Point2> scaled;
    for (Point2 p : st.core()) scaled.push_back(s * p);
    const Body sb(scaled, s * st.rho());
    CHECK(chebyshev_incircle(sb).r == doctest::Approx(s * 1.0).epsilon(1e-12));
    const ContactReport rep = contact_report(sb, {0, 0});
    CHECK(rep.lower_bound == doctest::Approx(rep1.lower_bound).epsilon(1e-9));
  }
}

TEST_CASE("candidate centers") {
  const auto sq_cands = candidate_centers(square2());
  REQUIRE(sq_cands.size() == 1);
  CHECK(norm(sq_cands[0]) < 1e-9);

  const auto disc_cands = candidate_centers(disc1());
  REQUIRE(disc_cands.size() == 1);
  CHECK(distance(disc_cands[0], {0, 0}) < 1e-15);

  const auto st_cands = candidate_centers(stadium());
  REQUIRE(st_cands.size() == 3);
  CHECK(distance(st_cands[0], {0, 0}) < 1e-12);
  CHECK(distance(st_cands[1], {2, 0}) < 1e-12);
  CHECK(distance(st_cands[2], {1, 0}) < 1e-12);
}

TEST_CASE("contact report: square has four tangencies and no arcs") {
  const ContactReport rep = contact_report(square2(), {0, 0});
  CHECK(rep.discrete);
  CHECK(rep.contact_arcs.is_empty());
  CHECK(rep.alpha_contact == 0.0);
  CHECK(std::isinf(rep.lower_bound));
  REQUIRE(rep.tangent_points.size() == 4);
  const double expected[] = {0.0, kPi / 2.0, kPi, 3.0 * kPi / 2.0};
  for (int i = 0; i < 4; ++i)
    CHECK(std::abs(rep.tangent_points[i] - expected[i]) < 1e-12);

  // oracle: tangency angles are exactly where the radial profile dips to r
  for (double phi : rep.tangent_points)
    CHECK(std::abs(radial_distance(square2(), {0, 0}, phi) - rep.r) < 1e-12);
}

TEST_CASE("contact report: disc contact is the full circle, bound 1") {
  const ContactReport rep = contact_report(disc1(), {0, 0});
  CHECK_FALSE(rep.discrete);
  CHECK(rep.contact_arcs.is_full());
  CHECK(rep.alpha_contact == doctest::Approx(kTau).epsilon(1e-12));
  CHECK(rep.beta == doctest::Approx(kTau).epsilon(1e-12));
  CHECK(rep.lower_bound == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("contact report: stadium left cap is a concentric arc, bound 2") {
  const ContactReport rep = contact_report(stadium(), {0, 0});
  CHECK_FALSE(rep.discrete);
  REQUIRE(rep.contact_arcs.arcs().size() == 1);
  const AngularInterval arc = rep.contact_arcs.arcs()[0];
  CHECK(arc.start == doctest::Approx(kPi / 2.0).epsilon(1e-12));
  CHECK(arc.length == doctest::Approx(kPi).epsilon(1e-12));
  CHECK(rep.alpha_contact == doctest::Approx(kPi).epsilon(1e-12));
  CHECK(rep.lower_bound == doctest::Approx(2.0).epsilon(1e-12));

  // oracle: a dense radial scan flags |rho_K(phi) - r| < tol exactly on the cap
  for (int i = 0; i < 720; ++i) {
    const double phi = kTau * i / 720.0;
    const bool on_cap = rep.contact_arcs.contains(phi);
    const double reach = radial_distance(stadium(), {0, 0}, phi);
    if (on_cap) CHECK(std::abs(reach - rep.r) < 1e-9);
  }

  // the midpoint center sees only two tangency points
  const ContactReport mid = contact_report(stadium(), {1, 0});
  CHECK(mid.discrete);
  CHECK(std::isinf(mid.lower_bound));
  REQUIRE(mid.tangent_points.size() == 2);

  // centers off the admissible set are rejected
  CHECK_THROWS_AS(contact_report(stadium(), {1, 0.5}), ValidationError);
}

TEST_CASE("rho = 0 bodies always have discrete contact") {
  DetRng rng(202);
  for (int trial = 0; trial < 10; ++trial) {
    const Body body(random_convex_polygon(rng, 4, 8), 0.0);
    for (Point2 c : candidate_centers(body)) {
      const ContactReport rep = contact_report(body, c);
      CHECK(rep.discrete);
      CHECK(std::isinf(rep.lower_bound));
    }
  }
}
