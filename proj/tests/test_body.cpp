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

#include "hellycover/body.hpp"
#include "test_support.hpp"

using namespace hellycover;
using namespace hellycover::test;

TEST_CASE("containment examples") {
  const Body sq = square2();
  CHECK(contains(sq, {0.5, 0.5}, 1e-9));
  CHECK_FALSE(contains(sq, {1.5, 0.0}, 1e-9));
  CHECK(contains(disc1(), {0, 1}, 1e-9));  // boundary point
  CHECK(contains(stadium(), {2.5, 0.5}, 1e-9));
  CHECK_FALSE(contains(stadium(), {3.1, 0}, 1e-9));
}

TEST_CASE("body validation rejects bad input") {
  CHECK_THROWS_AS(Body({{0, 0}, {1, 0}, {2, 0}}, 0.0), ValidationError);  // collinear
  CHECK_THROWS_AS(Body({{-1, -1}, {1, -1}}, 0.0), ValidationError);  // segment, rho 0
  CHECK_THROWS_AS(Body({{0, 0}}, 0.0), ValidationError);             // point, rho 0
  CHECK_THROWS_AS(Body({{0, 0}, {1, 0}, {1, 1}, {0, 1}}, -0.5), ValidationError);
  // clockwise order
  CHECK_THROWS_AS(Body({{-1, -1}, {-1, 1}, {1, 1}, {1, -1}}, 0.0), ValidationError);
  // duplicate within tolerance
  CHECK_THROWS_AS(Body({{0, 0}, {1e-12, 0}, {1, 1}}, 0.0), ValidationError);
}

TEST_CASE("radial distance examples") {
  const Body sq = square2();
  CHECK(radial_distance(sq, {0, 0}, 0.0) == doctest::Approx(1.0));
  CHECK(radial_distance(sq, {0, 0}, kPi / 4.0) ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  for (double phi : {0.0, 1.0, 2.5, 4.0, 6.0})
    CHECK(radial_distance(disc1(), {0, 0}, phi) == doctest::Approx(1.0));
  CHECK_THROWS_AS(radial_distance(sq, {2, 0}, 0.0), ValidationError);
}

TEST_CASE("radial distance agrees with the containment-bisection oracle") {
  DetRng rng(5);
  const Body bodies[] = {square2(), disc1(), stadium(),
                         Body({{0, 1.2}, {-1, -0.4}, {0.8, -0.9}}, 0.3)};
  for (const Body& body : bodies) {
    const Point2 c = body.core().size() == 1 ? body.core()[0]
                                             : Point2{0.1, 0.05};
    for (int i = 0; i < 200; ++i) {
      const double phi = rng.real(0.0, kTau);
      const double direct = radial_distance(body, c, phi);
      const double oracle = radial_by_bisection(body, c, phi);
      CHECK(std::abs(direct - oracle) < 1e-9);
    }
  }
}

TEST_CASE("boundary band property: inside just below, outside just above") {
  DetRng rng(17);
  const double delta = 1e-6;
  const Body bodies[] = {square2(), disc1(), stadium()};
  for (const Body& body : bodies) {
    const Point2 c = body.core().size() == 1 ? body.core()[0] : Point2{0.2, 0.1};
    for (int i = 0; i < 1000; ++i) {
      const double phi = rng.real(0.0, kTau);
      const double s = radial_distance(body, c, phi);
      CHECK(contains(body, c + (s - delta) * unit(phi), kDefaultTol));
      CHECK_FALSE(contains(body, c + (s + delta) * unit(phi), kDefaultTol));
    }
  }
}

TEST_CASE("reflect examples and involution") {
  const Body sq = square2();
  CHECK(approx_equal(reflect(sq), sq, 1e-12));  // central symmetry

  const Body st = stadium();
  const Body neg = reflect(st);
  CHECK(neg.rho() == st.rho());
  CHECK(distance(neg.core()[0], {0, 0}) < 1e-15);
  CHECK(distance(neg.core()[1], {-2, 0}) < 1e-15);

  const Body tri = tri_eq();
  const Body tneg = reflect(tri);
  CHECK(distance(tneg.core()[0], {0, -2}) < 1e-12);
  CHECK(distance(tneg.core()[1], {std::sqrt(3.0), 1}) < 1e-12);
  CHECK(distance(tneg.core()[2], {-std::sqrt(3.0), 1}) < 1e-12);

  for (const Body& body : {sq, st, tri})
    CHECK(approx_equal(reflect(reflect(body)), body, 1e-12));
}

TEST_CASE("containment duality under reflection") {
  DetRng rng(23);
  const Body tri = tri_eq();
  const Body neg = reflect(tri);
  for (int i = 0; i < 500; ++i) {
    const Point2 p{rng.real(-3, 3), rng.real(-3, 3)};
    CHECK(contains(tri, p) == contains(neg, -p));
  }
}

TEST_CASE("apply: identity, rotation, translation; inverse round trip") {
  const Body sq = square2();
  CHECK(approx_equal(apply(RigidMotion(0.0, {0, 0}), sq), sq, 1e-15));

  const Body moved = apply(RigidMotion(0.0, {3, 4}), disc1());
  CHECK(distance(moved.core()[0], {3, 4}) < 1e-15);
  CHECK(moved.rho() == 1.0);

  DetRng rng(31);
  for (int i = 0; i < 50; ++i) {
    const RigidMotion g(rng.real(0, kTau), {rng.real(-2, 2), rng.real(-2, 2)});
    const Body back = apply(g, apply(g.inverse(), sq));
    CHECK(approx_equal(back, sq, 1e-12));
  }
}

TEST_CASE("boundary pieces alternate as expected") {
  // square, rho 0: four edges, no arcs
  CHECK(boundary_pieces(square2()).size() == 4);
  // disc: one full-circle arc
  const auto disc_pieces = boundary_pieces(disc1());
  REQUIRE(disc_pieces.size() == 1);
  CHECK(std::get<ArcPiece>(disc_pieces[0]).length == doctest::Approx(kTau));
  // stadium: two edges + two semicircular caps
  const auto st_pieces = boundary_pieces(stadium());
  int edges = 0, arcs = 0;
  for (const auto& p : st_pieces)
    std::holds_alternative<EdgePiece>(p) ? ++edges : ++arcs;
  CHECK(edges == 2);
  CHECK(arcs == 2);
  for (const auto& p : st_pieces)
    if (const ArcPiece* a = std::get_if<ArcPiece>(&p))
      CHECK(a->length == doctest::Approx(kPi));
}
