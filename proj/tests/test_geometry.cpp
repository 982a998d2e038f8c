/*
 * Copyright (C) 2026 The goalline Authors
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
#include <random>

#include "goalline/errors.hpp"
#include "goalline/geometry.hpp"

using namespace goalline;

TEST_CASE("orthogonal bisector of mirrored points is the diagonal y = x") {
  const ImplicitLine line = orthogonal_bisector(Point(1.0, 0.0), Point(0.0, 1.0));
  // Points on y = x are equidistant from (1,0) and (0,1).
  for (double t : {-2.0, 0.0, 0.7, 3.5}) {
    CHECK(std::abs(line.signed_distance(Point(t, t))) < 1e-12);
  }
  // Slope/intercept form: y = 1 * x + 0.
  CHECK(line.signed_distance(Point(0.0, 1.0)) > 0.0);  // q side is positive
  CHECK(line.signed_distance(Point(1.0, 0.0)) < 0.0);
}

TEST_CASE("orthogonal bisector of horizontally aligned pursuers is vertical") {
  const ImplicitLine line = orthogonal_bisector(Point(2.0, 2.0), Point(6.0, 2.0));
  CHECK(line.a == doctest::Approx(1.0));
  CHECK(line.b == doctest::Approx(0.0));
  CHECK(line.c == doctest::Approx(4.0));
}

TEST_CASE("bisector equidistance property on random pairs") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  for (int trial = 0; trial < 200; ++trial) {
    const Point p(u(rng), u(rng));
    const Point q(u(rng), u(rng));
    if ((p - q).norm() < 1e-6) continue;
    const ImplicitLine line = orthogonal_bisector(p, q);
    // Unit normal.
    CHECK(std::abs(line.a * line.a + line.b * line.b - 1.0) < 1e-12);
    // Walk along the line and compare distances to p and q.
    const Point mid = 0.5 * (p + q);
    const Point tangent(-line.b, line.a);
    for (double s : {-3.0, -0.5, 0.0, 1.0, 4.0}) {
      const Point z = mid + s * tangent;
      CHECK(std::abs(line.signed_distance(z)) < 1e-9);
      CHECK((z - p).norm() == doctest::Approx((z - q).norm()).epsilon(1e-9));
    }
  }
}

TEST_CASE("bisector of coincident points is degenerate") {
  CHECK_THROWS_AS(orthogonal_bisector(Point(1.0, 2.0), Point(1.0, 2.0)),
                  DegenerateInput);
}

TEST_CASE("apollonius circle of the tangency example") {
  // Evader (4,1) against a twice-as-fast pursuer at (4,2).
  const Circle c = apollonius_circle(Point(4.0, 1.0), Point(4.0, 2.0), 0.5);
  CHECK(c.center.x() == doctest::Approx(4.0).epsilon(1e-14));
  CHECK(c.center.y() == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
  CHECK(c.radius == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
}

TEST_CASE("apollonius circle satisfies the distance-ratio property") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  std::uniform_real_distribution<double> ur(0.05, 0.95);
  for (int trial = 0; trial < 200; ++trial) {
    const Point e(u(rng), u(rng));
    const Point p(u(rng), u(rng));
    if ((e - p).norm() < 1e-3) continue;
    const double ratio = ur(rng);
    const Circle c = apollonius_circle(e, p, ratio);
    for (double th = 0.0; th < 6.28; th += 0.7) {
      const Point z = c.center + c.radius * Point(std::cos(th), std::sin(th));
      const double lhs = (z - e).norm();
      const double rhs = ratio * (z - p).norm();
      CHECK(std::abs(lhs - rhs) < 1e-9 * (1.0 + lhs + rhs));
    }
    // The evader itself is inside its own dominance disk.
    CHECK((e - c.center).norm() < c.radius);
  }
}

TEST_CASE("apollonius circle rejects bad ratios and coincident points") {
  CHECK_THROWS_AS(apollonius_circle(Point(0, 0), Point(1, 0), 0.0), InvalidRatio);
  CHECK_THROWS_AS(apollonius_circle(Point(0, 0), Point(1, 0), 1.0), InvalidRatio);
  CHECK_THROWS_AS(apollonius_circle(Point(0, 0), Point(1, 0), 1.3), InvalidRatio);
  CHECK_THROWS_AS(apollonius_circle(Point(0, 0), Point(1, 0), -0.4), InvalidRatio);
  CHECK_THROWS_AS(apollonius_circle(Point(1, 1), Point(1, 1), 0.5), DegenerateInput);
}

TEST_CASE("axis crossings of the pursuer-pair circle give -4 and 4/3") {
  // Slow pursuer (0,1) vs twice-as-fast pursuer (4,2).
  const Circle c = apollonius_circle(Point(0.0, 1.0), Point(4.0, 2.0), 0.5);
  const AxisCrossing ax = axis_crossings(c);
  REQUIRE(ax.kind == CrossingKind::TwoPoints);
  CHECK(ax.xs[0] == doctest::Approx(-4.0).epsilon(1e-12));
  CHECK(ax.xs[1] == doctest::Approx(4.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("axis crossings: tangency and miss") {
  const Circle tangent{Point(4.0, 2.0 / 3.0), 2.0 / 3.0};
  const AxisCrossing t = axis_crossings(tangent);
  REQUIRE(t.kind == CrossingKind::Tangent);
  CHECK(t.xs[0] == doctest::Approx(4.0));

  const Circle miss{Point(0.0, 5.0), 1.0};
  CHECK(axis_crossings(miss).kind == CrossingKind::None);
}

TEST_CASE("axis crossing roots satisfy the circle equation") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> ux(-10.0, 10.0);
  std::uniform_real_distribution<double> uy(0.0, 4.0);
  std::uniform_real_distribution<double> ur(0.1, 8.0);
  for (int trial = 0; trial < 500; ++trial) {
    const Circle c{Point(ux(rng), uy(rng)), ur(rng)};
    const AxisCrossing ax = axis_crossings(c);
    if (ax.kind != CrossingKind::TwoPoints) continue;
    CHECK(ax.xs[0] <= ax.xs[1]);
    for (double x : {ax.xs[0], ax.xs[1]}) {
      const double res = (x - c.center.x()) * (x - c.center.x()) +
                         c.center.y() * c.center.y() - c.radius * c.radius;
      CHECK(std::abs(res) <= 1e-9 * (1.0 + c.radius * c.radius));
    }
  }
}

TEST_CASE("apollonius circle approaches the bisector as ratio -> 1") {
  const Point e(1.0, 1.0);
  const Point p(3.0, 2.0);
  const double ratio = 1.0 - 1e-4;
  const Circle c = apollonius_circle(e, p, ratio);
  const ImplicitLine line = orthogonal_bisector(e, p);
  const Point mid = 0.5 * (e + p);
  // Near the midpoint the circle is locally the bisector line; the signed
  // distance conventions match (negative on the evader side).
  for (double dx : {-1.0, -0.3, 0.0, 0.4, 1.2}) {
    for (double dy : {-1.0, 0.0, 0.8}) {
      const Point z = mid + Point(dx, dy);
      const double d_circle = (z - c.center).norm() - c.radius;
      const double d_line = line.signed_distance(z);
      CHECK(std::abs(d_circle - d_line) < 1e-3 * (1.0 + std::abs(d_line)));
    }
  }
}
