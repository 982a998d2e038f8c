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

#include "goalline/geometry.hpp"

#include <cmath>

#include "goalline/errors.hpp"

namespace goalline {

ImplicitLine orthogonal_bisector(const Point& p, const Point& q) {
  const Point d = q - p;
  const double len = d.norm();
  const double scale = 1.0 + p.norm() + q.norm();
  if (len <= kGeometryTol * scale) {
    throw DegenerateInput("orthogonal_bisector: points coincide");
  }
  const Point n = d / len;
  const Point mid = 0.5 * (p + q);
  return ImplicitLine{n.x(), n.y(), n.dot(mid)};
}

Circle apollonius_circle(const Point& evader, const Point& pursuer, double ratio) {
  if (!(ratio > 0.0) || !(ratio < 1.0)) {
    throw InvalidRatio("apollonius_circle: ratio must lie strictly between 0 and 1");
  }
  const double dist = (evader - pursuer).norm();
  const double scale = 1.0 + evader.norm() + pursuer.norm();
  if (dist <= kGeometryTol * scale) {
    throw DegenerateInput("apollonius_circle: players coincide");
  }
  const double r2 = ratio * ratio;
  const double denom = 1.0 - r2;
  Circle c;
  c.center = (evader - r2 * pursuer) / denom;
  c.radius = ratio / denom * dist;
  return c;
}

AxisCrossing axis_crossings(const Circle& c, double tol) {
  AxisCrossing out;
  const double disc = c.radius * c.radius - c.center.y() * c.center.y();
  const double band = tol * (1.0 + c.radius * c.radius);
  if (std::abs(disc) <= band) {
    out.kind = CrossingKind::Tangent;
    out.xs[0] = c.center.x();
    return out;
  }
  if (disc < 0.0) {
    out.kind = CrossingKind::None;
    return out;
  }
  const double half = std::sqrt(disc);
  out.kind = CrossingKind::TwoPoints;
  out.xs[0] = c.center.x() - half;
  out.xs[1] = c.center.x() + half;
  return out;
}

}  // namespace goalline
