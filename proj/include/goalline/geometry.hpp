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

#ifndef GOALLINE_GEOMETRY_HPP
#define GOALLINE_GEOMETRY_HPP

#include <Eigen/Dense>
#include <array>

namespace goalline {

/// Planar point / displacement. Eigen gives us the vector arithmetic; all
/// game-specific structure lives in free functions.
using Point = Eigen::Vector2d;

/// Line a*x + b*y = c with (a, b) a unit normal.
struct ImplicitLine {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;

  /// Positive on the side the normal points into, negative on the other,
  /// zero on the line. Units of length since the normal is unit.
  double signed_distance(const Point& z) const { return a * z.x() + b * z.y() - c; }
};

struct Circle {
  Point center{0.0, 0.0};
  double radius = 0.0;
};

enum class CrossingKind { None, Tangent, TwoPoints };

/// Intersection of a circle with the goal axis (the x-axis). For TwoPoints
/// both abscissae are stored in ascending order; for Tangent only xs[0] is
/// meaningful; for None neither is.
struct AxisCrossing {
  CrossingKind kind = CrossingKind::None;
  std::array<double, 2> xs{0.0, 0.0};
};

/// Relative tolerance used to classify near-tangency in axis_crossings and to
/// decide point coincidence in the constructions below.
inline constexpr double kGeometryTol = 1e-9;

/// Orthogonal bisector of segment pq: the set of points equidistant from p
/// and q, i.e. the boundary between their dominance regions at equal speeds.
/// The returned normal points from p toward q, so signed_distance is negative
/// on p's side. Throws DegenerateInput when p == q within tolerance.
ImplicitLine orthogonal_bisector(const Point& p, const Point& q);

/// Apollonius circle for a slow player at `evader` against a fast player at
/// `pursuer`: the locus of points z with |z - evader| = ratio * |z - pursuer|
/// where ratio = (slow speed) / (fast speed) must lie in (0, 1). Points inside
/// the circle are reached by the slow player first. Throws InvalidRatio when
/// ratio is outside (0, 1) and DegenerateInput when the two points coincide.
Circle apollonius_circle(const Point& evader, const Point& pursuer, double ratio);

/// Intersections of `c` with the goal axis y = 0. A discriminant within
/// tol * (1 + radius^2) of zero is reported as Tangent with the tangency
/// abscissa equal to the center abscissa.
AxisCrossing axis_crossings(const Circle& c, double tol = kGeometryTol);

}  // namespace goalline

#endif  // GOALLINE_GEOMETRY_HPP
