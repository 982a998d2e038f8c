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

#ifndef GOALLINE_SECTION_HPP
#define GOALLINE_SECTION_HPP

#include <optional>
#include <string>
#include <vector>

#include "goalline/game.hpp"
#include "goalline/geometry.hpp"

namespace goalline {

enum class CurveKind { CircleArc, HyperbolaArc };

std::string to_string(CurveKind k);

/// One piece of the barrier cross-section over a closed x-interval [lo, hi].
/// Circle arcs are upper semicircles of circles centered on the goal axis;
/// hyperbola arcs are upper branches of A x^2 + C y^2 + D x + F = 0 with
/// A > 0 > C. Unused coefficient fields are zero.
struct CurveSegment {
  CurveKind kind = CurveKind::CircleArc;
  double lo = 0.0;
  double hi = 0.0;
  // CircleArc fields.
  Point center{0.0, 0.0};
  double radius = 0.0;
  // HyperbolaArc fields.
  double A = 0.0;
  double C = 0.0;
  double D = 0.0;
  double F = 0.0;

  /// Height of the curve at abscissa x in [lo, hi]. Throws
  /// SectionInconsistency if the implicit equation has no real y >= 0 there
  /// beyond rounding slack, which would mean the breakpoints are wrong.
  double y_at(double x) const;

  /// Raw value of the segment's implicit equation at (x, y); zero on the
  /// curve. Units are squared length (circle) or scaled squared length
  /// (hyperbola).
  double residual(double x, double y) const;
};

/// The barrier surface restricted to fixed pursuer positions: the curve in
/// the evader's (x, y) plane separating evader-win from pursuer-win states.
struct CrossSection {
  std::vector<CurveSegment> segments;  ///< ordered left to right
  Regime regime = Regime::SameSpeed;
  std::optional<std::string> degraded;
  double x_bar = 0.0;
  /// Pursuer positions in the frame of the section (slot order preserved
  /// from the caller); retained for exporters.
  Point p1{0.0, 0.0};
  Point p2{0.0, 0.0};
};

struct SectionSample {
  int segment_index = 0;
  double x = 0.0;
  double y = 0.0;
};

/// Same-speed section: up to three circle arcs (left corner, handoff, right
/// corner) meeting at the pursuer abscissae. Expects the left pursuer first;
/// the arcs pass through the pursuer positions themselves. Degenerate
/// placements (coincident or vertically stacked pursuers) produce a
/// two-arc single-pursuer section with a degraded note.
CrossSection section_same_speed(const Point& p1, const Point& p2, double x_bar);

/// Fast-pursuers section: up to five pieces, circle / hyperbola / circle /
/// hyperbola / circle. `slow` and `fast` are the pursuer positions for the
/// smaller and larger speed in `cfg` (slot order irrelevant, the speeds are
/// read from the config). Layout assumptions that fail (handoff point off
/// the field, slow pursuer irrelevant, non-monotone thresholds) degrade to
/// fewer pieces and/or a degraded note.
CrossSection section_fast(const Point& slow, const Point& fast, const GameConfig& cfg);

/// Regime dispatch plus canonicalization: builds the section for arbitrary
/// pursuer placement and returns it in the caller's frame, internally
/// mirroring about the field midline when the fast regime needs the slower
/// pursuer on the left.
CrossSection build_section(const Point& p1, const Point& p2, const GameConfig& cfg);

/// Mirror image of a section about the field midline x = x_bar / 2.
CrossSection reflect_section(const CrossSection& cs);

/// n >= 2 equally spaced samples per segment, endpoints included; throws
/// UsageError for n < 2.
std::vector<SectionSample> sample_section(const CrossSection& cs, int n_per_segment);

enum class ExportFormat { Csv, Json, Svg };

/// Serializes the section and its samples. Csv: one row per sample with
/// segment metadata. Json: full segment coefficients plus samples with
/// round-trip-exact numbers. Svg: field, goal line, pursuers and the sampled
/// curve (throws UsageError when `samples` is empty, since the drawing
/// extent comes from them).
std::string export_section(const CrossSection& cs,
                           const std::vector<SectionSample>& samples,
                           ExportFormat fmt);

}  // namespace goalline

#endif  // GOALLINE_SECTION_HPP
