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

#ifndef GOALLINE_BARRIER_HPP
#define GOALLINE_BARRIER_HPP

#include <limits>
#include <optional>
#include <string>

#include "goalline/game.hpp"
#include "goalline/geometry.hpp"

namespace goalline {

/// Which piece of the barrier function was evaluated. The same-speed barrier
/// uses S1/S2/S3; the fast-pursuers barrier uses S1..S5. In both layouts the
/// middle piece (S2 same-speed, S3 fast) is the only one where both pursuers
/// are simultaneously active. Degraded single-pursuer fallbacks reuse the
/// label of the closest matching piece.
enum class Segment { S1, S2, S3, S4, S5 };

enum class ActivePursuer { P1Only, Both, P2Only };
enum class CaptureMode { SinglePursuer, Simultaneous };
enum class Outcome { PursuerWin, EvaderWin, OnBarrier };

std::string to_string(Segment s);
std::string to_string(ActivePursuer a);
std::string to_string(CaptureMode m);
std::string to_string(Outcome o);

/// State rewritten into the frame the closed-form barrier assumes: in the
/// same-speed regime P1 is the left pursuer; in the fast-pursuers regime P1
/// is the slower pursuer (labels swapped if needed) and additionally the
/// slower pursuer is on the left, restored when necessary by mirroring every
/// position about the field midline x = x_bar / 2 (an exact symmetry of the
/// game, so barrier values are unchanged).
struct CanonicalState {
  GameState state;
  bool swapped = false;    ///< pursuer labels exchanged
  bool reflected = false;  ///< frame mirrored about x = x_bar / 2
};

/// Result of one barrier evaluation. `value` has units of squared length in
/// the same-speed regime and of squared length scaled by squared speed ratios
/// in the fast regime; only its sign and its tol-band matter for the outcome.
/// `segment` is reported in the canonical frame; `active` is mapped back to
/// the caller's original pursuer labels.
struct BarrierEvaluation {
  double value = 0.0;
  Segment segment = Segment::S1;
  ActivePursuer active = ActivePursuer::P1Only;
  CaptureMode capture_mode = CaptureMode::SinglePursuer;
  Outcome outcome = Outcome::OnBarrier;
  /// Present when the closed form was applied outside its guaranteed layout
  /// (handoff point off the field, dominance chord missing the near corner,
  /// non-monotone piece thresholds, coincident or stacked pursuers). The
  /// value is still the formulas as written, but no oracle agreement is
  /// promised.
  std::optional<std::string> degraded;
  /// Goal-axis abscissa where responsibility hands off between the pursuers;
  /// NaN when the evaluation has no two-pursuer handoff (degraded modes).
  double handoff_x = std::numeric_limits<double>::quiet_NaN();
  bool labels_swapped = false;
  bool frame_reflected = false;
};

/// Rewrites `s` into the canonical frame for `cfg`'s regime. Pure relabeling
/// and reflection; never throws for in-domain states.
CanonicalState canonicalize(const GameState& s, const GameConfig& cfg);

/// Abscissa where the orthogonal bisector of the two (equal-speed) pursuers
/// meets the goal axis: left of it the left pursuer is the closer defender,
/// right of it the right one is. Throws VerticalBisector when x1 == x2.
double handoff_x_same_speed(const Point& p1, const Point& p2);

/// Fast-pursuers analogue: the larger goal-axis abscissa of the Apollonius
/// circle between the slow pursuer `p1` and the fast pursuer `p2`, with
/// pursuer_ratio = (P1 speed) / (P2 speed) in (0, 1). Left of it the slow
/// pursuer defends, right of it the fast one. Returns nullopt when the circle
/// misses the axis entirely, i.e. the slow pursuer is never the relevant
/// defender anywhere on the goal line. Throws InvalidRatio unless
/// pursuer_ratio is in (0, 1), DegenerateInput when p1 == p2.
std::optional<double> handoff_x_fast(const Point& p1, const Point& p2,
                                     double pursuer_ratio);

/// Barrier value for a canonical same-speed state: the three-piece difference
/// of squared distances to the responsible pursuer's reflection structure.
/// Positive means the evader escapes, negative means the pursuers win.
BarrierEvaluation evaluate_same_speed(const CanonicalState& cs, const GameConfig& cfg);

/// Barrier value for a canonical fast-pursuers state: five pieces alternating
/// circle / tangency / circle structure between the two pursuers.
BarrierEvaluation evaluate_fast(const CanonicalState& cs, const GameConfig& cfg);

/// Full classification pipeline: domain check, terminal check, canonical
/// rewrite, regime dispatch, outcome banding with cfg.tol(), and mapping of
/// `active` back to the caller's labels. Throws OutOfDomain or
/// AlreadyTerminal on inadmissible states.
BarrierEvaluation classify(const GameState& s, const GameConfig& cfg);

}  // namespace goalline

#endif  // GOALLINE_BARRIER_HPP
