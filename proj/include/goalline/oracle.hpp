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

#ifndef GOALLINE_ORACLE_HPP
#define GOALLINE_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "goalline/game.hpp"
#include "goalline/geometry.hpp"

namespace goalline {

/// Default simulation parameters, expressed as factors of the natural scales
/// x_bar (length) and x_bar / evader_speed (time).
inline constexpr double kDefaultDtFactor = 1e-3;
inline constexpr double kDefaultEpsFactor = 1e-2;
inline constexpr double kDefaultTMaxFactor = 30.0;

/// Width of the exclusion band around B = 0 used by agreement sweeps:
/// 1e-3 * (1 + x_bar^2), matching the scale of barrier values.
double sweep_band(const GameConfig& cfg);

/// Best goal point for the evader under straight-line play.
struct GoalMargin {
  /// max over g in [0, x_bar] of min_i(ratio_i * dist(g, P_i)) - dist(g, E):
  /// positive iff some goal point is reachable strictly before both pursuers.
  double margin = 0.0;
  /// Abscissa attaining the maximum.
  double argmax_x = 0.0;
};

/// Dominance scan along the goal line, independent of the closed-form
/// barrier: dense grid of cfg.oracle_resolution() points followed by
/// golden-section refinement of every grid-local maximum down to 1e-10
/// interval width.
GoalMargin goal_margin(const GameState& s, const GameConfig& cfg);

struct TrajectorySample {
  double t = 0.0;
  GameState state;
};

struct Trajectory {
  std::vector<TrajectorySample> samples;  ///< step states, including t = 0
  TerminalCause terminal = TerminalCause::Timeout;
  std::optional<Point> capture_point;  ///< evader position, set on captures
};

/// Forward-Euler play-out of heuristic strategies: the evader dashes toward
/// the current best goal point; each pursuer runs a constant-bearing intercept
/// of that dash (falling back to covering the goal point when no intercept
/// exists before the evader's arrival). Each step moves every player by
/// exactly its speed * dt. Goal crossing is checked before capture within a
/// step, and captures use the radius eps. A Timeout terminal means the
/// heuristics failed to resolve the game, not a draw. Throws OutOfDomain /
/// AlreadyTerminal on inadmissible initial states and UsageError on
/// non-positive dt/eps/t_max.
Trajectory simulate(const GameState& initial, const GameConfig& cfg, double dt,
                    double eps, double t_max);

struct Disagreement {
  int index = 0;  ///< 0-based index in the generated stream, for replay
  GameState state;
  double barrier_value = 0.0;
  std::string segment;
  double margin = 0.0;
};

struct SweepReport {
  std::uint64_t seed = 0;
  int requested = 0;          ///< states to test after filtering
  int generated = 0;          ///< raw states drawn
  int tested = 0;
  int skipped_band = 0;       ///< |B| inside the exclusion band
  int skipped_degraded = 0;   ///< closed form flagged degraded
  int agreements = 0;
  std::vector<Disagreement> disagreements;
  double band = 0.0;
  bool vacuous = false;  ///< nothing qualified: vacuous pass, warn the caller
};

/// Draws uniformly from [0, 1).
double uniform01(std::mt19937_64& rng);

/// One state uniform over the sampling box [0, x_bar] x (0, x_bar] per
/// player, in fixed draw order (evader, P1, P2; x before y).
GameState sample_state(std::mt19937_64& rng, const GameConfig& cfg);

/// Seeded random-state campaign comparing classify's sign against
/// goal_margin's sign on non-degraded states outside the exclusion band,
/// until n_states qualify (or an attempt cap is hit, yielding a vacuous or
/// partial report). Deterministic for a fixed seed.
SweepReport sweep_agreement(const GameConfig& cfg, int n_states,
                            std::uint64_t seed);

/// JSON serialization of a sweep report with a config echo; byte-identical
/// for identical inputs.
std::string report_json(const SweepReport& rep, const GameConfig& cfg);

}  // namespace goalline

#endif  // GOALLINE_ORACLE_HPP
