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

#ifndef GOALLINE_GAME_HPP
#define GOALLINE_GAME_HPP

#include <optional>
#include <string>

#include "goalline/errors.hpp"
#include "goalline/geometry.hpp"

namespace goalline {

/// Speed regimes with a known closed-form barrier.
enum class Regime {
  SameSpeed,     ///< all three players move at the same speed
  FastPursuers,  ///< both pursuers strictly faster than the evader
};

/// Why a state (or a simulated trajectory) is terminal.
enum class TerminalCause {
  GoalReached,
  CapturedByP1,
  CapturedByP2,
  SimultaneousCapture,
  Timeout,  ///< trajectories only; never a property of a static state
};

std::string to_string(Regime r);
std::string to_string(TerminalCause c);

/// Raised when an operation that requires a live state is given a terminal
/// one (evader already on the goal line or coincident with a pursuer).
class AlreadyTerminal : public Error {
 public:
  AlreadyTerminal(TerminalCause cause, const std::string& what)
      : Error(what), cause_(cause) {}
  TerminalCause cause() const { return cause_; }

 private:
  TerminalCause cause_;
};

/// Full game state: evader E and pursuers P1, P2 in the half-plane y >= 0.
/// The goal line is the segment [0, x_bar] of the x-axis; the evader wins by
/// touching it before being captured.
struct GameState {
  Point evader{0.0, 0.0};
  Point p1{0.0, 0.0};
  Point p2{0.0, 0.0};
};

inline constexpr int kDefaultOracleResolution = 2000;

/// Immutable rules of one game: speeds, field width, tolerances. Construction
/// validates positivity and decides the speed regime once; mixed regimes
/// (exactly one pursuer faster than the evader, or any pursuer slower) are
/// rejected with UnsupportedRegime.
class GameConfig {
 public:
  GameConfig(double evader_speed, double p1_speed, double p2_speed, double x_bar,
             std::optional<double> tol = std::nullopt,
             int oracle_resolution = kDefaultOracleResolution);

  double evader_speed() const { return evader_speed_; }
  double p1_speed() const { return p1_speed_; }
  double p2_speed() const { return p2_speed_; }
  double x_bar() const { return x_bar_; }

  /// Absolute tolerance on barrier values, used to report OnBarrier. The
  /// default scales with the squared field width because barrier values are
  /// differences of squared distances.
  double tol() const { return tol_; }
  int oracle_resolution() const { return oracle_resolution_; }

  Regime regime() const { return regime_; }

  /// Evader-to-pursuer speed ratios (1 in the same-speed regime, in (0,1)
  /// in the fast-pursuers regime).
  double speed_ratio1() const { return evader_speed_ / p1_speed_; }
  double speed_ratio2() const { return evader_speed_ / p2_speed_; }
  /// Slow-to-fast ratio between the pursuers themselves.
  double pursuer_ratio() const { return p1_speed_ / p2_speed_; }

 private:
  double evader_speed_;
  double p1_speed_;
  double p2_speed_;
  double x_bar_;
  double tol_;
  int oracle_resolution_;
  Regime regime_;
};

/// Throws OutOfDomain unless every player lies in [0, x_bar] x [0, inf).
void validate_in_domain(const GameState& s, const GameConfig& cfg);

/// Terminal cause of a static state, if any: evader on the goal line, or
/// exactly coincident with a pursuer. Returns nullopt for live states.
std::optional<TerminalCause> terminal_cause(const GameState& s);

}  // namespace goalline

#endif  // GOALLINE_GAME_HPP
