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

#include "goalline/game.hpp"

#include <cmath>

namespace goalline {

namespace {

bool in_domain(const Point& p, double x_bar) {
  return std::isfinite(p.x()) && std::isfinite(p.y()) && p.x() >= 0.0 &&
         p.x() <= x_bar && p.y() >= 0.0;
}

}  // namespace

std::string to_string(Regime r) {
  switch (r) {
    case Regime::SameSpeed:
      return "SameSpeed";
    case Regime::FastPursuers:
      return "FastPursuers";
  }
  return "?";
}

std::string to_string(TerminalCause c) {
  switch (c) {
    case TerminalCause::GoalReached:
      return "GoalReached";
    case TerminalCause::CapturedByP1:
      return "CapturedByP1";
    case TerminalCause::CapturedByP2:
      return "CapturedByP2";
    case TerminalCause::SimultaneousCapture:
      return "SimultaneousCapture";
    case TerminalCause::Timeout:
      return "Timeout";
  }
  return "?";
}

GameConfig::GameConfig(double evader_speed, double p1_speed, double p2_speed,
                       double x_bar, std::optional<double> tol,
                       int oracle_resolution)
    : evader_speed_(evader_speed),
      p1_speed_(p1_speed),
      p2_speed_(p2_speed),
      x_bar_(x_bar),
      oracle_resolution_(oracle_resolution) {
  const bool speeds_ok = std::isfinite(evader_speed) && evader_speed > 0.0 &&
                         std::isfinite(p1_speed) && p1_speed > 0.0 &&
                         std::isfinite(p2_speed) && p2_speed > 0.0;
  if (!speeds_ok) {
    throw UsageError("GameConfig: speeds must be finite and positive");
  }
  if (!(std::isfinite(x_bar) && x_bar > 0.0)) {
    throw UsageError("GameConfig: x_bar must be finite and positive");
  }
  if (oracle_resolution < 2) {
    throw UsageError("GameConfig: oracle_resolution must be at least 2");
  }
  if (evader_speed == p1_speed && evader_speed == p2_speed) {
    regime_ = Regime::SameSpeed;
  } else if (evader_speed < p1_speed && evader_speed < p2_speed) {
    regime_ = Regime::FastPursuers;
  } else {
    throw UnsupportedRegime(
        "GameConfig: supported regimes are all-equal speeds or both pursuers "
        "strictly faster than the evader");
  }
  if (tol) {
    if (!(std::isfinite(*tol) && *tol > 0.0)) {
      throw UsageError("GameConfig: tol must be finite and positive");
    }
    tol_ = *tol;
  } else {
    tol_ = 1e-9 * (1.0 + x_bar * x_bar);
  }
}

void validate_in_domain(const GameState& s, const GameConfig& cfg) {
  if (!in_domain(s.evader, cfg.x_bar())) {
    throw OutOfDomain("evader outside the field domain");
  }
  if (!in_domain(s.p1, cfg.x_bar())) {
    throw OutOfDomain("pursuer P1 outside the field domain");
  }
  if (!in_domain(s.p2, cfg.x_bar())) {
    throw OutOfDomain("pursuer P2 outside the field domain");
  }
}

std::optional<TerminalCause> terminal_cause(const GameState& s) {
  const bool cap1 = s.evader == s.p1;
  const bool cap2 = s.evader == s.p2;
  if (cap1 && cap2) return TerminalCause::SimultaneousCapture;
  if (cap1) return TerminalCause::CapturedByP1;
  if (cap2) return TerminalCause::CapturedByP2;
  if (s.evader.y() == 0.0) return TerminalCause::GoalReached;
  return std::nullopt;
}

}  // namespace goalline
