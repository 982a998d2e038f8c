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

#ifndef GOALLINE_SCENARIO_HPP
#define GOALLINE_SCENARIO_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "goalline/game.hpp"

namespace goalline {

/// One problem instance as read from a scenario file: a flat JSON object
/// with required keys schema_version (must be 1), xE, yE, x1, y1, x2, y2,
/// vE, v1, v2, x_bar, and optional overrides tol, oracle_resolution, dt,
/// eps, t_max, seed. Unknown keys are rejected.
struct Scenario {
  GameState state;
  double evader_speed = 0.0;
  double p1_speed = 0.0;
  double p2_speed = 0.0;
  double x_bar = 0.0;
  std::optional<double> tol;
  std::optional<int> oracle_resolution;
  std::optional<double> dt;
  std::optional<double> eps;
  std::optional<double> t_max;
  std::optional<std::uint64_t> seed;

  /// Builds the validated config; throws UnsupportedRegime / UsageError as
  /// GameConfig does.
  GameConfig config() const;

  /// Simulation parameters, falling back to the documented defaults
  /// (dt = 1e-3 * x_bar / vE, eps = 1e-2 * x_bar, t_max = 30 * x_bar / vE).
  double dt_value() const;
  double eps_value() const;
  double t_max_value() const;
  std::uint64_t seed_value() const { return seed.value_or(1); }
};

/// Parses scenario JSON text. Throws UsageError naming the offending field
/// (or the parse position for syntactically invalid JSON).
Scenario parse_scenario(const std::string& text);

/// Reads and parses a scenario file; UsageError mentions the path on any
/// failure.
Scenario load_scenario(const std::filesystem::path& path);

}  // namespace goalline

#endif  // GOALLINE_SCENARIO_HPP
