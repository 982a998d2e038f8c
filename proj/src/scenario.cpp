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

#include "goalline/scenario.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "goalline/oracle.hpp"

namespace goalline {

namespace {

using nlohmann::json;

double require_number(const json& j, const std::string& key) {
  if (!j.contains(key)) {
    throw UsageError("scenario: missing required field '" + key + "'");
  }
  if (!j.at(key).is_number()) {
    throw UsageError("scenario: field '" + key + "' must be a number");
  }
  return j.at(key).get<double>();
}

std::optional<double> optional_number(const json& j, const std::string& key) {
  if (!j.contains(key)) return std::nullopt;
  if (!j.at(key).is_number()) {
    throw UsageError("scenario: field '" + key + "' must be a number");
  }
  return j.at(key).get<double>();
}

}  // namespace

GameConfig Scenario::config() const {
  return GameConfig(evader_speed, p1_speed, p2_speed, x_bar, tol,
                    oracle_resolution.value_or(kDefaultOracleResolution));
}

double Scenario::dt_value() const {
  return dt.value_or(kDefaultDtFactor * x_bar / evader_speed);
}

double Scenario::eps_value() const {
  return eps.value_or(kDefaultEpsFactor * x_bar);
}

double Scenario::t_max_value() const {
  return t_max.value_or(kDefaultTMaxFactor * x_bar / evader_speed);
}

Scenario parse_scenario(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw UsageError(std::string("scenario: invalid JSON: ") + e.what());
  }
  if (!j.is_object()) {
    throw UsageError("scenario: top level must be a JSON object");
  }

  static const std::set<std::string> known = {
      "schema_version", "xE", "yE", "x1",  "y1",  "x2",
      "y2",             "vE", "v1", "v2",  "x_bar",
      "tol",            "oracle_resolution", "dt", "eps", "t_max", "seed"};
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (!known.count(key)) {
      throw UsageError("scenario: unknown field '" + key + "'");
    }
  }

  if (!j.contains("schema_version")) {
    throw UsageError("scenario: missing required field 'schema_version'");
  }
  if (!j.at("schema_version").is_number_integer() ||
      j.at("schema_version").get<int>() != 1) {
    throw UsageError("scenario: unsupported schema_version (expected 1)");
  }

  Scenario sc;
  sc.state.evader = Point(require_number(j, "xE"), require_number(j, "yE"));
  sc.state.p1 = Point(require_number(j, "x1"), require_number(j, "y1"));
  sc.state.p2 = Point(require_number(j, "x2"), require_number(j, "y2"));
  sc.evader_speed = require_number(j, "vE");
  sc.p1_speed = require_number(j, "v1");
  sc.p2_speed = require_number(j, "v2");
  sc.x_bar = require_number(j, "x_bar");

  sc.tol = optional_number(j, "tol");
  if (j.contains("oracle_resolution")) {
    if (!j.at("oracle_resolution").is_number_integer()) {
      throw UsageError("scenario: field 'oracle_resolution' must be an integer");
    }
    sc.oracle_resolution = j.at("oracle_resolution").get<int>();
  }
  sc.dt = optional_number(j, "dt");
  sc.eps = optional_number(j, "eps");
  sc.t_max = optional_number(j, "t_max");
  if (j.contains("seed")) {
    if (!j.at("seed").is_number_unsigned() && !j.at("seed").is_number_integer()) {
      throw UsageError("scenario: field 'seed' must be a non-negative integer");
    }
    const auto seed_signed = j.at("seed").get<long long>();
    if (seed_signed < 0) {
      throw UsageError("scenario: field 'seed' must be a non-negative integer");
    }
    sc.seed = static_cast<std::uint64_t>(seed_signed);
  }

  // Fail fast on values GameConfig would reject, so file errors surface as
  // scenario errors with field context.
  (void)sc.config();
  return sc;
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw UsageError("scenario: cannot open file '" + path.string() + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_scenario(buf.str());
  } catch (const UsageError& e) {
    throw UsageError(std::string(e.what()) + " (file '" + path.string() + "')");
  }
}

}  // namespace goalline
