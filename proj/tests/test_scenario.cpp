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

#include <cstdio>
#include <fstream>
#include <string>

#include "goalline/scenario.hpp"

using namespace goalline;

namespace {

const char* kGood = R"({
  "schema_version": 1,
  "xE": 4.0, "yE": 1.0,
  "x1": 2.0, "y1": 2.0,
  "x2": 6.0, "y2": 2.0,
  "vE": 1.0, "v1": 1.0, "v2": 1.0,
  "x_bar": 10.0
})";

std::string with_field(const std::string& extra) {
  std::string s = kGood;
  const auto pos = s.rfind('}');
  return s.substr(0, pos) + ", " + extra + "\n}";
}

}  // namespace

TEST_CASE("a minimal scenario parses with documented defaults") {
  const Scenario sc = parse_scenario(kGood);
  CHECK(sc.state.evader.x() == 4.0);
  CHECK(sc.state.evader.y() == 1.0);
  CHECK(sc.state.p1.x() == 2.0);
  CHECK(sc.state.p2.y() == 2.0);
  CHECK(sc.evader_speed == 1.0);
  CHECK(sc.x_bar == 10.0);
  CHECK_FALSE(sc.tol.has_value());
  CHECK_FALSE(sc.dt.has_value());
  CHECK(sc.dt_value() == doctest::Approx(0.01));       // 1e-3 * x_bar / vE
  CHECK(sc.eps_value() == doctest::Approx(0.1));       // 1e-2 * x_bar
  CHECK(sc.t_max_value() == doctest::Approx(300.0));   // 30 * x_bar / vE
  CHECK(sc.seed_value() == 1);

  const GameConfig cfg = sc.config();
  CHECK(cfg.regime() == Regime::SameSpeed);
  CHECK(cfg.x_bar() == 10.0);
}

TEST_CASE("optional overrides are honored") {
  const Scenario sc = parse_scenario(with_field(
      "\"tol\": 1e-6, \"oracle_resolution\": 500, \"dt\": 0.5, "
      "\"eps\": 0.25, \"t_max\": 12.0, \"seed\": 77"));
  CHECK(sc.tol == 1e-6);
  CHECK(sc.oracle_resolution == 500);
  CHECK(sc.dt_value() == 0.5);
  CHECK(sc.eps_value() == 0.25);
  CHECK(sc.t_max_value() == 12.0);
  CHECK(sc.seed_value() == 77);
  CHECK(sc.config().tol() == 1e-6);
  CHECK(sc.config().oracle_resolution() == 500);
}

TEST_CASE("malformed scenarios are rejected with a usage error") {
  // Not JSON at all: the message names the parse position.
  try {
    parse_scenario("{ not json");
    FAIL("expected UsageError");
  } catch (const UsageError& e) {
    CHECK(std::string(e.what()).find("invalid JSON") != std::string::npos);
  }

  // Top level must be an object.
  CHECK_THROWS_AS(parse_scenario("[1, 2, 3]"), UsageError);

  // Missing schema_version.
  CHECK_THROWS_AS(
      parse_scenario(R"({"xE": 1, "yE": 1, "x1": 1, "y1": 1, "x2": 2,
                        "y2": 1, "vE": 1, "v1": 1, "v2": 1, "x_bar": 10})"),
      UsageError);

  // Wrong schema_version value and wrong type.
  CHECK_THROWS_AS(
      parse_scenario(R"({"schema_version": 2, "xE": 4, "yE": 1, "x1": 2,
                        "y1": 2, "x2": 6, "y2": 2, "vE": 1, "v1": 1,
                        "v2": 1, "x_bar": 10})"),
      UsageError);
  CHECK_THROWS_AS(
      parse_scenario(R"({"schema_version": 1.5, "xE": 4, "yE": 1, "x1": 2,
                        "y1": 2, "x2": 6, "y2": 2, "vE": 1, "v1": 1,
                        "v2": 1, "x_bar": 10})"),
      UsageError);

  // Missing required coordinate.
  CHECK_THROWS_AS(
      parse_scenario(R"({"schema_version": 1, "xE": 1, "yE": 1, "x1": 1,
                        "y1": 1, "x2": 2, "y2": 1, "vE": 1, "v1": 1,
                        "v2": 1})"),
      UsageError);

  // Unknown field.
  try {
    parse_scenario(with_field("\"speed\": 3"));
    FAIL("expected UsageError");
  } catch (const UsageError& e) {
    CHECK(std::string(e.what()).find("speed") != std::string::npos);
  }

  // Wrong types.
  CHECK_THROWS_AS(parse_scenario(with_field("\"dt\": \"fast\"")), UsageError);
  CHECK_THROWS_AS(parse_scenario(with_field("\"seed\": -4")), UsageError);
  CHECK_THROWS_AS(parse_scenario(with_field("\"oracle_resolution\": 2.5")),
                  UsageError);

  // Structurally fine but dynamically invalid: bad speeds / resolution.
  CHECK_THROWS_AS(
      parse_scenario(R"({"schema_version": 1, "xE": 4, "yE": 1, "x1": 2,
                        "y1": 2, "x2": 6, "y2": 2, "vE": 0, "v1": 1,
                        "v2": 1, "x_bar": 10})"),
      UsageError);
  CHECK_THROWS_AS(parse_scenario(with_field("\"oracle_resolution\": 1")),
                  UsageError);
}

TEST_CASE("mixed-regime scenarios surface UnsupportedRegime") {
  CHECK_THROWS_AS(
      parse_scenario(R"({"schema_version": 1, "xE": 4, "yE": 1, "x1": 2,
                        "y1": 2, "x2": 6, "y2": 2, "vE": 1, "v1": 2,
                        "v2": 0.5, "x_bar": 10})"),
      UnsupportedRegime);
}

TEST_CASE("load_scenario reads files and names the path on failure") {
  const std::filesystem::path good = "scenario_test_good.json";
  {
    std::ofstream out(good);
    out << kGood;
  }
  const Scenario sc = load_scenario(good);
  CHECK(sc.x_bar == 10.0);
  std::remove(good.string().c_str());

  const std::filesystem::path bad = "scenario_test_bad.json";
  {
    std::ofstream out(bad);
    out << "{ broken";
  }
  try {
    load_scenario(bad);
    FAIL("expected UsageError");
  } catch (const UsageError& e) {
    CHECK(std::string(e.what()).find(bad.string()) != std::string::npos);
  }
  std::remove(bad.string().c_str());

  CHECK_THROWS_AS(load_scenario("definitely_missing_scenario.json"),
                  UsageError);
}
