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

#include "goalline/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <json.hpp>

#include "goalline/barrier.hpp"

namespace goalline {

namespace {

constexpr double kGoldenTolWidth = 1e-10;
constexpr int kMaxRefinedMaxima = 32;

// Golden-section maximization of f over [a, b] down to interval width tol_w;
// returns the midpoint of the final bracket.
template <typename F>
double golden_max(double a, double b, F&& f, double tol_w) {
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - invphi * (b - a);
  double d = a + invphi * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > tol_w) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

// Heading for one pursuer: constant-bearing intercept of the evader's dash
// toward g, or cover g directly when no intercept happens before arrival.
Point pursuer_heading(const Point& p, double vp, const Point& e, double ve,
                      const Point& g, const Point& evader_dir) {
  const Point d = e - p;
  const double dist = d.norm();
  if (dist == 0.0) return evader_dir;
  const double t_goal = (g - e).norm() / ve;
  const double a = vp * vp - ve * ve;
  const double bq = ve * d.dot(evader_dir);
  double t_star = -1.0;
  if (a > 0.0) {
    t_star = (bq + std::sqrt(bq * bq + a * dist * dist)) / a;
  } else if (bq < 0.0) {
    t_star = -dist * dist / (2.0 * bq);
  }
  Point target = g;
  if (t_star > 0.0 && t_star <= t_goal) {
    target = e + ve * t_star * evader_dir;
  }
  const Point to = target - p;
  const double len = to.norm();
  return len > 0.0 ? Point(to / len) : evader_dir;
}

nlohmann::ordered_json state_json(const GameState& s) {
  return {{"xE", s.evader.x()}, {"yE", s.evader.y()}, {"x1", s.p1.x()},
          {"y1", s.p1.y()},     {"x2", s.p2.x()},     {"y2", s.p2.y()}};
}

}  // namespace

double sweep_band(const GameConfig& cfg) {
  return 1e-3 * (1.0 + cfg.x_bar() * cfg.x_bar());
}

GoalMargin goal_margin(const GameState& s, const GameConfig& cfg) {
  const double xb = cfg.x_bar();
  const double w1 = cfg.speed_ratio1();
  const double w2 = cfg.speed_ratio2();
  const auto phi = [&](double g) {
    const double t1 = w1 * std::hypot(g - s.p1.x(), s.p1.y());
    const double t2 = w2 * std::hypot(g - s.p2.x(), s.p2.y());
    return std::min(t1, t2) - std::hypot(g - s.evader.x(), s.evader.y());
  };

  const int n = cfg.oracle_resolution();
  std::vector<double> vals(static_cast<std::size_t>(n));
  const double step = xb / (n - 1);
  for (int k = 0; k < n; ++k) {
    vals[static_cast<std::size_t>(k)] = phi(k * step);
  }

  // Grid-local maxima (one-sided at the endpoints), best first.
  std::vector<int> maxima;
  for (int k = 0; k < n; ++k) {
    const bool left_ok = k == 0 || vals[k] >= vals[k - 1];
    const bool right_ok = k == n - 1 || vals[k] >= vals[k + 1];
    if (left_ok && right_ok) maxima.push_back(k);
  }
  std::sort(maxima.begin(), maxima.end(),
            [&](int a, int b) { return vals[a] > vals[b]; });
  if (maxima.size() > static_cast<std::size_t>(kMaxRefinedMaxima)) {
    maxima.resize(static_cast<std::size_t>(kMaxRefinedMaxima));
  }

  GoalMargin best;
  best.margin = -std::numeric_limits<double>::infinity();
  for (int k : maxima) {
    const double lo = std::max(0.0, (k - 1) * step);
    const double hi = std::min(xb, (k + 1) * step);
    const double x = golden_max(lo, hi, phi, kGoldenTolWidth);
    const double v = phi(x);
    if (v > best.margin) {
      best.margin = v;
      best.argmax_x = x;
    }
    // The refined point can only improve on the grid point up to rounding;
    // keep the raw grid value as a floor.
    if (vals[k] > best.margin) {
      best.margin = vals[k];
      best.argmax_x = k * step;
    }
  }
  return best;
}

Trajectory simulate(const GameState& initial, const GameConfig& cfg, double dt,
                    double eps, double t_max) {
  if (!(dt > 0.0) || !(eps > 0.0) || !(t_max > 0.0)) {
    throw UsageError("simulate: dt, eps and t_max must be positive");
  }
  validate_in_domain(initial, cfg);
  if (const auto tc = terminal_cause(initial)) {
    throw AlreadyTerminal(*tc, "state is already terminal: " + to_string(*tc));
  }

  const double ve = cfg.evader_speed();
  const double v1 = cfg.p1_speed();
  const double v2 = cfg.p2_speed();

  Trajectory tr;
  GameState s = initial;
  double t = 0.0;
  tr.samples.push_back({t, s});

  while (true) {
    // Goal crossing wins over same-step capture by contract.
    if (s.evader.y() <= 0.0) {
      tr.terminal = TerminalCause::GoalReached;
      break;
    }
    const double d1 = (s.evader - s.p1).norm();
    const double d2 = (s.evader - s.p2).norm();
    if (d1 <= eps && d2 <= eps) {
      tr.terminal = TerminalCause::SimultaneousCapture;
      tr.capture_point = s.evader;
      break;
    }
    if (d1 <= eps) {
      tr.terminal = TerminalCause::CapturedByP1;
      tr.capture_point = s.evader;
      break;
    }
    if (d2 <= eps) {
      tr.terminal = TerminalCause::CapturedByP2;
      tr.capture_point = s.evader;
      break;
    }
    if (t >= t_max - 0.5 * dt) {
      tr.terminal = TerminalCause::Timeout;
      break;
    }

    const GoalMargin gm = goal_margin(s, cfg);
    const Point g(gm.argmax_x, 0.0);
    const Point ue = (g - s.evader).normalized();
    const Point u1 = pursuer_heading(s.p1, v1, s.evader, ve, g, ue);
    const Point u2 = pursuer_heading(s.p2, v2, s.evader, ve, g, ue);

    s.evader += ve * dt * ue;
    s.p1 += v1 * dt * u1;
    s.p2 += v2 * dt * u2;
    t += dt;
    if (s.evader.y() < 0.0) s.evader.y() = 0.0;
    tr.samples.push_back({t, s});
  }
  return tr;
}

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

GameState sample_state(std::mt19937_64& rng, const GameConfig& cfg) {
  const double xb = cfg.x_bar();
  const auto draw = [&]() {
    const double x = xb * uniform01(rng);
    const double y = xb * (1.0 - uniform01(rng));  // strictly positive
    return Point(x, y);
  };
  GameState s;
  s.evader = draw();
  s.p1 = draw();
  s.p2 = draw();
  return s;
}

SweepReport sweep_agreement(const GameConfig& cfg, int n_states,
                            std::uint64_t seed) {
  if (n_states < 1) {
    throw UsageError("sweep_agreement: n_states must be at least 1");
  }
  SweepReport rep;
  rep.seed = seed;
  rep.requested = n_states;
  rep.band = sweep_band(cfg);

  std::mt19937_64 rng(seed);
  const long max_attempts =
      std::max(1000000L, 200L * static_cast<long>(n_states));
  while (rep.tested < n_states && rep.generated < max_attempts) {
    const GameState s = sample_state(rng, cfg);
    ++rep.generated;
    if (terminal_cause(s)) continue;
    const BarrierEvaluation ev = classify(s, cfg);
    if (ev.degraded) {
      ++rep.skipped_degraded;
      continue;
    }
    if (std::abs(ev.value) <= rep.band) {
      ++rep.skipped_band;
      continue;
    }
    ++rep.tested;
    const GoalMargin gm = goal_margin(s, cfg);
    const bool agree = (ev.value > 0.0) == (gm.margin > 0.0);
    if (agree) {
      ++rep.agreements;
    } else {
      rep.disagreements.push_back(
          {rep.generated - 1, s, ev.value, to_string(ev.segment), gm.margin});
    }
  }
  rep.vacuous = rep.tested == 0;
  return rep;
}

std::string report_json(const SweepReport& rep, const GameConfig& cfg) {
  nlohmann::ordered_json j;
  j["seed"] = rep.seed;
  j["requested"] = rep.requested;
  j["generated"] = rep.generated;
  j["tested"] = rep.tested;
  j["skipped_band"] = rep.skipped_band;
  j["skipped_degraded"] = rep.skipped_degraded;
  j["agreements"] = rep.agreements;
  j["disagreement_count"] = rep.disagreements.size();
  j["disagreements"] = nlohmann::ordered_json::array();
  for (const auto& d : rep.disagreements) {
    j["disagreements"].push_back({{"index", d.index},
                                  {"state", state_json(d.state)},
                                  {"barrier_value", d.barrier_value},
                                  {"segment", d.segment},
                                  {"margin", d.margin}});
  }
  j["band"] = rep.band;
  j["vacuous"] = rep.vacuous;
  j["config"] = {{"vE", cfg.evader_speed()},
                 {"v1", cfg.p1_speed()},
                 {"v2", cfg.p2_speed()},
                 {"x_bar", cfg.x_bar()},
                 {"tol", cfg.tol()},
                 {"oracle_resolution", cfg.oracle_resolution()},
                 {"regime", to_string(cfg.regime())}};
  return j.dump(2) + "\n";
}

}  // namespace goalline
