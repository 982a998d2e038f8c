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

#include "goalline/barrier.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace goalline {

namespace {

double sq(double v) { return v * v; }

// Matches the coincidence test of the geometry constructors so the degraded
// single-pursuer branches fire before those constructors can throw.
bool nearly_coincident(const Point& p, const Point& q) {
  return (p - q).norm() <= kGeometryTol * (1.0 + p.norm() + q.norm());
}

std::optional<std::string> join_notes(const std::vector<std::string>& notes) {
  if (notes.empty()) return std::nullopt;
  std::string out = notes.front();
  for (std::size_t i = 1; i < notes.size(); ++i) out += "; " + notes[i];
  return out;
}

// --- same-speed pieces -----------------------------------------------------
// Each piece is the difference of squared distances to a distinguished goal
// point: the left corner, the handoff point, or the right corner.

double piece_corner_left(const Point& e, const Point& p) {
  return p.squaredNorm() - e.squaredNorm();
}

double piece_handoff_same(const Point& e, const Point& p, double xi) {
  return sq(p.x() - xi) + sq(p.y()) - sq(e.x() - xi) - sq(e.y());
}

double piece_corner_right(const Point& e, const Point& p, double x_bar) {
  return sq(p.x() - x_bar) + sq(p.y()) - sq(e.x() - x_bar) - sq(e.y());
}

// --- fast-pursuers pieces --------------------------------------------------
// g = (evader speed) / (pursuer speed) in (0, 1). The circle pieces compare
// scaled squared distances to a distinguished goal point; the tangency piece
// is the Apollonius-circle tangency condition against the goal axis.

double piece_circle_left(const Point& e, const Point& p, double g) {
  return g * g * p.squaredNorm() - e.squaredNorm();
}

double piece_tangency(const Point& e, const Point& p, double g) {
  const double g2 = g * g;
  return g2 * sq(e.x() - p.x()) + g2 * (1.0 - g2) * sq(p.y()) -
         (1.0 - g2) * sq(e.y());
}

double piece_circle_handoff(const Point& e, const Point& p, double g, double xi) {
  return g * g * (sq(p.x() - xi) + sq(p.y())) - sq(e.x() - xi) - sq(e.y());
}

double piece_circle_right(const Point& e, const Point& p, double g, double x_bar) {
  return g * g * (sq(p.x() - x_bar) + sq(p.y())) - sq(e.x() - x_bar) - sq(e.y());
}

void finalize(BarrierEvaluation& ev, const GameConfig& cfg) {
  ev.capture_mode = ev.active == ActivePursuer::Both ? CaptureMode::Simultaneous
                                                     : CaptureMode::SinglePursuer;
  if (std::abs(ev.value) <= cfg.tol()) {
    ev.outcome = Outcome::OnBarrier;
  } else {
    ev.outcome = ev.value > 0.0 ? Outcome::EvaderWin : Outcome::PursuerWin;
  }
}

// Barrier of a lone fast pursuer `p` with speed ratio g: left circle through
// the origin, tangency strip, right circle through (x_bar, 0). Used by the
// degraded fallbacks; `as_p1` picks the segment labels of the matching slot
// in the five-piece layout.
void single_pursuer_fast(BarrierEvaluation& ev, const Point& e, const Point& p,
                         double g, double x_bar, bool as_p1) {
  const double left_end = g * g * p.x();
  const double right_end = (1.0 - g * g) * x_bar + g * g * p.x();
  if (e.x() <= left_end) {
    ev.segment = Segment::S1;
    ev.value = piece_circle_left(e, p, g);
  } else if (e.x() <= right_end) {
    ev.segment = as_p1 ? Segment::S2 : Segment::S4;
    ev.value = piece_tangency(e, p, g);
  } else {
    ev.segment = Segment::S5;
    ev.value = piece_circle_right(e, p, g, x_bar);
  }
  ev.active = as_p1 ? ActivePursuer::P1Only : ActivePursuer::P2Only;
}

}  // namespace

std::string to_string(Segment s) {
  switch (s) {
    case Segment::S1: return "S1";
    case Segment::S2: return "S2";
    case Segment::S3: return "S3";
    case Segment::S4: return "S4";
    case Segment::S5: return "S5";
  }
  return "?";
}

std::string to_string(ActivePursuer a) {
  switch (a) {
    case ActivePursuer::P1Only: return "P1Only";
    case ActivePursuer::Both: return "Both";
    case ActivePursuer::P2Only: return "P2Only";
  }
  return "?";
}

std::string to_string(CaptureMode m) {
  return m == CaptureMode::SinglePursuer ? "SinglePursuer" : "Simultaneous";
}

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::PursuerWin: return "PursuerWin";
    case Outcome::EvaderWin: return "EvaderWin";
    case Outcome::OnBarrier: return "OnBarrier";
  }
  return "?";
}

CanonicalState canonicalize(const GameState& s, const GameConfig& cfg) {
  CanonicalState cs{s, false, false};
  if (cfg.regime() == Regime::SameSpeed) {
    if (s.p1.x() > s.p2.x()) {
      std::swap(cs.state.p1, cs.state.p2);
      cs.swapped = true;
    }
    return cs;
  }
  // Fast pursuers: slot 1 must hold the slower pursuer's position.
  if (cfg.p1_speed() > cfg.p2_speed()) {
    std::swap(cs.state.p1, cs.state.p2);
    cs.swapped = true;
  }
  if (cs.state.p1.x() > cs.state.p2.x()) {
    if (cfg.p1_speed() == cfg.p2_speed()) {
      // Equal-speed pursuers are interchangeable; reorder by label swap.
      std::swap(cs.state.p1, cs.state.p2);
      cs.swapped = !cs.swapped;
    } else {
      // Mirror the whole position set about the field midline. The goal line
      // maps onto itself and all distances are preserved, so the barrier
      // value of the reflected state equals that of the original, and the
      // slower pursuer lands on the left as required.
      const double xb = cfg.x_bar();
      cs.state.evader.x() = xb - cs.state.evader.x();
      cs.state.p1.x() = xb - cs.state.p1.x();
      cs.state.p2.x() = xb - cs.state.p2.x();
      cs.reflected = true;
    }
  }
  return cs;
}

double handoff_x_same_speed(const Point& p1, const Point& p2) {
  const ImplicitLine bis = orthogonal_bisector(p1, p2);
  if (bis.a == 0.0) {
    throw VerticalBisector(
        "handoff_x_same_speed: pursuers share an abscissa, bisector never "
        "meets the goal axis");
  }
  return bis.c / bis.a;
}

std::optional<double> handoff_x_fast(const Point& p1, const Point& p2,
                                     double pursuer_ratio) {
  if (!(pursuer_ratio > 0.0) || !(pursuer_ratio < 1.0)) {
    throw InvalidRatio("handoff_x_fast: pursuer_ratio must lie strictly between 0 and 1");
  }
  // The slow pursuer plays the "evader" role of the Apollonius construction:
  // inside the circle it arrives before the fast pursuer does.
  const Circle c = apollonius_circle(p1, p2, pursuer_ratio);
  const AxisCrossing ax = axis_crossings(c);
  switch (ax.kind) {
    case CrossingKind::None:
      return std::nullopt;
    case CrossingKind::Tangent:
      return ax.xs[0];
    case CrossingKind::TwoPoints:
      return ax.xs[1];
  }
  return std::nullopt;
}

BarrierEvaluation evaluate_same_speed(const CanonicalState& cs, const GameConfig& cfg) {
  const GameState& s = cs.state;
  const double x_bar = cfg.x_bar();
  BarrierEvaluation ev;
  ev.labels_swapped = cs.swapped;
  ev.frame_reflected = cs.reflected;
  std::vector<std::string> notes;

  if (nearly_coincident(s.p1, s.p2)) {
    // A single defender: the piecewise-linear squared margin along the goal
    // line peaks at one of the two corners.
    notes.push_back("coincident pursuers: reduced to a single-pursuer barrier");
    const double left = piece_corner_left(s.evader, s.p1);
    const double right = piece_corner_right(s.evader, s.p1, x_bar);
    if (left >= right) {
      ev.segment = Segment::S1;
      ev.value = left;
    } else {
      ev.segment = Segment::S3;
      ev.value = right;
    }
    ev.active = ActivePursuer::P1Only;
  } else {
    // Near-vertical alignments can push the handoff abscissa past double
    // range; treat them like exactly stacked pursuers.
    const bool vertical = s.p1.x() == s.p2.x();
    const double xi = vertical ? std::numeric_limits<double>::infinity()
                               : handoff_x_same_speed(s.p1, s.p2);
    if (!std::isfinite(xi)) {
      // Stacked pursuers: the lower one is strictly closer to every goal
      // point, so the other never matters.
      notes.push_back("vertically aligned pursuers: reduced to the lower pursuer");
      const bool lower_is_p1 = s.p1.y() <= s.p2.y();
      const Point& p = lower_is_p1 ? s.p1 : s.p2;
      const double left = piece_corner_left(s.evader, p);
      const double right = piece_corner_right(s.evader, p, x_bar);
      if (left >= right) {
        ev.segment = Segment::S1;
        ev.value = left;
      } else {
        ev.segment = Segment::S3;
        ev.value = right;
      }
      ev.active = lower_is_p1 ? ActivePursuer::P1Only : ActivePursuer::P2Only;
    } else {
      ev.handoff_x = xi;
      if (xi < 0.0 || xi > x_bar) {
        notes.push_back("handoff point lies outside the goal line");
      }
      if (s.evader.x() <= s.p1.x()) {
        ev.segment = Segment::S1;
        ev.value = piece_corner_left(s.evader, s.p1);
        ev.active = ActivePursuer::P1Only;
      } else if (s.evader.x() >= s.p2.x()) {
        ev.segment = Segment::S3;
        ev.value = piece_corner_right(s.evader, s.p2, x_bar);
        ev.active = ActivePursuer::P2Only;
      } else {
        ev.segment = Segment::S2;
        ev.value = piece_handoff_same(s.evader, s.p1, xi);
        ev.active = ActivePursuer::Both;
      }
    }
  }

  ev.degraded = join_notes(notes);
  finalize(ev, cfg);
  return ev;
}

BarrierEvaluation evaluate_fast(const CanonicalState& cs, const GameConfig& cfg) {
  const GameState& s = cs.state;
  const double x_bar = cfg.x_bar();
  // Canonical slot 1 holds the slower pursuer regardless of original labels.
  const double g1 = std::max(cfg.speed_ratio1(), cfg.speed_ratio2());
  const double g2 = std::min(cfg.speed_ratio1(), cfg.speed_ratio2());
  const double gamma = g2 / g1;  // (slow pursuer speed) / (fast pursuer speed)

  BarrierEvaluation ev;
  ev.labels_swapped = cs.swapped;
  ev.frame_reflected = cs.reflected;
  std::vector<std::string> notes;

  if (nearly_coincident(s.p1, s.p2)) {
    // Coincident pursuers: the faster one covers a superset of goal points.
    notes.push_back("coincident pursuers: reduced to the faster pursuer");
    single_pursuer_fast(ev, s.evader, s.p2, g2, x_bar, /*as_p1=*/false);
    ev.degraded = join_notes(notes);
    finalize(ev, cfg);
    return ev;
  }

  std::optional<double> xi;
  double xi_left = -std::numeric_limits<double>::infinity();
  if (gamma == 1.0) {
    const bool vertical = s.p1.x() == s.p2.x();
    const double xi_bisector = vertical
                                   ? std::numeric_limits<double>::infinity()
                                   : handoff_x_same_speed(s.p1, s.p2);
    if (!std::isfinite(xi_bisector)) {
      // Equal speeds and stacked: the lower pursuer dominates outright.
      notes.push_back("vertically aligned pursuers: reduced to the lower pursuer");
      const bool lower_is_p1 = s.p1.y() <= s.p2.y();
      const Point& p = lower_is_p1 ? s.p1 : s.p2;
      single_pursuer_fast(ev, s.evader, p, lower_is_p1 ? g1 : g2, x_bar,
                          /*as_p1=*/lower_is_p1);
      ev.degraded = join_notes(notes);
      finalize(ev, cfg);
      return ev;
    }
    // Equal-speed pursuers split responsibility along their bisector; the
    // dominance region of the left pursuer extends to -infinity, so the left
    // corner is always covered.
    xi = xi_bisector;
  } else {
    const Circle between = apollonius_circle(s.p1, s.p2, gamma);
    const AxisCrossing ax = axis_crossings(between);
    if (ax.kind == CrossingKind::None) {
      // The slow pursuer is never first to any goal point: the fast pursuer
      // defends the whole line alone.
      notes.push_back("slow pursuer never defends the goal line: fast pursuer only");
      single_pursuer_fast(ev, s.evader, s.p2, g2, x_bar, /*as_p1=*/false);
      ev.degraded = join_notes(notes);
      finalize(ev, cfg);
      return ev;
    }
    if (ax.kind == CrossingKind::Tangent) {
      xi = ax.xs[0];
      xi_left = ax.xs[0];
    } else {
      xi = ax.xs[1];
      xi_left = ax.xs[0];
    }
  }

  ev.handoff_x = *xi;
  if (*xi < 0.0 || *xi > x_bar) {
    notes.push_back("handoff point lies outside the goal line");
  }
  if (xi_left > 0.0) {
    notes.push_back("slow pursuer's goal-line dominance does not reach the left corner");
  }

  const double g1sq = g1 * g1;
  const double g2sq = g2 * g2;
  const double t0 = g1sq * s.p1.x();
  const double t1 = (1.0 - g1sq) * *xi + g1sq * s.p1.x();
  const double t2 = (1.0 - g2sq) * *xi + g2sq * s.p2.x();
  const double t3 = (1.0 - g2sq) * x_bar + g2sq * s.p2.x();
  // t0 <= t1 and t2 <= t3 follow from xi in [0, x_bar], which is already
  // flagged above; the inner pair can cross independently.
  if (t2 < t1 - 1e-12 * (1.0 + x_bar)) {
    notes.push_back("piece thresholds out of order");
  }

  const double xe = s.evader.x();
  if (xe <= t0) {
    ev.segment = Segment::S1;
    ev.value = piece_circle_left(s.evader, s.p1, g1);
    ev.active = ActivePursuer::P1Only;
  } else if (xe <= t1) {
    ev.segment = Segment::S2;
    ev.value = piece_tangency(s.evader, s.p1, g1);
    ev.active = ActivePursuer::P1Only;
  } else if (xe <= t2) {
    ev.segment = Segment::S3;
    ev.value = piece_circle_handoff(s.evader, s.p1, g1, *xi);
    ev.active = ActivePursuer::Both;
  } else if (xe <= t3) {
    ev.segment = Segment::S4;
    ev.value = piece_tangency(s.evader, s.p2, g2);
    ev.active = ActivePursuer::P2Only;
  } else {
    ev.segment = Segment::S5;
    ev.value = piece_circle_right(s.evader, s.p2, g2, x_bar);
    ev.active = ActivePursuer::P2Only;
  }

  ev.degraded = join_notes(notes);
  finalize(ev, cfg);
  return ev;
}

BarrierEvaluation classify(const GameState& s, const GameConfig& cfg) {
  validate_in_domain(s, cfg);
  if (const auto tc = terminal_cause(s)) {
    throw AlreadyTerminal(*tc, "state is already terminal: " + to_string(*tc));
  }
  const CanonicalState cs = canonicalize(s, cfg);
  BarrierEvaluation ev = cfg.regime() == Regime::SameSpeed
                             ? evaluate_same_speed(cs, cfg)
                             : evaluate_fast(cs, cfg);
  if (cs.swapped) {
    if (ev.active == ActivePursuer::P1Only) {
      ev.active = ActivePursuer::P2Only;
    } else if (ev.active == ActivePursuer::P2Only) {
      ev.active = ActivePursuer::P1Only;
    }
  }
  return ev;
}

}  // namespace goalline
