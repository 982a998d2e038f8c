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

#include "goalline/section.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>

#include <json.hpp>

#include "goalline/barrier.hpp"
#include "goalline/errors.hpp"

namespace goalline {

namespace {

double sq(double v) { return v * v; }

bool nearly_coincident(const Point& p, const Point& q) {
  return (p - q).norm() <= kGeometryTol * (1.0 + p.norm() + q.norm());
}

// Shortest round-trip decimal form.
std::string fmt(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

CurveSegment make_circle(double center_x, double radius, double lo, double hi) {
  CurveSegment seg;
  seg.kind = CurveKind::CircleArc;
  seg.center = Point(center_x, 0.0);
  seg.radius = radius;
  seg.lo = lo;
  seg.hi = hi;
  return seg;
}

// Upper branch of the tangency piece for pursuer p with speed ratio g:
// g^2 x^2 - (1 - g^2) y^2 - 2 g^2 p.x x + g^2 (p.x^2 + (1 - g^2) p.y^2) = 0.
CurveSegment make_hyperbola(const Point& p, double g, double lo, double hi) {
  const double g2 = g * g;
  CurveSegment seg;
  seg.kind = CurveKind::HyperbolaArc;
  seg.A = g2;
  seg.C = -(1.0 - g2);
  seg.D = -2.0 * g2 * p.x();
  seg.F = g2 * (sq(p.x()) + (1.0 - g2) * sq(p.y()));
  seg.lo = lo;
  seg.hi = hi;
  return seg;
}

// Appends only segments of positive width; reports whether any was dropped.
void push_segments(CrossSection& cs, std::vector<CurveSegment> candidates,
                   bool& dropped) {
  for (auto& seg : candidates) {
    if (seg.hi - seg.lo > 0.0) {
      cs.segments.push_back(seg);
    } else {
      dropped = true;
    }
  }
}

// Clamps breakpoints into [0, x_bar] and makes them monotone left to right.
// A no-op for non-degraded layouts; keeps degraded sections drawable.
void normalize_breakpoints(std::vector<double>& b, double x_bar) {
  double run = 0.0;
  for (double& v : b) {
    v = std::clamp(v, 0.0, x_bar);
    run = std::max(run, v);
    v = run;
  }
}

// Three-piece section of a lone fast pursuer at p with speed ratio g.
void single_pursuer_fast_section(CrossSection& cs, const Point& p, double g,
                                 double x_bar, bool& dropped) {
  const double g2 = g * g;
  std::vector<double> b{0.0, g2 * p.x(), (1.0 - g2) * x_bar + g2 * p.x(), x_bar};
  normalize_breakpoints(b, x_bar);
  std::vector<CurveSegment> segs;
  segs.push_back(make_circle(0.0, g * p.norm(), b[0], b[1]));
  segs.push_back(make_hyperbola(p, g, b[1], b[2]));
  segs.push_back(
      make_circle(x_bar, g * std::hypot(p.x() - x_bar, p.y()), b[2], b[3]));
  push_segments(cs, std::move(segs), dropped);
}

// Two-piece same-speed section of a lone pursuer at p: the boundary of the
// union of the two corner disks through p, which meet at the pursuer itself.
void single_pursuer_same_section(CrossSection& cs, const Point& p, double x_bar,
                                 bool& dropped) {
  std::vector<CurveSegment> segs;
  segs.push_back(make_circle(0.0, p.norm(), 0.0, std::clamp(p.x(), 0.0, x_bar)));
  segs.push_back(make_circle(x_bar, std::hypot(p.x() - x_bar, p.y()),
                             std::clamp(p.x(), 0.0, x_bar), x_bar));
  push_segments(cs, std::move(segs), dropped);
}

std::optional<std::string> join_notes(const std::vector<std::string>& notes) {
  if (notes.empty()) return std::nullopt;
  std::string out = notes.front();
  for (std::size_t i = 1; i < notes.size(); ++i) out += "; " + notes[i];
  return out;
}

}  // namespace

std::string to_string(CurveKind k) {
  return k == CurveKind::CircleArc ? "circle" : "hyperbola";
}

double CurveSegment::y_at(double x) const {
  if (kind == CurveKind::CircleArc) {
    const double disc = sq(radius) - sq(x - center.x());
    if (disc < -kGeometryTol * (1.0 + sq(radius))) {
      throw SectionInconsistency(
          "circle arc has no real point at x = " + fmt(x) +
          " inside its declared interval");
    }
    return center.y() + std::sqrt(std::max(0.0, disc));
  }
  const double num = A * x * x + D * x + F;
  const double scale = 1.0 + std::abs(A * x * x) + std::abs(D * x) + std::abs(F);
  if (num < -kGeometryTol * scale) {
    throw SectionInconsistency("hyperbola arc has no real point at x = " +
                               fmt(x) + " inside its declared interval");
  }
  return std::sqrt(std::max(0.0, num) / -C);
}

double CurveSegment::residual(double x, double y) const {
  if (kind == CurveKind::CircleArc) {
    return sq(x - center.x()) + sq(y - center.y()) - sq(radius);
  }
  return A * x * x + C * y * y + D * x + F;
}

CrossSection section_same_speed(const Point& p1, const Point& p2, double x_bar) {
  if (!(x_bar > 0.0) || !std::isfinite(x_bar)) {
    throw UsageError("section_same_speed: x_bar must be finite and positive");
  }
  CrossSection cs;
  cs.regime = Regime::SameSpeed;
  cs.x_bar = x_bar;
  cs.p1 = p1;
  cs.p2 = p2;
  std::vector<std::string> notes;
  bool dropped = false;

  if (nearly_coincident(p1, p2)) {
    notes.push_back("coincident pursuers: reduced to a single-pursuer barrier");
    single_pursuer_same_section(cs, p1, x_bar, dropped);
  } else {
    const bool vertical = p1.x() == p2.x();
    const double xi = vertical ? std::numeric_limits<double>::infinity()
                               : handoff_x_same_speed(p1, p2);
    if (!std::isfinite(xi)) {
      notes.push_back("vertically aligned pursuers: reduced to the lower pursuer");
      single_pursuer_same_section(cs, p1.y() <= p2.y() ? p1 : p2, x_bar, dropped);
    } else {
      const Point& left = p1.x() <= p2.x() ? p1 : p2;
      const Point& right = p1.x() <= p2.x() ? p2 : p1;
      if (xi < 0.0 || xi > x_bar) {
        notes.push_back("handoff point lies outside the goal line");
      }
      std::vector<double> b{0.0, left.x(), right.x(), x_bar};
      normalize_breakpoints(b, x_bar);
      std::vector<CurveSegment> segs;
      segs.push_back(make_circle(0.0, left.norm(), b[0], b[1]));
      segs.push_back(
          make_circle(xi, std::hypot(left.x() - xi, left.y()), b[1], b[2]));
      segs.push_back(make_circle(
          x_bar, std::hypot(right.x() - x_bar, right.y()), b[2], b[3]));
      push_segments(cs, std::move(segs), dropped);
    }
  }
  if (dropped) notes.push_back("empty segment dropped");
  cs.degraded = join_notes(notes);
  return cs;
}

CrossSection section_fast(const Point& slow, const Point& fast,
                          const GameConfig& cfg) {
  if (cfg.regime() != Regime::FastPursuers) {
    throw UsageError("section_fast: config is not in the fast-pursuers regime");
  }
  const double x_bar = cfg.x_bar();
  const double g1 = std::max(cfg.speed_ratio1(), cfg.speed_ratio2());
  const double g2 = std::min(cfg.speed_ratio1(), cfg.speed_ratio2());
  const double gamma = g2 / g1;

  CrossSection cs;
  cs.regime = Regime::FastPursuers;
  cs.x_bar = x_bar;
  cs.p1 = slow;
  cs.p2 = fast;
  std::vector<std::string> notes;
  bool dropped = false;

  std::optional<double> xi;
  double xi_left = -std::numeric_limits<double>::infinity();
  if (nearly_coincident(slow, fast)) {
    notes.push_back("coincident pursuers: reduced to the faster pursuer");
    single_pursuer_fast_section(cs, fast, g2, x_bar, dropped);
  } else if (gamma == 1.0) {
    const bool vertical = slow.x() == fast.x();
    const double xi_bisector = vertical
                                   ? std::numeric_limits<double>::infinity()
                                   : handoff_x_same_speed(slow, fast);
    if (!std::isfinite(xi_bisector)) {
      notes.push_back("vertically aligned pursuers: reduced to the lower pursuer");
      single_pursuer_fast_section(cs, slow.y() <= fast.y() ? slow : fast, g1,
                                  x_bar, dropped);
    } else {
      xi = xi_bisector;
    }
  } else {
    const Circle between = apollonius_circle(slow, fast, gamma);
    const AxisCrossing ax = axis_crossings(between);
    if (ax.kind == CrossingKind::None) {
      notes.push_back("slow pursuer never defends the goal line: fast pursuer only");
      single_pursuer_fast_section(cs, fast, g2, x_bar, dropped);
    } else if (ax.kind == CrossingKind::Tangent) {
      xi = ax.xs[0];
      xi_left = ax.xs[0];
    } else {
      xi = ax.xs[1];
      xi_left = ax.xs[0];
    }
  }

  if (xi) {
    if (*xi < 0.0 || *xi > x_bar) {
      notes.push_back("handoff point lies outside the goal line");
    }
    if (xi_left > 0.0) {
      notes.push_back(
          "slow pursuer's goal-line dominance does not reach the left corner");
    }
    const double g1sq = g1 * g1;
    const double g2sq = g2 * g2;
    const double t1 = (1.0 - g1sq) * *xi + g1sq * slow.x();
    const double t2 = (1.0 - g2sq) * *xi + g2sq * fast.x();
    if (t2 < t1 - 1e-12 * (1.0 + x_bar)) {
      notes.push_back("piece thresholds out of order");
    }
    std::vector<double> b{0.0, g1sq * slow.x(), t1, t2,
                          (1.0 - g2sq) * x_bar + g2sq * fast.x(), x_bar};
    normalize_breakpoints(b, x_bar);
    std::vector<CurveSegment> segs;
    segs.push_back(make_circle(0.0, g1 * slow.norm(), b[0], b[1]));
    segs.push_back(make_hyperbola(slow, g1, b[1], b[2]));
    segs.push_back(make_circle(
        *xi, g1 * std::hypot(slow.x() - *xi, slow.y()), b[2], b[3]));
    segs.push_back(make_hyperbola(fast, g2, b[3], b[4]));
    segs.push_back(make_circle(
        x_bar, g2 * std::hypot(fast.x() - x_bar, fast.y()), b[4], b[5]));
    push_segments(cs, std::move(segs), dropped);
  }

  if (dropped) notes.push_back("empty segment dropped");
  cs.degraded = join_notes(notes);
  return cs;
}

CrossSection build_section(const Point& p1, const Point& p2,
                           const GameConfig& cfg) {
  CrossSection cs;
  if (cfg.regime() == Regime::SameSpeed) {
    cs = p1.x() <= p2.x() ? section_same_speed(p1, p2, cfg.x_bar())
                          : section_same_speed(p2, p1, cfg.x_bar());
  } else {
    const bool p1_is_slow = cfg.p1_speed() <= cfg.p2_speed();
    Point slow = p1_is_slow ? p1 : p2;
    Point fast = p1_is_slow ? p2 : p1;
    if (slow.x() > fast.x() && cfg.p1_speed() == cfg.p2_speed()) {
      std::swap(slow, fast);  // equal-speed pursuers are interchangeable
    }
    if (slow.x() > fast.x()) {
      // The closed form wants the slower pursuer on the left: build in the
      // mirrored frame and reflect the curve back.
      const double xb = cfg.x_bar();
      cs = section_fast(Point(xb - slow.x(), slow.y()),
                        Point(xb - fast.x(), fast.y()), cfg);
      cs = reflect_section(cs);
    } else {
      cs = section_fast(slow, fast, cfg);
    }
  }
  cs.p1 = p1;
  cs.p2 = p2;
  return cs;
}

CrossSection reflect_section(const CrossSection& cs) {
  CrossSection out;
  out.regime = cs.regime;
  out.degraded = cs.degraded;
  out.x_bar = cs.x_bar;
  out.p1 = Point(cs.x_bar - cs.p1.x(), cs.p1.y());
  out.p2 = Point(cs.x_bar - cs.p2.x(), cs.p2.y());
  const double xb = cs.x_bar;
  for (auto it = cs.segments.rbegin(); it != cs.segments.rend(); ++it) {
    CurveSegment seg = *it;
    seg.lo = xb - it->hi;
    seg.hi = xb - it->lo;
    if (seg.kind == CurveKind::CircleArc) {
      seg.center = Point(xb - it->center.x(), it->center.y());
    } else {
      // Substituting x -> xb - x in A x^2 + C y^2 + D x + F.
      seg.D = -(2.0 * it->A * xb + it->D);
      seg.F = it->A * xb * xb + it->D * xb + it->F;
    }
    out.segments.push_back(seg);
  }
  return out;
}

std::vector<SectionSample> sample_section(const CrossSection& cs,
                                          int n_per_segment) {
  if (n_per_segment < 2) {
    throw UsageError("sample_section: need at least 2 samples per segment");
  }
  std::vector<SectionSample> out;
  out.reserve(cs.segments.size() * static_cast<std::size_t>(n_per_segment));
  for (std::size_t i = 0; i < cs.segments.size(); ++i) {
    const CurveSegment& seg = cs.segments[i];
    for (int k = 0; k < n_per_segment; ++k) {
      const double t = static_cast<double>(k) / (n_per_segment - 1);
      const double x = seg.lo + t * (seg.hi - seg.lo);
      out.push_back({static_cast<int>(i), x, seg.y_at(x)});
    }
  }
  return out;
}

std::string export_section(const CrossSection& cs,
                           const std::vector<SectionSample>& samples,
                           ExportFormat format) {
  if (format == ExportFormat::Csv) {
    std::string out = "segment_index,kind,x,y\n";
    for (const auto& s : samples) {
      const auto& seg = cs.segments.at(static_cast<std::size_t>(s.segment_index));
      out += std::to_string(s.segment_index) + "," + to_string(seg.kind) + "," +
             fmt(s.x) + "," + fmt(s.y) + "\n";
    }
    return out;
  }

  if (format == ExportFormat::Json) {
    nlohmann::ordered_json j;
    j["regime"] = to_string(cs.regime);
    j["x_bar"] = cs.x_bar;
    if (cs.degraded) {
      j["degraded"] = *cs.degraded;
    } else {
      j["degraded"] = nullptr;
    }
    j["pursuers"] = {{"p1", {cs.p1.x(), cs.p1.y()}},
                     {"p2", {cs.p2.x(), cs.p2.y()}}};
    j["segments"] = nlohmann::ordered_json::array();
    for (const auto& seg : cs.segments) {
      nlohmann::ordered_json js;
      js["kind"] = to_string(seg.kind);
      js["lo"] = seg.lo;
      js["hi"] = seg.hi;
      if (seg.kind == CurveKind::CircleArc) {
        js["center"] = {seg.center.x(), seg.center.y()};
        js["radius"] = seg.radius;
      } else {
        js["coefficients"] = {
            {"A", seg.A}, {"C", seg.C}, {"D", seg.D}, {"F", seg.F}};
      }
      j["segments"].push_back(js);
    }
    j["samples"] = nlohmann::ordered_json::array();
    for (const auto& s : samples) {
      j["samples"].push_back(
          {{"segment_index", s.segment_index}, {"x", s.x}, {"y", s.y}});
    }
    return j.dump(2) + "\n";
  }

  // SVG: drawn in field coordinates inside a y-flipped group.
  if (samples.empty()) {
    throw UsageError("export_section: svg export needs at least one sample");
  }
  double max_y = std::max(cs.p1.y(), cs.p2.y());
  for (const auto& s : samples) max_y = std::max(max_y, s.y);
  max_y = std::max(max_y, 0.1 * cs.x_bar);
  const double pad = 0.05 * std::max(cs.x_bar, max_y);
  const double width = cs.x_bar + 2.0 * pad;
  const double height = max_y + 2.0 * pad;
  const double stroke = 0.004 * std::max(cs.x_bar, max_y);

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " +
         fmt(width) + " " + fmt(height) + "\">\n";
  svg += "<g transform=\"translate(" + fmt(pad) + "," + fmt(max_y + pad) +
         ") scale(1,-1)\">\n";
  svg += "<rect x=\"0\" y=\"0\" width=\"" + fmt(cs.x_bar) + "\" height=\"" +
         fmt(max_y) + "\" fill=\"#f7f7f2\" stroke=\"#cccccc\" stroke-width=\"" +
         fmt(0.5 * stroke) + "\"/>\n";
  svg += "<line x1=\"0\" y1=\"0\" x2=\"" + fmt(cs.x_bar) +
         "\" y2=\"0\" stroke=\"#222222\" stroke-width=\"" + fmt(2.0 * stroke) +
         "\"/>\n";
  for (std::size_t i = 0; i < cs.segments.size(); ++i) {
    std::string pts;
    for (const auto& s : samples) {
      if (s.segment_index != static_cast<int>(i)) continue;
      if (!pts.empty()) pts += " ";
      pts += fmt(s.x) + "," + fmt(s.y);
    }
    if (pts.empty()) continue;
    svg += "<polyline fill=\"none\" stroke=\"#c0392b\" stroke-width=\"" +
           fmt(1.5 * stroke) + "\" points=\"" + pts + "\"/>\n";
  }
  const double marker = 3.0 * stroke;
  svg += "<circle cx=\"" + fmt(cs.p1.x()) + "\" cy=\"" + fmt(cs.p1.y()) +
         "\" r=\"" + fmt(marker) + "\" fill=\"#2c3e8c\"/>\n";
  svg += "<circle cx=\"" + fmt(cs.p2.x()) + "\" cy=\"" + fmt(cs.p2.y()) +
         "\" r=\"" + fmt(marker) + "\" fill=\"#1f7a4d\"/>\n";
  svg += "</g>\n</svg>\n";
  return svg;
}

}  // namespace goalline
