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

// goalline: solver front end for the two-pursuer goal-line pursuit-evasion
// game. Subcommands: classify, section, verify, simulate.
//
// Exit codes: 0 success / verification passed; 1 verification disagreement;
// 2 usage or scenario error; 3 unsupported speed regime; 4 state already
// terminal; 5 I/O failure; 6 simulation timeout.

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "goalline/barrier.hpp"
#include "goalline/oracle.hpp"
#include "goalline/scenario.hpp"
#include "goalline/section.hpp"

namespace {

namespace gl = goalline;
namespace fs = std::filesystem;

constexpr int kExitOk = 0;
constexpr int kExitDisagreement = 1;
constexpr int kExitUsage = 2;
constexpr int kExitRegime = 3;
constexpr int kExitTerminal = 4;
constexpr int kExitIo = 5;
constexpr int kExitTimeout = 6;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

// Output files land in --out if given, otherwise in $GOALLINE_OUT_DIR (when
// set) under a default name, otherwise in the working directory.
fs::path resolve_out(const std::string& out_flag, const std::string& fallback) {
  if (!out_flag.empty()) return fs::path(out_flag);
  if (const char* dir = std::getenv("GOALLINE_OUT_DIR")) {
    return fs::path(dir) / fallback;
  }
  return fs::path(fallback);
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) {
    throw IoError("cannot open '" + path.string() + "' for writing");
  }
  out << content;
  out.flush();
  if (!out) {
    throw IoError("failed while writing '" + path.string() + "'");
  }
}

nlohmann::ordered_json state_json(const gl::GameState& s) {
  return {{"xE", s.evader.x()}, {"yE", s.evader.y()}, {"x1", s.p1.x()},
          {"y1", s.p1.y()},     {"x2", s.p2.x()},     {"y2", s.p2.y()}};
}

nlohmann::ordered_json evaluation_json(const gl::BarrierEvaluation& ev) {
  nlohmann::ordered_json j;
  j["outcome"] = gl::to_string(ev.outcome);
  j["B"] = ev.value;
  j["segment"] = gl::to_string(ev.segment);
  j["active"] = gl::to_string(ev.active);
  j["capture_mode"] = gl::to_string(ev.capture_mode);
  if (std::isfinite(ev.handoff_x)) {
    j["handoff_x"] = ev.handoff_x;
  } else {
    j["handoff_x"] = nullptr;
  }
  if (ev.degraded) {
    j["degraded"] = *ev.degraded;
  } else {
    j["degraded"] = nullptr;
  }
  j["labels_swapped"] = ev.labels_swapped;
  j["frame_reflected"] = ev.frame_reflected;
  return j;
}

int cmd_classify(const std::string& file, bool as_json) {
  const gl::Scenario sc = gl::load_scenario(file);
  const gl::GameConfig cfg = sc.config();
  const gl::BarrierEvaluation ev = gl::classify(sc.state, cfg);
  if (as_json) {
    std::cout << evaluation_json(ev).dump(2) << "\n";
  } else {
    std::cout << gl::to_string(ev.outcome) << " B=" << fmt(ev.value)
              << " segment=" << gl::to_string(ev.segment)
              << " active=" << gl::to_string(ev.active)
              << " capture=" << gl::to_string(ev.capture_mode);
    if (std::isfinite(ev.handoff_x)) {
      std::cout << " handoff_x=" << fmt(ev.handoff_x);
    }
    if (ev.degraded) {
      std::cout << " degraded=\"" << *ev.degraded << "\"";
    }
    std::cout << "\n";
  }
  return kExitOk;
}

int cmd_section(const std::string& file, int samples, const std::string& format,
                const std::string& out_flag) {
  const gl::Scenario sc = gl::load_scenario(file);
  const gl::GameConfig cfg = sc.config();
  // The section is a pursuer-placement construct; only the pursuers must be
  // on the field.
  gl::GameState pursuers_only = sc.state;
  pursuers_only.evader = gl::Point(0.0, 1.0);
  gl::validate_in_domain(pursuers_only, cfg);

  gl::ExportFormat fmt_kind;
  std::string ext;
  if (format == "csv") {
    fmt_kind = gl::ExportFormat::Csv;
    ext = "csv";
  } else if (format == "json") {
    fmt_kind = gl::ExportFormat::Json;
    ext = "json";
  } else if (format == "svg") {
    fmt_kind = gl::ExportFormat::Svg;
    ext = "svg";
  } else {
    throw gl::UsageError("section: unknown format '" + format +
                         "' (expected csv, json or svg)");
  }

  const gl::CrossSection cs = gl::build_section(sc.state.p1, sc.state.p2, cfg);
  const auto pts = gl::sample_section(cs, samples);
  const std::string text = gl::export_section(cs, pts, fmt_kind);
  const fs::path out = resolve_out(out_flag, "section." + ext);
  write_file(out, text);

  std::cout << "section: " << cs.segments.size() << " segment(s), "
            << pts.size() << " sample(s) -> " << out.string() << "\n";
  for (std::size_t i = 0; i < cs.segments.size(); ++i) {
    const auto& seg = cs.segments[i];
    std::cout << "  segment " << i << ": " << gl::to_string(seg.kind) << " ["
              << fmt(seg.lo) << ", " << fmt(seg.hi) << "] ";
    if (seg.kind == gl::CurveKind::CircleArc) {
      std::cout << "center=(" << fmt(seg.center.x()) << ","
                << fmt(seg.center.y()) << ") r=" << fmt(seg.radius);
    } else {
      std::cout << "A=" << fmt(seg.A) << " C=" << fmt(seg.C)
                << " D=" << fmt(seg.D) << " F=" << fmt(seg.F);
    }
    std::cout << "\n";
  }
  if (cs.degraded) {
    std::cout << "  degraded: " << *cs.degraded << "\n";
  }
  return kExitOk;
}

int cmd_verify(const std::string& file, int random_n, std::uint64_t seed,
               bool seed_given, const std::string& regime,
               const std::string& out_flag) {
  nlohmann::ordered_json report;
  int exit_code = kExitOk;

  if (random_n > 0) {
    std::optional<gl::GameConfig> cfg;
    if (!file.empty()) {
      const gl::Scenario sc = gl::load_scenario(file);
      cfg = sc.config();
      if (!seed_given && sc.seed) seed = *sc.seed;
    } else if (regime == "same") {
      cfg = gl::GameConfig(1.0, 1.0, 1.0, 10.0);
    } else if (regime == "fast") {
      cfg = gl::GameConfig(0.5, 1.0, 2.0, 10.0);
    } else {
      throw gl::UsageError(
          "verify --random needs either a scenario file or --regime same|fast");
    }
    const gl::SweepReport rep = gl::sweep_agreement(*cfg, random_n, seed);
    const std::string text = gl::report_json(rep, *cfg);
    const fs::path out = resolve_out(out_flag, "verify_report.json");
    write_file(out, text);
    std::cout << "sweep: tested=" << rep.tested << " agreements="
              << rep.agreements << " disagreements=" << rep.disagreements.size()
              << " skipped_band=" << rep.skipped_band
              << " skipped_degraded=" << rep.skipped_degraded << " -> "
              << out.string() << "\n";
    if (rep.vacuous) {
      std::cout << "warning: no state qualified for testing; vacuous pass\n";
    }
    if (!rep.disagreements.empty()) {
      for (const auto& d : rep.disagreements) {
        std::cout << "disagreement at index " << d.index << ": B="
                  << fmt(d.barrier_value) << " segment=" << d.segment
                  << " margin=" << fmt(d.margin) << " state=("
                  << fmt(d.state.evader.x()) << "," << fmt(d.state.evader.y())
                  << ")(" << fmt(d.state.p1.x()) << "," << fmt(d.state.p1.y())
                  << ")(" << fmt(d.state.p2.x()) << "," << fmt(d.state.p2.y())
                  << ")\n";
      }
      return kExitDisagreement;
    }
    return kExitOk;
  }

  if (file.empty()) {
    throw gl::UsageError("verify: provide a scenario file or --random N");
  }
  const gl::Scenario sc = gl::load_scenario(file);
  const gl::GameConfig cfg = sc.config();
  const gl::BarrierEvaluation ev = gl::classify(sc.state, cfg);
  const double band = gl::sweep_band(cfg);

  report["mode"] = "scenario";
  report["state"] = state_json(sc.state);
  report["barrier_value"] = ev.value;
  report["segment"] = gl::to_string(ev.segment);
  report["band"] = band;

  if (ev.degraded) {
    report["check"] = "skipped-degraded";
    report["degraded"] = *ev.degraded;
    report["pass"] = true;
    std::cout << "degraded state (" << *ev.degraded
              << "): oracle agreement not guaranteed, check skipped\n";
  } else {
    const gl::GoalMargin gm = gl::goal_margin(sc.state, cfg);
    report["margin"] = gm.margin;
    report["argmax_x"] = gm.argmax_x;
    if (std::abs(ev.value) <= band) {
      const double margin_tol = 1e-4 * cfg.x_bar();
      const bool pass = std::abs(gm.margin) <= margin_tol;
      report["check"] = "barrier-band";
      report["margin_tol"] = margin_tol;
      report["pass"] = pass;
      std::cout << "|margin| <= 1e-4*x_bar: " << (pass ? "pass" : "fail")
                << " (margin=" << fmt(gm.margin) << ")\n";
      if (!pass) exit_code = kExitDisagreement;
    } else {
      const bool pass = (ev.value > 0.0) == (gm.margin > 0.0);
      report["check"] = "sign-agreement";
      report["pass"] = pass;
      std::cout << "sign(B) agrees with goal_margin: "
                << (pass ? "pass" : "fail") << " (B=" << fmt(ev.value)
                << ", margin=" << fmt(gm.margin) << ")\n";
      if (!pass) exit_code = kExitDisagreement;
    }
  }

  const fs::path out = resolve_out(out_flag, "verify_report.json");
  write_file(out, report.dump(2) + "\n");
  return exit_code;
}

int cmd_simulate(const std::string& file, std::optional<double> dt,
                 std::optional<double> eps, std::optional<double> tmax,
                 const std::string& out_flag) {
  const gl::Scenario sc = gl::load_scenario(file);
  const gl::GameConfig cfg = sc.config();
  const double dt_v = dt.value_or(sc.dt_value());
  const double eps_v = eps.value_or(sc.eps_value());
  const double tmax_v = tmax.value_or(sc.t_max_value());

  const gl::Trajectory tr = gl::simulate(sc.state, cfg, dt_v, eps_v, tmax_v);

  std::string csv = "t,xE,yE,x1,y1,x2,y2\n";
  for (const auto& smp : tr.samples) {
    csv += fmt(smp.t) + "," + fmt(smp.state.evader.x()) + "," +
           fmt(smp.state.evader.y()) + "," + fmt(smp.state.p1.x()) + "," +
           fmt(smp.state.p1.y()) + "," + fmt(smp.state.p2.x()) + "," +
           fmt(smp.state.p2.y()) + "\n";
  }
  const fs::path out = resolve_out(out_flag, "trajectory.csv");
  write_file(out, csv);

  std::cout << "terminal=" << gl::to_string(tr.terminal)
            << " t=" << fmt(tr.samples.back().t) << " steps="
            << tr.samples.size() - 1;
  if (tr.capture_point) {
    std::cout << " capture_point=(" << fmt(tr.capture_point->x()) << ","
              << fmt(tr.capture_point->y()) << ")";
  }
  std::cout << " -> " << out.string() << "\n";
  return tr.terminal == gl::TerminalCause::Timeout ? kExitTimeout : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "goalline: barrier classification, cross-sections, verification and "
      "simulation for the two-pursuer goal-line pursuit-evasion game"};
  app.require_subcommand(1);

  // classify
  auto* classify = app.add_subcommand(
      "classify", "Classify a scenario: which side wins from this state");
  std::string classify_file;
  bool classify_json = false;
  classify->add_option("scenario", classify_file, "Scenario JSON file")
      ->required();
  classify->add_flag("--json", classify_json, "Machine-readable JSON output");

  // section
  auto* section = app.add_subcommand(
      "section", "Export the barrier cross-section for a scenario's pursuers");
  std::string section_file, section_format = "csv", section_out;
  int section_samples = 50;
  section->add_option("scenario", section_file, "Scenario JSON file")
      ->required();
  section->add_option("--samples", section_samples,
                      "Samples per segment (>= 2)");
  section->add_option("--format", section_format, "csv, json or svg");
  section->add_option("--out", section_out, "Output file path");

  // verify
  auto* verify = app.add_subcommand(
      "verify", "Check the closed form against the goal-line oracle");
  std::string verify_file, verify_regime, verify_out;
  int verify_random = 0;
  std::uint64_t verify_seed = 1;
  verify->add_option("scenario", verify_file, "Scenario JSON file");
  verify->add_option("--random", verify_random,
                     "Number of random states to test");
  auto* seed_opt =
      verify->add_option("--seed", verify_seed, "Random sweep seed");
  verify->add_option("--regime", verify_regime,
                     "Preset config for --random: same or fast");
  verify->add_option("--out", verify_out, "Report file path");

  // simulate
  auto* simulate = app.add_subcommand(
      "simulate", "Play out heuristic strategies and record the trajectory");
  std::string simulate_file, simulate_out;
  std::optional<double> sim_dt, sim_eps, sim_tmax;
  simulate->add_option("scenario", simulate_file, "Scenario JSON file")
      ->required();
  simulate->add_option("--dt", sim_dt, "Integration step");
  simulate->add_option("--eps", sim_eps, "Capture radius");
  simulate->add_option("--tmax", sim_tmax, "Time budget");
  simulate->add_option("--out", simulate_out, "Trajectory CSV path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*classify) return cmd_classify(classify_file, classify_json);
    if (*section) {
      return cmd_section(section_file, section_samples, section_format,
                         section_out);
    }
    if (*verify) {
      return cmd_verify(verify_file, verify_random, verify_seed,
                        seed_opt->count() > 0, verify_regime, verify_out);
    }
    if (*simulate) {
      return cmd_simulate(simulate_file, sim_dt, sim_eps, sim_tmax,
                          simulate_out);
    }
  } catch (const gl::UnsupportedRegime& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRegime;
  } catch (const gl::AlreadyTerminal& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitTerminal;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const fs::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const gl::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitUsage;
}
