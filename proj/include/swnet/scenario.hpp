// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 the swnet developers

#ifndef SWNET_SCENARIO_HPP
#define SWNET_SCENARIO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "swnet/rkdg.hpp"

namespace swnet {

struct ScenarioError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CanalConfig {
  double length = 5.0;
  int cells = 200;
  double h = 1.0;
  double q = 0.0;
  // Optional second constant block for x past split_x (canal-local coord).
  bool split = false;
  double split_x = 0.0;
  double h2 = 1.0;
  double q2 = 0.0;

  bool operator==(const CanalConfig&) const = default;
};

/// Simulation configuration; line-oriented `key = value` file with
/// [canal1], [canal2] and [junction] sections.
struct Scenario {
  double gravity = kDefaultGravity;
  double cfl = 0.15;
  double t_end = 0.1;
  double output_interval = 0.0;  // 0: ten snapshots over [0, t_end]
  int degree = 2;
  bool limiter = true;
  double tvb_m = 0.0;
  double dispatch_band = 2e-2;
  double backflow_band = 0.6;
  Coupling coupling = Coupling::EqualHeight;
  std::string output_dir = "out";
  CanalConfig canal1;
  CanalConfig canal2;

  bool operator==(const Scenario&) const = default;
};

/// Parses and validates a scenario. Throws ScenarioError naming the line or
/// field on bad input.
Scenario parse_scenario(const std::string& text);

/// Canonical text form; parse(render(s)) == s.
std::string render_scenario(const Scenario& s);

struct SnapshotEntry {
  double t = 0.0;
  std::vector<std::string> files;
};

struct CaseEvent {
  double t = 0.0;
  JunctionCase tag = JunctionCase::AA_Intersection;
};

struct LedgerEntry {
  double t = 0.0;
  double volume = 0.0;
  // Time integral of the net outer-boundary mass inflow since t = 0.
  double boundary_integral = 0.0;
};

struct RunReport {
  std::string status = "completed";  // completed | no_solution | dry
  std::string message;
  double t_final = 0.0;
  long steps = 0;
  std::vector<SnapshotEntry> snapshots;
  std::vector<CaseEvent> cases;
  std::vector<LedgerEntry> ledger;

  std::string to_json() const;
  /// CLI exit code: 0 completed, 2 no_solution, 3 dry.
  int exit_code() const;
};

/// Runs the scenario, writing per-canal snapshot CSVs (columns x, h, q, v,
/// froude, regime; cell averages) and report.json into the output directory.
/// SWNET_OUTPUT_DIR overrides scenario.output_dir.
RunReport run_scenario(const Scenario& s);

/// CSV rows (curve_id, h, q) for all ten curves around one anchor.
void export_curves(const State& anchor, double g, std::ostream& os);

/// CSV rows (subregion, h, q) bounding the attainable set of one side.
void export_regions(Side side, const State& anchor, double g,
                    std::ostream& os);

/// CSV rows (label, h, q) with both Lax curves, the solved traces and the
/// case tag; unsupported regime pairs become a labeled row, not an error.
void export_junction_diagram(const State& u_l, const State& u_r,
                             Coupling coupling, double g, std::ostream& os);

}  // namespace swnet

#endif  // SWNET_SCENARIO_HPP
