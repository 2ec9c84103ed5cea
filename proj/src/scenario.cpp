// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 the swnet developers

#include "swnet/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "json.hpp"

namespace swnet {

namespace {

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

double parse_double(const std::string& v, int line) {
  size_t pos = 0;
  double x;
  try {
    x = std::stod(v, &pos);
  } catch (const std::exception&) {
    throw ScenarioError("line " + std::to_string(line) + ": bad number '" +
                        v + "'");
  }
  if (pos != v.size())
    throw ScenarioError("line " + std::to_string(line) + ": bad number '" +
                        v + "'");
  return x;
}

bool parse_bool(const std::string& v, int line) {
  if (v == "true" || v == "1" || v == "on") return true;
  if (v == "false" || v == "0" || v == "off") return false;
  throw ScenarioError("line " + std::to_string(line) + ": bad boolean '" +
                      v + "'");
}

void validate(const Scenario& s) {
  const auto fail = [](const std::string& m) { throw ScenarioError(m); };
  if (!(s.gravity > 0.0)) fail("gravity must be positive");
  if (!(s.cfl > 0.0 && s.cfl <= 1.0)) fail("cfl must be in (0, 1]");
  if (s.t_end < 0.0) fail("t_end must be non-negative");
  if (s.output_interval < 0.0) fail("output_interval must be non-negative");
  if (s.degree < 0 || s.degree > 2) fail("degree must be 0, 1 or 2");
  const auto check_canal = [&](const CanalConfig& c, const char* name) {
    const std::string n(name);
    if (!(c.length > 0.0)) fail(n + ": length must be positive");
    if (c.cells < 1) fail(n + ": cells must be at least 1");
    if (!(c.h > kDryDepth)) fail(n + ": h must describe a wet state");
    if (c.split) {
      if (!(c.h2 > kDryDepth)) fail(n + ": h2 must describe a wet state");
      if (c.split_x < 0.0 || c.split_x > c.length)
        fail(n + ": split_x outside the canal");
    }
  };
  check_canal(s.canal1, "canal1");
  check_canal(s.canal2, "canal2");
}

const char* regime_name(const State& u, double g) {
  return to_string(classify(u, g));
}

void write_snapshot_csv(const std::string& path, const DGField& f, double g) {
  std::ofstream os(path);
  if (!os) throw ScenarioError("cannot write " + path);
  os << "x,h,q,v,froude,regime\n";
  for (int m = 0; m < f.grid().cells; ++m) {
    const State u = f.cell_average(m);
    os << fmt(f.grid().center(m)) << ',' << fmt(u.h()) << ',' << fmt(u.q())
       << ',' << fmt(u.v()) << ',' << fmt(froude(u, g)) << ','
       << regime_name(u, g) << '\n';
  }
}

ProfileFn make_profile(const CanalConfig& c, double x_left) {
  return [c, x_left](double x) -> std::pair<double, double> {
    const double local = x - x_left;
    if (c.split && local >= c.split_x) return {c.h2, c.q2};
    return {c.h, c.q};
  };
}

}  // namespace

Scenario parse_scenario(const std::string& text) {
  Scenario s;
  std::istringstream in(text);
  std::string raw;
  std::string section;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string ln = trim(raw);
    if (ln.empty() || ln[0] == '#') continue;
    if (ln.front() == '[') {
      if (ln.back() != ']')
        throw ScenarioError("line " + std::to_string(line) +
                            ": unterminated section header");
      section = trim(ln.substr(1, ln.size() - 2));
      if (section != "canal1" && section != "canal2" && section != "junction")
        throw ScenarioError("line " + std::to_string(line) +
                            ": unknown section [" + section + "]");
      continue;
    }
    const auto eq = ln.find('=');
    if (eq == std::string::npos)
      throw ScenarioError("line " + std::to_string(line) +
                          ": expected key = value");
    const std::string key = trim(ln.substr(0, eq));
    const std::string val = trim(ln.substr(eq + 1));
    if (section.empty()) {
      if (key == "gravity") s.gravity = parse_double(val, line);
      else if (key == "cfl") s.cfl = parse_double(val, line);
      else if (key == "t_end") s.t_end = parse_double(val, line);
      else if (key == "output_interval")
        s.output_interval = parse_double(val, line);
      else if (key == "degree")
        s.degree = static_cast<int>(parse_double(val, line));
      else if (key == "limiter") s.limiter = parse_bool(val, line);
      else if (key == "tvb_m") s.tvb_m = parse_double(val, line);
      else if (key == "dispatch_band")
        s.dispatch_band = parse_double(val, line);
      else if (key == "backflow_band")
        s.backflow_band = parse_double(val, line);
      else if (key == "output_dir") s.output_dir = val;
      else
        throw ScenarioError("line " + std::to_string(line) +
                            ": unknown key '" + key + "'");
    } else if (section == "junction") {
      if (key == "coupling") {
        try {
          s.coupling = coupling_from_string(val);
        } catch (const DomainViolation& e) {
          throw ScenarioError("line " + std::to_string(line) + ": " +
                              e.what());
        }
      } else {
        throw ScenarioError("line " + std::to_string(line) +
                            ": unknown junction key '" + key + "'");
      }
    } else {
      CanalConfig& c = (section == "canal1") ? s.canal1 : s.canal2;
      if (key == "length") c.length = parse_double(val, line);
      else if (key == "cells")
        c.cells = static_cast<int>(parse_double(val, line));
      else if (key == "h") c.h = parse_double(val, line);
      else if (key == "q") c.q = parse_double(val, line);
      else if (key == "split_x") {
        c.split = true;
        c.split_x = parse_double(val, line);
      } else if (key == "h2") c.h2 = parse_double(val, line);
      else if (key == "q2") c.q2 = parse_double(val, line);
      else
        throw ScenarioError("line " + std::to_string(line) + ": unknown " +
                            section + " key '" + key + "'");
    }
  }
  validate(s);
  return s;
}

std::string render_scenario(const Scenario& s) {
  std::ostringstream os;
  os << "gravity = " << fmt(s.gravity) << '\n'
     << "cfl = " << fmt(s.cfl) << '\n'
     << "t_end = " << fmt(s.t_end) << '\n'
     << "output_interval = " << fmt(s.output_interval) << '\n'
     << "degree = " << s.degree << '\n'
     << "limiter = " << (s.limiter ? "true" : "false") << '\n'
     << "tvb_m = " << fmt(s.tvb_m) << '\n'
     << "dispatch_band = " << fmt(s.dispatch_band) << '\n'
     << "backflow_band = " << fmt(s.backflow_band) << '\n'
     << "output_dir = " << s.output_dir << '\n'
     << "\n[junction]\ncoupling = " << to_string(s.coupling) << '\n';
  const auto canal = [&](const CanalConfig& c, const char* name) {
    os << "\n[" << name << "]\n"
       << "length = " << fmt(c.length) << '\n'
       << "cells = " << c.cells << '\n'
       << "h = " << fmt(c.h) << '\n'
       << "q = " << fmt(c.q) << '\n';
    if (c.split)
      os << "split_x = " << fmt(c.split_x) << '\n'
         << "h2 = " << fmt(c.h2) << '\n'
         << "q2 = " << fmt(c.q2) << '\n';
  };
  canal(s.canal1, "canal1");
  canal(s.canal2, "canal2");
  return os.str();
}

std::string RunReport::to_json() const {
  nlohmann::json j;
  j["status"] = status;
  j["message"] = message;
  j["t_final"] = t_final;
  j["steps"] = steps;
  j["snapshots"] = nlohmann::json::array();
  for (const auto& s : snapshots)
    j["snapshots"].push_back({{"t", s.t}, {"files", s.files}});
  j["junction_cases"] = nlohmann::json::array();
  for (const auto& c : cases)
    j["junction_cases"].push_back({{"t", c.t}, {"case", to_string(c.tag)}});
  j["conservation"] = nlohmann::json::array();
  for (const auto& l : ledger)
    j["conservation"].push_back({{"t", l.t},
                                 {"volume", l.volume},
                                 {"boundary_integral", l.boundary_integral}});
  return j.dump(2);
}

int RunReport::exit_code() const {
  if (status == "completed") return 0;
  if (status == "dry") return 3;
  return 2;
}

RunReport run_scenario(const Scenario& s) {
  RunReport rep;
  std::string outdir = s.output_dir;
  if (const char* e = std::getenv("SWNET_OUTPUT_DIR"); e && *e) outdir = e;
  std::filesystem::create_directories(outdir);

  const CanalGrid g1{-s.canal1.length, 0.0, s.canal1.cells};
  const CanalGrid g2{0.0, s.canal2.length, s.canal2.cells};
  DGField f1 =
      project_initial(g1, s.degree, make_profile(s.canal1, g1.x_left));
  DGField f2 =
      project_initial(g2, s.degree, make_profile(s.canal2, g2.x_left));

  SimOptions so;
  so.gravity = s.gravity;
  so.cfl = s.cfl;
  so.coupling = s.coupling;
  so.dispatch_band = s.dispatch_band;
  so.backflow_band = s.backflow_band;
  so.limiter.enabled = s.limiter;
  so.limiter.tvb_m = s.tvb_m;
  NetworkSim sim(std::move(f1), std::move(f2), so);

  double boundary_integral = 0.0;
  int snap_idx = 0;
  const auto snapshot = [&]() {
    char tag[16];
    std::snprintf(tag, sizeof(tag), "%04d", snap_idx++);
    SnapshotEntry e;
    e.t = sim.time();
    for (int c = 1; c <= 2; ++c) {
      const std::string name =
          "snapshot_" + std::string(tag) + "_canal" + std::to_string(c) +
          ".csv";
      write_snapshot_csv(outdir + "/" + name,
                         c == 1 ? sim.canal1() : sim.canal2(), s.gravity);
      e.files.push_back(name);
    }
    rep.snapshots.push_back(e);
    rep.ledger.push_back({sim.time(), sim.total_volume(), boundary_integral});
  };

  const double interval =
      s.output_interval > 0.0
          ? s.output_interval
          : (s.t_end > 0.0 ? s.t_end / 10.0 : 1.0);
  snapshot();
  double next_snap = interval;
  try {
    while (sim.time() < s.t_end - 1e-13) {
      double dt = sim.stable_dt();
      dt = std::min({dt, s.t_end - sim.time(), next_snap - sim.time()});
      if (!(dt > 0.0)) break;
      const StepRecord recd = sim.step(dt);
      boundary_integral += dt * recd.net_inflow_rate();
      ++rep.steps;
      for (const auto& st : recd.stages) {
        if (!st.coupled) continue;
        if (rep.cases.empty() || rep.cases.back().tag != st.tag)
          rep.cases.push_back({sim.time(), st.tag});
      }
      if (sim.time() >= next_snap - 1e-12) {
        snapshot();
        next_snap += interval;
      }
    }
    if (rep.snapshots.back().t < s.t_end - 1e-12) snapshot();
  } catch (const DryStateError& e) {
    rep.status = "dry";
    rep.message = e.what();
  } catch (const NoSolutionError& e) {
    rep.status = "no_solution";
    rep.message = e.what();
  } catch (const UnsupportedRegimeError& e) {
    rep.status = "no_solution";
    rep.message = e.what();
  } catch (const VacuumError& e) {
    rep.status = "no_solution";
    rep.message = e.what();
  }
  if (rep.status != "completed") {
    // Diagnostic junction traces at the failure time.
    try {
      const State tl = sim.canal1().right_trace(sim.canal1().grid().cells - 1);
      const State tr = sim.canal2().left_trace(0);
      rep.message += " at t=" + fmt(sim.time()) + " with U_l=(" +
                     fmt(tl.h()) + "," + fmt(tl.q()) + ") U_r=(" +
                     fmt(tr.h()) + "," + fmt(tr.q()) + ")";
    } catch (const DryStateError&) {
    }
  }
  rep.t_final = sim.time();

  std::ofstream os(outdir + "/report.json");
  os << rep.to_json() << '\n';
  return rep;
}

void export_curves(const State& anchor, double g, std::ostream& os) {
  os << "curve_id,h,q\n";
  const double lo = anchor.h() / 50.0;
  const double hi = anchor.h() * 50.0;
  for (CurveId id :
       {CurveId::R1, CurveId::S1, CurveId::R2, CurveId::S2, CurveId::R1inv,
        CurveId::S1inv, CurveId::R2inv, CurveId::S2inv, CurveId::Cplus,
        CurveId::Cminus}) {
    for (const auto& p : sample_curve(id, anchor, lo, hi, 400, g))
      os << to_string(id) << ',' << fmt(p.h) << ',' << fmt(p.q) << '\n';
  }
}

void export_regions(Side side, const State& anchor, double g,
                    std::ostream& os) {
  os << "subregion,h,q\n";
  const double lo = anchor.h() / 100.0;
  const double hi = anchor.h() * 100.0;
  for (const auto& seg : region_boundary(side, anchor, lo, hi, 400, g))
    for (const auto& p : seg.points)
      os << seg.label << ',' << fmt(p.h) << ',' << fmt(p.q) << '\n';
}

void export_junction_diagram(const State& u_l, const State& u_r,
                             Coupling coupling, double g, std::ostream& os) {
  os << "label,h,q\n";
  const double lo = std::min(u_l.h(), u_r.h()) / 50.0;
  const double hi = std::max(u_l.h(), u_r.h()) * 50.0;
  for (int i = 0; i < 400; ++i) {
    const double h = lo * std::pow(hi / lo, i / 399.0);
    os << "phi_l," << fmt(h) << ',' << fmt(lax_left_q(u_l, h, g)) << '\n';
  }
  for (int i = 0; i < 400; ++i) {
    const double h = lo * std::pow(hi / lo, i / 399.0);
    os << "phi_r," << fmt(h) << ',' << fmt(lax_right_q(u_r, h, g)) << '\n';
  }
  JunctionOptions jo;
  jo.gravity = g;
  try {
    const JunctionSolution sol = solve_junction(u_l, u_r, coupling, jo);
    os << "case:" << to_string(sol.case_tag) << ','
       << fmt(sol.trace_in.h()) << ',' << fmt(sol.trace_in.q()) << '\n';
    os << "trace_in," << fmt(sol.trace_in.h()) << ','
       << fmt(sol.trace_in.q()) << '\n';
    os << "trace_out," << fmt(sol.trace_out.h()) << ','
       << fmt(sol.trace_out.q()) << '\n';
    for (const auto& c : sol.candidates) {
      os << "candidate_in," << fmt(c.in.h()) << ',' << fmt(c.in.q()) << '\n';
      os << "candidate_out," << fmt(c.out.h()) << ',' << fmt(c.out.q())
         << '\n';
    }
  } catch (const UnsupportedRegimeError&) {
    os << "unsupported_regime_pair,,\n";
  } catch (const NoSolutionError&) {
    os << "no_solution,,\n";
  }
}

}  // namespace swnet
