// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 the swnet developers

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "swnet.h"

namespace {

int fail(swnet_status st) {
  std::cerr << "error: " << swnet_last_error() << '\n';
  return static_cast<int>(st);
}

int print_and_free(char* s) {
  std::cout << s;
  swnet_string_free(s);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"shallow-water canal network toolkit"};
  app.require_subcommand(1);

  std::string scenario_path;
  auto* sim = app.add_subcommand("simulate", "run a scenario file");
  sim->add_option("scenario-file", scenario_path, "scenario file")
      ->required();

  double h0 = 1.0, q0 = 0.0, g = 9.81;
  auto* curves = app.add_subcommand("curves", "wave curve CSV for an anchor");
  curves->add_option("--h0", h0, "anchor depth")->required();
  curves->add_option("--q0", q0, "anchor discharge")->required();
  curves->add_option("--g", g, "gravity");

  std::string side = "in";
  double rh = 1.0, rq = 0.0, rg = 9.81;
  auto* regions =
      app.add_subcommand("regions", "attainable-set boundary CSV");
  regions->set_help_flag("--help", "print help");  // frees --h
  regions->add_option("--side", side, "in or out")
      ->required()
      ->check(CLI::IsMember({"in", "out"}));
  regions->add_option("--h", rh, "anchor depth")->required();
  regions->add_option("--q", rq, "anchor discharge")->required();
  regions->add_option("--g", rg, "gravity");

  double hl = 1.0, ql = 0.0, hr = 1.0, qr = 0.0, jg = 9.81;
  std::string coupling = "equal_height";
  auto* junction =
      app.add_subcommand("junction", "junction diagram CSV for a state pair");
  junction->add_option("--hl", hl, "incoming depth")->required();
  junction->add_option("--ql", ql, "incoming discharge")->required();
  junction->add_option("--hr", hr, "outgoing depth")->required();
  junction->add_option("--qr", qr, "outgoing discharge")->required();
  junction->add_option("--coupling", coupling, "coupling condition")
      ->check(CLI::IsMember({"equal_height", "energy", "momentum"}));
  junction->add_option("--g", jg, "gravity");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 4;
  }

  if (sim->parsed()) {
    std::ifstream in(scenario_path);
    if (!in) {
      std::cerr << "error: cannot read " << scenario_path << '\n';
      return 4;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    swnet_scenario* sc = nullptr;
    swnet_status st = swnet_scenario_parse(buf.str().c_str(), &sc);
    if (st != SWNET_OK) return fail(st);
    char* report = nullptr;
    st = swnet_scenario_run(sc, &report);
    swnet_scenario_free(sc);
    if (report) {
      std::cout << report << '\n';
      swnet_string_free(report);
    }
    if (st != SWNET_OK) {
      std::cerr << "error: " << swnet_last_error() << '\n';
      return static_cast<int>(st);
    }
    return 0;
  }
  if (curves->parsed()) {
    char* csv = nullptr;
    const swnet_status st = swnet_curves_csv(h0, q0, g, &csv);
    if (st != SWNET_OK) return fail(st);
    return print_and_free(csv);
  }
  if (regions->parsed()) {
    char* csv = nullptr;
    const swnet_status st = swnet_regions_csv(side.c_str(), rh, rq, rg, &csv);
    if (st != SWNET_OK) return fail(st);
    return print_and_free(csv);
  }
  if (junction->parsed()) {
    char* csv = nullptr;
    const swnet_status st =
        swnet_junction_csv(hl, ql, hr, qr, coupling.c_str(), jg, &csv);
    if (st != SWNET_OK) return fail(st);
    return print_and_free(csv);
  }
  return 4;
}
