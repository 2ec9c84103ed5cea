// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 the swnet developers

#include "swnet.h"

#include <cstring>
#include <sstream>
#include <string>

#include "swnet/scenario.hpp"

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void copy_to(char* buf, size_t buflen, const char* s) {
  if (!buf || buflen == 0) return;
  std::strncpy(buf, s, buflen - 1);
  buf[buflen - 1] = '\0';
}

template <class Fn>
swnet_status guard(Fn&& fn) {
  try {
    return fn();
  } catch (const swnet::DryStateError& e) {
    g_last_error = e.what();
    return SWNET_ERR_DRY;
  } catch (const swnet::VacuumError& e) {
    g_last_error = e.what();
    return SWNET_ERR_DRY;
  } catch (const swnet::NoSolutionError& e) {
    g_last_error = e.what();
    return SWNET_ERR_NO_SOLUTION;
  } catch (const swnet::UnsupportedRegimeError& e) {
    g_last_error = e.what();
    return SWNET_ERR_NO_SOLUTION;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SWNET_ERR_CONFIG;
  }
}

}  // namespace

struct swnet_scenario {
  swnet::Scenario s;
};

extern "C" {

const char* swnet_last_error(void) { return g_last_error.c_str(); }

void swnet_string_free(char* s) { delete[] s; }

swnet_status swnet_froude(double h, double q, double g, double* out) {
  return guard([&] {
    *out = swnet::froude(swnet::State(h, q), g);
    return SWNET_OK;
  });
}

swnet_status swnet_classify(double h, double q, double g, char* buf,
                            size_t buflen) {
  return guard([&] {
    copy_to(buf, buflen, to_string(swnet::classify(swnet::State(h, q), g)));
    return SWNET_OK;
  });
}

swnet_status swnet_riemann_middle(double hl, double ql, double hr, double qr,
                                  double g, double* hm, double* qm) {
  return guard([&] {
    const swnet::WaveFan fan =
        swnet::solve_riemann(swnet::State(hl, ql), swnet::State(hr, qr), g);
    *hm = fan.middle.h();
    *qm = fan.middle.q();
    return SWNET_OK;
  });
}

swnet_status swnet_solve_junction(double hl, double ql, double hr, double qr,
                                  const char* coupling, double g,
                                  double* h_in, double* q_in, double* h_out,
                                  double* q_out, char* case_tag,
                                  size_t taglen) {
  return guard([&] {
    swnet::JunctionOptions jo;
    jo.gravity = g;
    const swnet::JunctionSolution sol = swnet::solve_junction(
        swnet::State(hl, ql), swnet::State(hr, qr),
        swnet::coupling_from_string(coupling ? coupling : ""), jo);
    *h_in = sol.trace_in.h();
    *q_in = sol.trace_in.q();
    *h_out = sol.trace_out.h();
    *q_out = sol.trace_out.q();
    copy_to(case_tag, taglen, to_string(sol.case_tag));
    return SWNET_OK;
  });
}

swnet_status swnet_curves_csv(double h0, double q0, double g, char** out) {
  return guard([&] {
    std::ostringstream os;
    swnet::export_curves(swnet::State(h0, q0), g, os);
    *out = dup_string(os.str());
    return SWNET_OK;
  });
}

swnet_status swnet_regions_csv(const char* side, double h, double q, double g,
                               char** out) {
  return guard([&] {
    const std::string s = side ? side : "";
    if (s != "in" && s != "out")
      throw swnet::DomainViolation("side must be 'in' or 'out'");
    std::ostringstream os;
    swnet::export_regions(
        s == "in" ? swnet::Side::Incoming : swnet::Side::Outgoing,
        swnet::State(h, q), g, os);
    *out = dup_string(os.str());
    return SWNET_OK;
  });
}

swnet_status swnet_junction_csv(double hl, double ql, double hr, double qr,
                                const char* coupling, double g, char** out) {
  return guard([&] {
    std::ostringstream os;
    swnet::export_junction_diagram(
        swnet::State(hl, ql), swnet::State(hr, qr),
        swnet::coupling_from_string(coupling ? coupling : ""), g, os);
    *out = dup_string(os.str());
    return SWNET_OK;
  });
}

swnet_status swnet_scenario_parse(const char* text, swnet_scenario** out) {
  return guard([&] {
    auto* s = new swnet_scenario{swnet::parse_scenario(text ? text : "")};
    *out = s;
    return SWNET_OK;
  });
}

swnet_status swnet_scenario_render(const swnet_scenario* s, char** out) {
  return guard([&] {
    *out = dup_string(swnet::render_scenario(s->s));
    return SWNET_OK;
  });
}

void swnet_scenario_free(swnet_scenario* s) { delete s; }

swnet_status swnet_scenario_run(const swnet_scenario* s, char** report_json) {
  return guard([&] {
    const swnet::RunReport rep = swnet::run_scenario(s->s);
    if (report_json) *report_json = dup_string(rep.to_json());
    if (rep.exit_code() != 0) g_last_error = rep.message;
    return static_cast<swnet_status>(rep.exit_code());
  });
}

}  // extern "C"
