// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 the swnet developers

#include "swnet/junction.hpp"

#include <algorithm>
#include <cmath>

#include "roots.hpp"

namespace swnet {

namespace {

double cminus_q(double h, double g) { return -h * std::sqrt(g * h); }

double cplus_q(double h, double g) { return h * std::sqrt(g * h); }

// Depth ratio h_out / h_in of the nontrivial equal-energy pair, as a
// function of the squared incoming Froude number.
double ratio_energy(double f2) {
  if (f2 < 1e-16) return 0.0;
  return 0.25 * f2 * (1.0 + std::sqrt(1.0 + 8.0 / f2));
}

// Depth ratio of the nontrivial equal-momentum-flux pair.
double ratio_momentum(double f2) {
  return 0.5 * (-1.0 + std::sqrt(1.0 + 8.0 * f2));
}

JunctionSolution single_state(const State& u_b, JunctionCase tag) {
  JunctionSolution sol{u_b, u_b, tag, {{u_b, u_b}}};
  return sol;
}

JunctionSolution solve_aa(const State& u_l, const State& u_r, double g,
                          double band) {
  const auto diff = [&](double h) {
    return lax_left_v(u_l, h, g) - lax_right_v(u_r, h, g);
  };
  double hi = std::max(u_l.h(), u_r.h());
  while (diff(hi) > 0.0) hi *= 2.0;
  const double h_m = detail::find_root(diff, 1e-12, hi);
  if (h_m <= kDryDepth)
    throw NoSolutionError("junction: curve intersection is dry");
  const State u_m(h_m, lax_left_q(u_l, h_m, g));
  const double f_m = froude(u_m, g);
  if (std::abs(f_m) <= 1.0 + band)
    return single_state(u_m, JunctionCase::AA_Intersection);
  if (f_m < -1.0) {
    const CriticalPoints cp_r = critical_points_right(u_r, g);
    const double h_b = *cp_r.cminus_crossing();
    return single_state(State(h_b, cminus_q(h_b, g)),
                        JunctionCase::AA_CriticalRight);
  }
  const CriticalPoints cp_l = critical_points_left(u_l, g);
  const double h_b = *cp_l.cplus_crossing();
  return single_state(State(h_b, cplus_q(h_b, g)),
                      JunctionCase::AA_CriticalLeft);
}

JunctionSolution solve_ba(const State& u_l, const State& u_r, double g,
                          double band) {
  const CriticalPoints cp_l = critical_points_left(u_l, g);
  const double h_star = *cp_l.h_star;
  const State u_star(h_star, u_l.q());
  const auto psi = [&](double h) {
    return curve_v(CurveId::S1, u_star, h, g) - lax_right_v(u_r, h, g);
  };
  if (psi(h_star) >= 0.0) {
    const double h_b = detail::find_root_growing(psi, h_star);
    const State u_b(h_b, curve_q(CurveId::S1, u_star, h_b, g));
    if (froude(u_b, g) >= -1.0 - band)
      return single_state(u_b, JunctionCase::BA_SubcriticalIntersection);
  }
  if (attainable_outgoing(u_r, u_l, g).admissible)
    return single_state(u_l, JunctionCase::BA_PassThrough);
  const CriticalPoints cp_r = critical_points_right(u_r, g);
  const double h_c = *cp_r.cminus_crossing();
  const State u_b(h_c, cminus_q(h_c, g));
  if (attainable_incoming(u_l, u_b, g).admissible)
    return single_state(u_b, JunctionCase::BA_CriticalRight);
  throw NoSolutionError("junction: no admissible trace for B-A pair");
}

JunctionSolution solve_bb(const State& u_l, const State& u_r, double g) {
  if (attainable_outgoing(u_r, u_l, g).admissible)
    return single_state(u_l, JunctionCase::BB_PassThrough);
  throw NoSolutionError("junction: torrential state not accepted downstream");
}

enum class LeftCase { A, B, Unsupported };
enum class RightCase { A, B, Unsupported };

LeftCase left_case(const State& u_l, const JunctionOptions& o) {
  const double f = froude(u_l, o.gravity);
  if (f > 1.0 + o.critical_band) return LeftCase::B;
  if (f < -1.0 - o.backflow_band) return LeftCase::Unsupported;
  return LeftCase::A;
}

RightCase right_case(const State& u_r, const JunctionOptions& o) {
  const double f = froude(u_r, o.gravity);
  if (f > 1.0 + o.critical_band) return RightCase::B;
  if (f < -1.0 - o.backflow_band) return RightCase::Unsupported;
  return RightCase::A;
}

double coupling_residual(const State& a, const State& b, Coupling c,
                         double g) {
  double x = 0.0;
  double y = 0.0;
  switch (c) {
    case Coupling::EqualHeight:
      x = a.h();
      y = b.h();
      break;
    case Coupling::EqualEnergy:
      x = specific_energy(a, g);
      y = specific_energy(b, g);
      break;
    case Coupling::EqualMomentum:
      x = flux(a, g).second;
      y = flux(b, g).second;
      break;
  }
  return std::abs(x - y) / std::max({1.0, std::abs(x), std::abs(y)});
}

using RatioFn = double (*)(double);

// Nontrivial pairs with the incoming trace on the forward Lax curve and the
// outgoing trace on the backward one, found by a sign-change scan.
void scan_lax_pairs(const State& u_l, const State& u_r, RatioFn ratio,
                    double a_lo, double a_hi, double g,
                    std::vector<TracePair>& out) {
  if (!(a_hi > a_lo)) return;
  const auto gap = [&](double h1) {
    const double q1 = lax_left_q(u_l, h1, g);
    const double f2 = q1 * q1 / (g * h1 * h1 * h1);
    const double h2 = ratio(f2) * h1;
    if (h2 <= kDryDepth) return std::nan("");
    return lax_right_q(u_r, h2, g) - q1;
  };
  const int n = 512;
  double prev_h = a_lo;
  double prev_g = gap(prev_h);
  for (int i = 1; i <= n; ++i) {
    const double h = a_lo + (a_hi - a_lo) * i / n;
    const double gv = gap(h);
    if (std::isfinite(prev_g) && std::isfinite(gv) &&
        (prev_g <= 0.0) != (gv <= 0.0)) {
      const double h1 = detail::find_root(gap, prev_h, h);
      const double q1 = lax_left_q(u_l, h1, g);
      const double f2 = q1 * q1 / (g * h1 * h1 * h1);
      const double h2 = ratio(f2) * h1;
      if (h1 > kDryDepth && h2 > kDryDepth)
        out.push_back({State(h1, q1), State(h2, q1)});
    }
    prev_h = h;
    prev_g = gv;
  }
}

// Pairs that leave one side untouched: the other trace is the jump image.
void add_pass_through_pairs(const State& u_l, const State& u_r, RatioFn ratio,
                            double g, std::vector<TracePair>& out) {
  const double f_l = froude(u_l, g);
  const double h2 = ratio(f_l * f_l) * u_l.h();
  if (h2 > kDryDepth) out.push_back({u_l, State(h2, u_l.q())});

  // Incoming trace carrying q_r whose jump image is exactly u_r.
  const auto fit = [&](double h1) {
    const double f2 = u_r.q() * u_r.q() / (g * h1 * h1 * h1);
    return ratio(f2) * h1 - u_r.h();
  };
  const double lo = 1e-3 * u_r.h();
  const double hi = 1e3 * u_r.h();
  const int n = 512;
  double prev_h = lo;
  double prev_f = fit(prev_h);
  for (int i = 1; i <= n; ++i) {
    const double h = lo * std::pow(hi / lo, static_cast<double>(i) / n);
    const double fv = fit(h);
    if (std::isfinite(prev_f) && std::isfinite(fv) &&
        (prev_f <= 0.0) != (fv <= 0.0)) {
      const double h1 = detail::find_root(fit, prev_h, h);
      if (h1 > kDryDepth) out.push_back({State(h1, u_r.q()), u_r});
    }
    prev_h = h;
    prev_f = fv;
  }
}

JunctionSolution solve_alt(const State& u_l, const State& u_r, RatioFn ratio,
                           Coupling coupling, JunctionCase alt_tag,
                           const JunctionOptions& opts) {
  const double g = opts.gravity;
  const LeftCase lc = left_case(u_l, opts);
  const RightCase rc = right_case(u_r, opts);
  if (lc == LeftCase::Unsupported || rc == RightCase::Unsupported ||
      (lc == LeftCase::A && rc == RightCase::B))
    throw UnsupportedRegimeError("junction: unsupported regime pair");

  // Arc of incoming traces on the forward Lax curve.
  const CriticalPoints cp_l = critical_points_left(u_l, g);
  double a_lo = 0.0;
  double a_hi = 0.0;
  if (cp_l.cminus_crossing()) {
    a_hi = *cp_l.cminus_crossing();
    a_lo = (lc == LeftCase::B) ? *cp_l.h_star : *cp_l.cplus_crossing();
  }

  std::vector<TracePair> raw;
  scan_lax_pairs(u_l, u_r, ratio, a_lo, a_hi, g, raw);
  add_pass_through_pairs(u_l, u_r, ratio, g, raw);

  std::vector<TracePair> candidates;
  for (const auto& pair : raw) {
    if (coupling_residual(pair.in, pair.out, coupling, g) > 1e-9) continue;
    if (!attainable_incoming(u_l, pair.in, g).admissible) continue;
    if (!attainable_outgoing(u_r, pair.out, g).admissible) continue;
    const auto dup = [&](const TracePair& c) {
      return std::abs(c.in.h() - pair.in.h()) <=
                 1e-8 * std::max(1.0, pair.in.h()) &&
             std::abs(c.out.h() - pair.out.h()) <=
                 1e-8 * std::max(1.0, pair.out.h());
    };
    if (std::any_of(candidates.begin(), candidates.end(), dup)) continue;
    candidates.push_back(pair);
  }
  std::sort(candidates.begin(), candidates.end(),
            [&](const TracePair& a, const TracePair& b) {
              return std::abs(a.in.h() - u_l.h()) <
                     std::abs(b.in.h() - u_l.h());
            });

  // Stationary hydraulic jump at the junction: the momentum ratio maps a
  // supercritical inflow onto its conjugate depth.  Reported as a trailing
  // candidate even when the downstream state does not accept the jump
  // image, but never selected in that case.
  const auto append_jump_pair = [&](std::vector<TracePair>& list) {
    if (coupling != Coupling::EqualMomentum || lc != LeftCase::B) return;
    const double f_l = froude(u_l, g);
    const double h2 = ratio(f_l * f_l) * u_l.h();
    if (h2 <= kDryDepth) return;
    const TracePair jump{u_l, State(h2, u_l.q())};
    const auto dup = [&](const TracePair& c) {
      return std::abs(c.in.h() - jump.in.h()) <=
                 1e-8 * std::max(1.0, jump.in.h()) &&
             std::abs(c.out.h() - jump.out.h()) <=
                 1e-8 * std::max(1.0, jump.out.h());
    };
    if (!std::any_of(list.begin(), list.end(), dup)) list.push_back(jump);
  };

  // An equal-height solution shares one state across the junction and so
  // satisfies every coupling; it takes precedence when present.
  try {
    JunctionSolution eh = solve_equal_height(u_l, u_r, opts);
    const auto dup = [&](const TracePair& c) {
      return std::abs(c.in.h() - eh.trace_in.h()) <=
                 1e-8 * std::max(1.0, eh.trace_in.h()) &&
             std::abs(c.out.h() - eh.trace_out.h()) <=
                 1e-8 * std::max(1.0, eh.trace_out.h());
    };
    candidates.erase(
        std::remove_if(candidates.begin(), candidates.end(), dup),
        candidates.end());
    candidates.insert(candidates.begin(), {eh.trace_in, eh.trace_out});
    append_jump_pair(candidates);
    eh.candidates = std::move(candidates);
    return eh;
  } catch (const NoSolutionError&) {
  }

  if (candidates.empty())
    throw NoSolutionError("junction: no admissible coupling pair");
  JunctionSolution sol{candidates.front().in, candidates.front().out, alt_tag,
                       std::move(candidates)};
  append_jump_pair(sol.candidates);
  return sol;
}

}  // namespace

const char* to_string(Coupling c) {
  switch (c) {
    case Coupling::EqualHeight: return "equal_height";
    case Coupling::EqualEnergy: return "energy";
    case Coupling::EqualMomentum: return "momentum";
  }
  return "?";
}

const char* to_string(JunctionCase c) {
  switch (c) {
    case JunctionCase::AA_Intersection: return "AA_Intersection";
    case JunctionCase::AA_CriticalLeft: return "AA_CriticalLeft";
    case JunctionCase::AA_CriticalRight: return "AA_CriticalRight";
    case JunctionCase::BA_SubcriticalIntersection:
      return "BA_SubcriticalIntersection";
    case JunctionCase::BA_PassThrough: return "BA_PassThrough";
    case JunctionCase::BA_CriticalRight: return "BA_CriticalRight";
    case JunctionCase::BB_PassThrough: return "BB_PassThrough";
    case JunctionCase::Alt_EnergyPair: return "Alt_EnergyPair";
    case JunctionCase::Alt_MomentumPair: return "Alt_MomentumPair";
  }
  return "?";
}

Coupling coupling_from_string(const std::string& name) {
  if (name == "equal_height") return Coupling::EqualHeight;
  if (name == "energy") return Coupling::EqualEnergy;
  if (name == "momentum") return Coupling::EqualMomentum;
  throw DomainViolation("unknown coupling: " + name);
}

JunctionSolution solve_equal_height(const State& u_l, const State& u_r,
                                    const JunctionOptions& opts) {
  const double g = opts.gravity;
  const LeftCase lc = left_case(u_l, opts);
  const RightCase rc = right_case(u_r, opts);
  if (lc == LeftCase::A && rc == RightCase::A)
    return solve_aa(u_l, u_r, g, opts.critical_band);
  if (lc == LeftCase::B && rc == RightCase::A)
    return solve_ba(u_l, u_r, g, opts.critical_band);
  if (lc == LeftCase::B && rc == RightCase::B) return solve_bb(u_l, u_r, g);
  throw UnsupportedRegimeError("junction: unsupported regime pair");
}

JunctionSolution solve_equal_energy(const State& u_l, const State& u_r,
                                    const JunctionOptions& opts) {
  return solve_alt(u_l, u_r, &ratio_energy, Coupling::EqualEnergy,
                   JunctionCase::Alt_EnergyPair, opts);
}

JunctionSolution solve_equal_momentum(const State& u_l, const State& u_r,
                                      const JunctionOptions& opts) {
  return solve_alt(u_l, u_r, &ratio_momentum, Coupling::EqualMomentum,
                   JunctionCase::Alt_MomentumPair, opts);
}

JunctionSolution solve_junction(const State& u_l, const State& u_r,
                                Coupling coupling,
                                const JunctionOptions& opts) {
  switch (coupling) {
    case Coupling::EqualHeight: return solve_equal_height(u_l, u_r, opts);
    case Coupling::EqualEnergy: return solve_equal_energy(u_l, u_r, opts);
    case Coupling::EqualMomentum: return solve_equal_momentum(u_l, u_r, opts);
  }
  throw DomainViolation("solve_junction: bad coupling");
}

VerifyReport verify(const JunctionSolution& sol, const State& u_l,
                    const State& u_r, Coupling coupling, double g) {
  VerifyReport rep;
  rep.mass_residual = std::abs(sol.trace_in.q() - sol.trace_out.q());
  rep.coupling_residual =
      coupling_residual(sol.trace_in, sol.trace_out, coupling, g);
  rep.in_member = attainable_incoming(u_l, sol.trace_in, g).admissible;
  rep.out_member = attainable_outgoing(u_r, sol.trace_out, g).admissible;
  return rep;
}

}  // namespace swnet
