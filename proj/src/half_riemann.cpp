// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 the swnet developers

#include "swnet/half_riemann.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "roots.hpp"

namespace swnet {

namespace {

double scale_of(double a, double b) {
  return std::max({1.0, std::abs(a), std::abs(b)});
}

// Depth where the forward Lax curve in discharge form crosses q = 0.
// Requires v_l + 2 sqrt(g h_l) > 0.
double lax_left_zero_depth(const State& u_l, double g) {
  if (u_l.v() <= 0.0) {
    const double w = u_l.v() + 2.0 * std::sqrt(g * u_l.h());
    return w * w / (4.0 * g);
  }
  return detail::find_root_growing(
      [&](double h) { return lax_left_q(u_l, h, g); }, u_l.h());
}

// Depth conjugate to u across a standing shock.
double conjugate_depth(const State& u, double g) {
  const double f = froude(u, g);
  return 0.5 * u.h() * (-1.0 + std::sqrt(1.0 + 8.0 * f * f));
}

// Lower border through a C- crossing at depth hc: the 2-shock curve from
// (hc, -hc sqrt(g hc)) below hc, the sonic curve q = -h sqrt(g h) above.
double lower_border_q(double hc, double h, double g) {
  if (h <= hc) {
    const State a(hc, -hc * std::sqrt(g * hc));
    return curve_q(CurveId::S2, a, h, g);
  }
  return -h * std::sqrt(g * h);
}

// Middle state on the forward Lax curve whose trailing 2-shock reaches
// (h_hat, q_hat) with non-positive speed, if one exists.
std::optional<State> i3_witness(const State& u_l, double h_cminus,
                                double h_hat, double q_hat, double g,
                                double tol) {
  if (!(h_hat < h_cminus)) return std::nullopt;
  const double h_zero = lax_left_zero_depth(u_l, g);
  const double lo = std::max(h_hat * (1.0 + 1e-12), h_zero);
  if (!(lo < h_cminus)) return std::nullopt;
  const auto f = [&](double hm) {
    const State a(hm, lax_left_q(u_l, hm, g));
    return curve_q(CurveId::S2, a, h_hat, g) - q_hat;
  };
  if (f(lo) < 0.0 || f(h_cminus) > 0.0) return std::nullopt;
  const double hm = detail::find_root(f, lo, h_cminus);
  const State um(hm, lax_left_q(u_l, hm, g));
  const double h_conj = conjugate_depth(um, g);
  if (h_hat <= h_conj + tol * std::max(1.0, h_conj)) return um;
  return std::nullopt;
}

// Outgoing cases follow the flow direction relative to the junction, so the
// mirror swaps the torrential case letters.
RegionCase mirror_case(RegionCase c) {
  if (c == RegionCase::B) return RegionCase::C;
  if (c == RegionCase::C) return RegionCase::B;
  return RegionCase::A;
}

Subregion mirror_label(Subregion s) {
  switch (s) {
    case Subregion::I1: return Subregion::O1;
    case Subregion::I2: return Subregion::O2;
    case Subregion::I3: return Subregion::O3;
    default: return s;
  }
}

std::vector<CurveSample> log_sweep(double lo, double hi, int n,
                                   const std::function<double(double)>& qf) {
  std::vector<CurveSample> pts;
  if (!(hi > lo) || n < 2) return pts;
  pts.reserve(static_cast<size_t>(n));
  const double a = std::log(lo);
  const double b = std::log(hi);
  for (int i = 0; i < n; ++i) {
    const double h = std::exp(a + (b - a) * i / (n - 1));
    pts.push_back({h, qf(h)});
  }
  return pts;
}

}  // namespace

const char* to_string(Side s) {
  return s == Side::Incoming ? "incoming" : "outgoing";
}

const char* to_string(RegionCase c) {
  switch (c) {
    case RegionCase::A: return "A";
    case RegionCase::B: return "B";
    case RegionCase::C: return "C";
  }
  return "?";
}

const char* to_string(Subregion s) {
  switch (s) {
    case Subregion::I1: return "I1";
    case Subregion::I2: return "I2";
    case Subregion::I3: return "I3";
    case Subregion::O1: return "O1";
    case Subregion::O2: return "O2";
    case Subregion::O3: return "O3";
    case Subregion::WholeCase: return "whole";
  }
  return "?";
}

RegionVerdict attainable_incoming(const State& u_l, const State& u_hat,
                                  double g, double tol) {
  RegionVerdict out;
  out.side = Side::Incoming;
  const double f_l = froude(u_l, g);
  const double h_hat = u_hat.h();
  const double q_hat = u_hat.q();

  if (f_l < -1.0) {
    out.region_case = RegionCase::C;
    const double w = u_l.v() + 2.0 * std::sqrt(g * u_l.h());
    if (w <= 0.0) {
      const double bound = -h_hat * std::sqrt(g * h_hat);
      if (q_hat <= bound + tol * scale_of(q_hat, bound)) {
        out.admissible = true;
        out.subregion = Subregion::WholeCase;
      }
      return out;
    }
    // With w > 0 the forward curve re-enters the subcritical band before
    // falling back below C-, so the region keeps the Case-A arc and
    // conjugate-wedge structure around that crossing.
  } else {
    out.region_case = f_l > 1.0 ? RegionCase::B : RegionCase::A;
  }

  const bool case_b = f_l > 1.0;
  const CriticalPoints cp = critical_points_left(u_l, g);
  const double h_cminus = *cp.cminus_crossing();

  if (case_b) {
    const double hs = scale_of(h_hat, u_l.h());
    const double qs = scale_of(q_hat, u_l.q());
    if (std::abs(h_hat - u_l.h()) <= tol * hs &&
        std::abs(q_hat - u_l.q()) <= tol * qs) {
      out.admissible = true;
      out.subregion = Subregion::WholeCase;
      return out;
    }
  }

  const double arc_lo = case_b ? *cp.h_star : *cp.h_plus_R;
  const double h_slack = tol * std::max(1.0, h_hat);
  if (h_hat >= arc_lo - h_slack && h_hat <= h_cminus + h_slack) {
    const double h_arc = std::clamp(h_hat, arc_lo, h_cminus);
    const double q_arc = lax_left_q(u_l, h_arc, g);
    if (std::abs(q_hat - q_arc) <= tol * scale_of(q_hat, q_arc)) {
      out.admissible = true;
      out.subregion = Subregion::I1;
      return out;
    }
  }

  const double bound = lower_border_q(h_cminus, h_hat, g);
  if (q_hat <= bound + tol * scale_of(q_hat, bound)) {
    out.admissible = true;
    out.subregion = Subregion::I2;
    return out;
  }

  if (auto um = i3_witness(u_l, h_cminus, h_hat, q_hat, g, tol)) {
    out.admissible = true;
    out.subregion = Subregion::I3;
    out.witness = um;
  }
  return out;
}

RegionVerdict attainable_outgoing(const State& u_r, const State& u_tilde,
                                  double g, double tol) {
  const RegionVerdict m =
      attainable_incoming(State(u_r.h(), -u_r.q()),
                          State(u_tilde.h(), -u_tilde.q()), g, tol);
  RegionVerdict out;
  out.admissible = m.admissible;
  out.side = Side::Outgoing;
  out.region_case = mirror_case(m.region_case);
  if (m.subregion) out.subregion = mirror_label(*m.subregion);
  if (m.witness) out.witness = State(m.witness->h(), -m.witness->q());
  return out;
}

std::vector<BoundaryPolyline> region_boundary(Side side, const State& anchor,
                                              double h_min, double h_max,
                                              int n, double g) {
  if (side == Side::Outgoing) {
    auto segs = region_boundary(Side::Incoming,
                                State(anchor.h(), -anchor.q()), h_min, h_max,
                                n, g);
    for (auto& seg : segs) {
      if (seg.label.size() > 1 && seg.label[0] == 'I') seg.label[0] = 'O';
      for (auto& p : seg.points) p.q = -p.q;
    }
    return segs;
  }

  std::vector<BoundaryPolyline> segs;
  const double f_l = froude(anchor, g);
  const auto cminus = [&](double h) { return -h * std::sqrt(g * h); };

  if (f_l < -1.0) {
    const double w = anchor.v() + 2.0 * std::sqrt(g * anchor.h());
    if (w <= 0.0) {
      segs.push_back({"boundary_cminus", log_sweep(h_min, h_max, n, cminus)});
      return segs;
    }
  }

  const bool case_b = f_l > 1.0;
  const CriticalPoints cp = critical_points_left(anchor, g);
  const double h_cminus = *cp.cminus_crossing();
  const double arc_lo = case_b ? *cp.h_star : *cp.h_plus_R;
  const auto lax_q = [&](double h) { return lax_left_q(anchor, h, g); };

  segs.push_back({"I1", log_sweep(std::max(arc_lo, h_min),
                                  std::min(h_cminus, h_max), n, lax_q)});
  if (case_b) {
    segs.push_back({"excluded_arc",
                    log_sweep(std::max(*cp.h_plus_S, h_min),
                              std::min(arc_lo, h_max), n, lax_q)});
    segs.push_back({"pass_through", {{anchor.h(), anchor.q()}}});
  }
  segs.push_back(
      {"I2_shock",
       log_sweep(h_min, std::min(h_cminus, h_max), n,
                 [&](double h) { return lower_border_q(h_cminus, h, g); })});
  segs.push_back(
      {"I2_cminus", log_sweep(std::max(h_cminus, h_min), h_max, n, cminus)});

  // Conjugate arc bounding the one-sided-shock subregion, parametrized by
  // the middle-state depth.
  const double h_zero = lax_left_zero_depth(anchor, g);
  if (h_cminus > h_zero) {
    std::vector<CurveSample> arc;
    arc.reserve(static_cast<size_t>(n));
    const double a = std::log(h_zero);
    const double b = std::log(h_cminus);
    for (int i = 0; i < n; ++i) {
      const double hm = std::exp(a + (b - a) * i / (n - 1));
      const State um(hm, lax_q(hm));
      arc.push_back({conjugate_depth(um, g), um.q()});
    }
    segs.push_back({"I3_conjugate", std::move(arc)});
  }
  return segs;
}

}  // namespace swnet
