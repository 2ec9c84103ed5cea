// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 the swnet developers

#include "swnet/wave_curves.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "roots.hpp"

namespace swnet {

namespace {

// Velocity drop across a shock connecting depths h0 and h (both wet).
double shock_term(double h0, double h, double g) {
  return (h - h0) * std::sqrt(g * (h + h0) / (2.0 * h * h0));
}

void require(bool ok, const char* msg) {
  if (!ok) throw DomainViolation(msg);
}

// Domain checks allow a sliver past the anchor so that curve evaluation at
// the anchor itself is always legal.
bool leq(double a, double b) { return a <= b * (1.0 + 1e-12) + 1e-300; }

}  // namespace

const char* to_string(CurveId id) {
  switch (id) {
    case CurveId::R1: return "R1";
    case CurveId::S1: return "S1";
    case CurveId::R2: return "R2";
    case CurveId::S2: return "S2";
    case CurveId::R1inv: return "R1inv";
    case CurveId::S1inv: return "S1inv";
    case CurveId::R2inv: return "R2inv";
    case CurveId::S2inv: return "S2inv";
    case CurveId::Cplus: return "C+";
    case CurveId::Cminus: return "C-";
  }
  return "?";
}

double curve_v(CurveId id, const State& anchor, double h, double g) {
  require(h > 0.0, "curve_v: h must be positive");
  const double h0 = anchor.h();
  const double v0 = anchor.v();
  switch (id) {
    case CurveId::R1:
      require(leq(h, h0), "R1 requires h <= h0");
      return v0 - 2.0 * (std::sqrt(g * h) - std::sqrt(g * h0));
    case CurveId::S1:
      require(leq(h0, h), "S1 requires h >= h0");
      return v0 - shock_term(h0, h, g);
    case CurveId::R2:
      require(leq(h0, h), "R2 requires h >= h0");
      return v0 - 2.0 * (std::sqrt(g * h0) - std::sqrt(g * h));
    case CurveId::S2:
      require(leq(h, h0), "S2 requires h <= h0");
      return v0 + shock_term(h0, h, g);  // -(h0 - h) sqrt(...) = +(h - h0) ...
    case CurveId::R1inv:
      require(leq(h0, h), "R1inv requires h >= h0");
      return v0 + 2.0 * (std::sqrt(g * h0) - std::sqrt(g * h));
    case CurveId::S1inv:
      require(leq(h, h0), "S1inv requires h <= h0");
      return v0 - shock_term(h0, h, g);  // +(h0 - h) sqrt(...)
    case CurveId::R2inv:
      require(leq(h, h0), "R2inv requires h <= h0");
      return v0 + 2.0 * (std::sqrt(g * h) - std::sqrt(g * h0));
    case CurveId::S2inv:
      require(leq(h0, h), "S2inv requires h >= h0");
      return v0 + shock_term(h0, h, g);
    case CurveId::Cplus:
      return std::sqrt(g * h);
    case CurveId::Cminus:
      return -std::sqrt(g * h);
  }
  throw DomainViolation("curve_v: unknown curve");
}

double curve_q(CurveId id, const State& anchor, double h, double g) {
  return h * curve_v(id, anchor, h, g);
}

double lax_left_v(const State& u_l, double h, double g) {
  if (h <= u_l.h())
    return u_l.v() - 2.0 * (std::sqrt(g * h) - std::sqrt(g * u_l.h()));
  return u_l.v() - shock_term(u_l.h(), h, g);
}

double lax_left_q(const State& u_l, double h, double g) {
  return h * lax_left_v(u_l, h, g);
}

double lax_right_v(const State& u_r, double h, double g) {
  if (h <= u_r.h())
    return u_r.v() + 2.0 * (std::sqrt(g * h) - std::sqrt(g * u_r.h()));
  return u_r.v() + shock_term(u_r.h(), h, g);
}

double lax_right_q(const State& u_r, double h, double g) {
  return h * lax_right_v(u_r, h, g);
}

CriticalPoints critical_points_left(const State& u_l, double g) {
  CriticalPoints cp;
  const double h_l = u_l.h();
  const double v_l = u_l.v();
  const double w = v_l + 2.0 * std::sqrt(g * h_l);
  if (w <= 0.0) return cp;  // curve stays below C-, no crossings

  const double f_l = froude(u_l, g);
  // Decreasing search functions whose root sits at or above h_l; roundoff
  // can make them start a few ulp negative at an exactly critical anchor,
  // in which case the crossing is the anchor itself.
  const auto crossing = [&](auto&& fn) {
    return fn(h_l) <= 0.0 ? h_l : detail::find_root_growing(fn, h_l);
  };
  if (f_l <= 1.0) {
    cp.h_plus_R = w * w / (9.0 * g);
    cp.h_extremum = cp.h_plus_R;
    if (f_l <= -1.0) {
      cp.h_minus_R = w * w / g;
    } else {
      // Shock branch crossing of C-: S1(h) + sqrt(g h) = 0, h >= h_l.
      cp.h_minus_S = crossing([&](double h) {
        return v_l - shock_term(h_l, h, g) + std::sqrt(g * h);
      });
    }
  } else {
    cp.h_plus_S = crossing([&](double h) {
      return v_l - shock_term(h_l, h, g) - std::sqrt(g * h);
    });
    cp.h_minus_S = crossing([&](double h) {
      return v_l - shock_term(h_l, h, g) + std::sqrt(g * h);
    });
    // Maximum of h * lax_left_v on the shock branch.
    cp.h_extremum = crossing([&](double h) {
      const double s = std::sqrt(g / (2.0 * h_l));
      return v_l - s * (4.0 * h * h + h_l * h - h_l * h_l) /
                       (2.0 * std::sqrt(h * (h + h_l)));
    });
  }
  if (f_l >= 1.0)
    cp.h_star = 0.5 * h_l * (-1.0 + std::sqrt(1.0 + 8.0 * f_l * f_l));
  return cp;
}

CriticalPoints critical_points_right(const State& u_r, double g) {
  // The system is invariant under (x, v) -> (-x, -v); the right-side
  // geometry is the mirrored left-side geometry with C+ and C- swapped.
  const CriticalPoints m =
      critical_points_left(State(u_r.h(), -u_r.q()), g);
  CriticalPoints cp;
  cp.h_minus_R = m.h_plus_R;
  cp.h_plus_R = m.h_minus_R;
  cp.h_plus_S = m.h_minus_S;
  cp.h_minus_S = m.h_plus_S;
  cp.h_extremum = m.h_extremum;
  cp.h_star = m.h_star;
  return cp;
}

double WaveFan::max_speed() const {
  double s = -std::numeric_limits<double>::infinity();
  if (wave1.type != Wave::Type::Null) s = std::max(s, wave1.max_speed());
  if (wave2.type != Wave::Type::Null) s = std::max(s, wave2.max_speed());
  return s;
}

double WaveFan::min_speed() const {
  double s = std::numeric_limits<double>::infinity();
  if (wave1.type != Wave::Type::Null) s = std::min(s, wave1.min_speed());
  if (wave2.type != Wave::Type::Null) s = std::min(s, wave2.min_speed());
  return s;
}

WaveFan solve_riemann(const State& u_l, const State& u_r, double g) {
  const double w_l = u_l.v() + 2.0 * std::sqrt(g * u_l.h());
  const double w_r = u_r.v() - 2.0 * std::sqrt(g * u_r.h());
  if (!(w_l - w_r > 0.0))
    throw VacuumError("solve_riemann: dry middle state");

  const auto diff = [&](double h) {
    return lax_left_v(u_l, h, g) - lax_right_v(u_r, h, g);
  };
  // diff is strictly decreasing from w_l - w_r > 0 at h -> 0.
  double lo = 1e-12;
  double hi = std::max(u_l.h(), u_r.h());
  while (diff(hi) > 0.0) hi *= 2.0;
  const double h_m = detail::find_root(diff, lo, hi);
  if (h_m <= 1e-9)
    throw VacuumError("solve_riemann: middle state below dry threshold");
  const double q_m = lax_left_q(u_l, h_m, g);
  const State u_m(h_m, q_m);

  WaveFan fan{u_l, u_m, u_r, {}, {}};
  const double tol1 = 1e-12 * std::max(1.0, u_l.h());
  if (std::abs(h_m - u_l.h()) <= tol1) {
    fan.wave1.type = Wave::Type::Null;
  } else if (h_m < u_l.h()) {
    fan.wave1.type = Wave::Type::Rarefaction;
    fan.wave1.head_speed = eigenvalues(u_l, g).first;
    fan.wave1.tail_speed = eigenvalues(u_m, g).first;
  } else {
    fan.wave1.type = Wave::Type::Shock;
    fan.wave1.speed = (q_m - u_l.q()) / (h_m - u_l.h());
  }
  const double tol2 = 1e-12 * std::max(1.0, u_r.h());
  if (std::abs(h_m - u_r.h()) <= tol2) {
    fan.wave2.type = Wave::Type::Null;
  } else if (h_m < u_r.h()) {
    fan.wave2.type = Wave::Type::Rarefaction;
    fan.wave2.head_speed = eigenvalues(u_m, g).second;
    fan.wave2.tail_speed = eigenvalues(u_r, g).second;
  } else {
    fan.wave2.type = Wave::Type::Shock;
    fan.wave2.speed = (u_r.q() - q_m) / (u_r.h() - h_m);
  }
  return fan;
}

State sample_fan(const WaveFan& fan, double xi, double g) {
  if (fan.wave1.type != Wave::Type::Null) {
    if (xi < fan.wave1.min_speed()) return fan.left;
    if (fan.wave1.type == Wave::Type::Rarefaction &&
        xi < fan.wave1.tail_speed) {
      const double w = fan.left.v() + 2.0 * std::sqrt(g * fan.left.h());
      const double c = (w - xi) / 3.0;  // sqrt(g h) inside the fan
      const double h = c * c / g;
      return State(h, h * (xi + c));
    }
  } else if (fan.wave2.type == Wave::Type::Null) {
    return fan.middle;
  }
  if (fan.wave2.type != Wave::Type::Null) {
    if (xi > fan.wave2.max_speed()) return fan.right;
    if (fan.wave2.type == Wave::Type::Rarefaction &&
        xi > fan.wave2.head_speed) {
      const double w = fan.right.v() - 2.0 * std::sqrt(g * fan.right.h());
      const double c = (xi - w) / 3.0;
      const double h = c * c / g;
      return State(h, h * (xi - c));
    }
  }
  return fan.middle;
}

std::vector<CurveSample> sample_curve(CurveId id, const State& anchor,
                                      double h_lo, double h_hi, int n,
                                      double g) {
  double lo = h_lo;
  double hi = h_hi;
  switch (id) {
    case CurveId::R1:
    case CurveId::S2:
    case CurveId::S1inv:
    case CurveId::R2inv:
      hi = std::min(hi, anchor.h());
      break;
    case CurveId::S1:
    case CurveId::R2:
    case CurveId::R1inv:
    case CurveId::S2inv:
      lo = std::max(lo, anchor.h());
      break;
    default:
      break;
  }
  std::vector<CurveSample> out;
  if (!(hi > lo) || n < 2) return out;
  out.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double h = lo + (hi - lo) * i / (n - 1);
    out.push_back({h, curve_q(id, anchor, h, g)});
  }
  return out;
}

}  // namespace swnet
