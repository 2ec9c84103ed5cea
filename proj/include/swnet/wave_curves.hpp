// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 the swnet developers

#ifndef SWNET_WAVE_CURVES_HPP
#define SWNET_WAVE_CURVES_HPP

#include <optional>
#include <vector>

#include "swnet/core.hpp"

namespace swnet {

/// Shock, rarefaction and regime-transition curves in the (h, v) plane,
/// each with a fixed h-domain relative to its anchor state.
enum class CurveId {
  R1,     // h <= h0
  S1,     // h >= h0
  R2,     // h >= h0
  S2,     // h <= h0
  R1inv,  // h >= h0
  S1inv,  // h <= h0
  R2inv,  // h <= h0
  S2inv,  // h >= h0
  Cplus,  // v = +sqrt(g h), anchor ignored
  Cminus  // v = -sqrt(g h), anchor ignored
};

const char* to_string(CurveId id);

/// Velocity on the requested curve at depth h.  Throws DomainViolation when
/// h lies on the wrong side of the anchor depth.
double curve_v(CurveId id, const State& anchor, double h,
               double g = kDefaultGravity);

/// Discharge form h * curve_v.
double curve_q(CurveId id, const State& anchor, double h,
               double g = kDefaultGravity);

/// Forward Lax curve of a left state (1-rarefaction for h <= h_l, 1-shock
/// for h > h_l), in velocity and discharge form.  Defined on all h > 0.
double lax_left_v(const State& u_l, double h, double g = kDefaultGravity);
double lax_left_q(const State& u_l, double h, double g = kDefaultGravity);

/// Backward Lax curve of a right state (inverse 2-rarefaction for
/// h <= h_r, inverse 2-shock for h > h_r).
double lax_right_v(const State& u_r, double h, double g = kDefaultGravity);
double lax_right_q(const State& u_r, double h, double g = kDefaultGravity);

/// Intersections of a Lax curve with the regime-transition curves, the
/// curve extremum and the conjugate depth.  Entries are present exactly
/// when the case analysis defines them.
struct CriticalPoints {
  // Crossing of the curve with C+ / C-, on the rarefaction or shock branch.
  std::optional<double> h_plus_R;
  std::optional<double> h_minus_R;
  std::optional<double> h_plus_S;
  std::optional<double> h_minus_S;
  // Extremum of the discharge-form Lax curve (maximum on the left,
  // minimum on the right).
  std::optional<double> h_extremum;
  // Conjugate depth sharing the anchor's discharge across a zero-speed
  // shock; present for supercritical anchors (|F| >= 1).
  std::optional<double> h_star;

  /// Unified crossing depths, whichever branch carries them.
  std::optional<double> cplus_crossing() const {
    return h_plus_R ? h_plus_R : h_plus_S;
  }
  std::optional<double> cminus_crossing() const {
    return h_minus_S ? h_minus_S : h_minus_R;
  }
};

CriticalPoints critical_points_left(const State& u_l,
                                    double g = kDefaultGravity);
CriticalPoints critical_points_right(const State& u_r,
                                     double g = kDefaultGravity);

struct Wave {
  enum class Type { Null, Shock, Rarefaction } type = Type::Null;
  double speed = 0.0;       // shock speed (Shock only)
  double head_speed = 0.0;  // rarefaction fan bounds (Rarefaction only)
  double tail_speed = 0.0;

  double min_speed() const {
    return type == Type::Shock ? speed : head_speed;
  }
  double max_speed() const {
    return type == Type::Shock ? speed : tail_speed;
  }
};

/// Exact two-wave Riemann solution in self-similar form.
struct WaveFan {
  State left;
  State middle;
  State right;
  Wave wave1;
  Wave wave2;

  double max_speed() const;
  double min_speed() const;
};

/// Exact Riemann solver.  Throws VacuumError when
/// v_l + 2 sqrt(g h_l) <= v_r - 2 sqrt(g h_r) (dry middle state).
WaveFan solve_riemann(const State& u_l, const State& u_r,
                      double g = kDefaultGravity);

/// Self-similar solution value at xi = x / t.
State sample_fan(const WaveFan& fan, double xi, double g = kDefaultGravity);

struct CurveSample {
  double h;
  double q;
};

/// Tabulated (h, q) polyline of one curve around its anchor, for export.
std::vector<CurveSample> sample_curve(CurveId id, const State& anchor,
                                      double h_lo, double h_hi, int n,
                                      double g = kDefaultGravity);

}  // namespace swnet

#endif  // SWNET_WAVE_CURVES_HPP
