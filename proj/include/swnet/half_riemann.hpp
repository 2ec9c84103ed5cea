// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 the swnet developers

#ifndef SWNET_HALF_RIEMANN_HPP
#define SWNET_HALF_RIEMANN_HPP

#include <optional>
#include <string>
#include <vector>

#include "swnet/wave_curves.hpp"

namespace swnet {

enum class Side { Incoming, Outgoing };

enum class RegionCase { A, B, C };

enum class Subregion { I1, I2, I3, O1, O2, O3, WholeCase };

const char* to_string(Side s);
const char* to_string(RegionCase c);
const char* to_string(Subregion s);

/// Membership result for the attainable sets N(u_l) / P(u_r).
struct RegionVerdict {
  bool admissible = false;
  Side side = Side::Incoming;
  RegionCase region_case = RegionCase::A;
  std::optional<Subregion> subregion;
  // Middle state realizing an I3/O3 membership through a one-sided shock.
  std::optional<State> witness;
};

// Candidates within this relative q-distance of a bounding curve count as
// inside; junction solvers place traces exactly on curves by root-finding,
// so boundaries must be inclusive.
inline constexpr double kMembershipTol = 1e-9;

/// Right states reachable from u_l by waves of non-positive speed.
RegionVerdict attainable_incoming(const State& u_l, const State& u_hat,
                                  double g = kDefaultGravity,
                                  double tol = kMembershipTol);

/// Left states from which u_r is reachable by waves of non-negative speed.
RegionVerdict attainable_outgoing(const State& u_r, const State& u_tilde,
                                  double g = kDefaultGravity,
                                  double tol = kMembershipTol);

struct BoundaryPolyline {
  std::string label;
  std::vector<CurveSample> points;
};

/// Curve segments bounding each subregion, for figure export.  Points are
/// log-spaced in h over [h_min, h_max] clipped to each segment's domain.
std::vector<BoundaryPolyline> region_boundary(Side side, const State& anchor,
                                              double h_min, double h_max,
                                              int n = 400,
                                              double g = kDefaultGravity);

}  // namespace swnet

#endif  // SWNET_HALF_RIEMANN_HPP
