// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 the swnet developers

#ifndef SWNET_JUNCTION_HPP
#define SWNET_JUNCTION_HPP

#include <string>
#include <vector>

#include "swnet/half_riemann.hpp"

namespace swnet {

enum class Coupling { EqualHeight, EqualEnergy, EqualMomentum };

enum class JunctionCase {
  AA_Intersection,
  AA_CriticalLeft,
  AA_CriticalRight,
  BA_SubcriticalIntersection,
  BA_PassThrough,
  BA_CriticalRight,
  BB_PassThrough,
  Alt_EnergyPair,
  Alt_MomentumPair
};

const char* to_string(Coupling c);
const char* to_string(JunctionCase c);
Coupling coupling_from_string(const std::string& name);

/// One admissible pair of junction traces sharing a discharge.
struct TracePair {
  State in;   // trace on the incoming canal, member of N(u_l)
  State out;  // trace on the outgoing canal, member of P(u_r)
};

struct JunctionSolution {
  State trace_in;
  State trace_out;
  JunctionCase case_tag;
  // All admissible pairs found, ordered by |h_in - h_l|; for the alternative
  // couplings the selected pair is candidates.front().  The momentum
  // coupling additionally reports the stationary hydraulic-jump pair of a
  // supercritical inflow as a trailing candidate even when the downstream
  // state does not accept the jump image.
  std::vector<TracePair> candidates;
};

struct JunctionOptions {
  double gravity = kDefaultGravity;
  // Intersections with |F| inside [1, 1 + critical_band] still count as
  // subcritical; traces produced by the scheme hover at the band edge.
  double critical_band = kCriticalBand;
  // States with F in [-1 - backflow_band, -1) dispatch as fluvial; the case
  // analysis extends continuously below -1 and discrete traces overshoot
  // the critical curve while a backward bore forms.
  double backflow_band = kCriticalBand;
};

/// Junction traces for the equal-height coupling h_in = h_out.
/// Throws UnsupportedRegimeError for regime pairs outside the case analysis
/// and NoSolutionError when no admissible pair exists.
JunctionSolution solve_equal_height(const State& u_l, const State& u_r,
                                    const JunctionOptions& opts = {});

/// Equal specific energy coupling; depth ratio across the junction
/// h_out / h_in = (F_in^2 / 4) (1 + sqrt(1 + 8 / F_in^2)).
JunctionSolution solve_equal_energy(const State& u_l, const State& u_r,
                                    const JunctionOptions& opts = {});

/// Equal momentum flux coupling; depth ratio
/// h_out / h_in = (-1 + sqrt(1 + 8 F_in^2)) / 2.
JunctionSolution solve_equal_momentum(const State& u_l, const State& u_r,
                                      const JunctionOptions& opts = {});

JunctionSolution solve_junction(const State& u_l, const State& u_r,
                                Coupling coupling,
                                const JunctionOptions& opts = {});

struct VerifyReport {
  double mass_residual = 0.0;
  double coupling_residual = 0.0;
  bool in_member = false;
  bool out_member = false;

  bool ok(double tol = 1e-9) const {
    return mass_residual == 0.0 && coupling_residual <= tol && in_member &&
           out_member;
  }
};

/// Re-checks a solution against the coupling condition and both attainable
/// sets. coupling_residual is relative.
VerifyReport verify(const JunctionSolution& sol, const State& u_l,
                    const State& u_r, Coupling coupling,
                    double g = kDefaultGravity);

}  // namespace swnet

#endif  // SWNET_JUNCTION_HPP
