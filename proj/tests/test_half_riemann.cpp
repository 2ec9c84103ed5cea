// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 the swnet developers

#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "swnet/half_riemann.hpp"

using namespace swnet;

namespace {
constexpr double kG = 9.81;
}

TEST_CASE("anchor is attainable from itself") {
  testing::Rng rng(31);
  for (RegionCase c : {RegionCase::A, RegionCase::B, RegionCase::C}) {
    for (int i = 0; i < 50; ++i) {
      const State u = testing::random_anchor(c, rng, kG);
      CHECK(attainable_incoming(u, u, kG).admissible);
      CHECK(attainable_outgoing(u, u, kG).admissible);
    }
  }
}

TEST_CASE("fluvial anchor verdict carries the I1 label at the anchor") {
  const State u(1.0, 0.5);
  const RegionVerdict v = attainable_incoming(u, u, kG);
  CHECK(v.admissible);
  CHECK(v.side == Side::Incoming);
  CHECK(v.region_case == RegionCase::A);
  REQUIRE(v.subregion.has_value());
  CHECK(*v.subregion == Subregion::I1);
}

TEST_CASE("figure-1 critical point is attainable from the inflow state") {
  const State u_l(0.25, 0.025);
  const State u_r(2.5, 0.25);
  const CriticalPoints cp = critical_points_right(u_r, kG);
  REQUIRE(cp.h_minus_R.has_value());
  const State cand(*cp.h_minus_R, lax_right_q(u_r, *cp.h_minus_R, kG));
  CHECK(attainable_incoming(u_l, cand, kG).admissible);
  CHECK(testing::oracle_incoming(u_l, cand, kG));
  // The same point is on the outgoing Lax curve, hence in P(u_r).
  CHECK(attainable_outgoing(u_r, cand, kG).admissible);
}

TEST_CASE("torrential inflow passes through the outgoing region") {
  const State u_r(1.8, 4.0);
  const State u_l(0.2, 3.0);
  CHECK(attainable_outgoing(u_r, u_l, kG).admissible);
  CHECK(testing::oracle_outgoing(u_r, u_l, kG));
}

TEST_CASE("strongly torrential outgoing anchor accepts everything above C+") {
  const State u_r(0.5, 0.5 * 2.5 * std::sqrt(kG * 0.5));  // F = 2.5
  testing::Rng rng(32);
  for (int i = 0; i < 200; ++i) {
    const double h = rng.log_uniform(0.05, 5.0);
    const double margin = rng.uniform(0.0, 3.0);
    const State cand(h, h * (std::sqrt(kG * h) + margin));
    CHECK(attainable_outgoing(u_r, cand, kG).admissible);
  }
}

TEST_CASE("case B incoming: conjugate admissible, excluded arc rejected") {
  testing::Rng rng(33);
  for (int i = 0; i < 100; ++i) {
    const State u_l = testing::random_anchor(RegionCase::B, rng, kG);
    const CriticalPoints cp = critical_points_left(u_l, kG);
    REQUIRE(cp.h_star.has_value());
    REQUIRE(cp.h_plus_S.has_value());
    const State conj(*cp.h_star, lax_left_q(u_l, *cp.h_star, kG));
    CHECK(attainable_incoming(u_l, conj, kG).admissible);
    CHECK(std::abs(froude(conj, kG)) < 1.0 + 1e-9);
    // Pass-through of the anchor itself: the zero-wave solution has no
    // waves at all.
    CHECK(attainable_incoming(u_l, u_l, kG).admissible);
    // Strict interior of the excluded arc between h_plus_S and h_star.
    if (*cp.h_star > *cp.h_plus_S * 1.01) {
      const double h = 0.5 * (*cp.h_plus_S + *cp.h_star);
      const State arc(h, lax_left_q(u_l, h, kG));
      CHECK_FALSE(attainable_incoming(u_l, arc, kG).admissible);
      CHECK_FALSE(testing::oracle_incoming(u_l, arc, kG));
    }
  }
}

TEST_CASE("I3 memberships carry a valid witness") {
  testing::Rng rng(34);
  int found = 0;
  for (int i = 0; i < 20000 && found < 50; ++i) {
    const State u_l = testing::random_anchor(RegionCase::A, rng, kG);
    const State cand = testing::random_candidate(rng, kG);
    const RegionVerdict v = attainable_incoming(u_l, cand, kG);
    if (!v.admissible || v.subregion != Subregion::I3) continue;
    ++found;
    REQUIRE(v.witness.has_value());
    const State& m = *v.witness;
    // Witness on the left Lax curve, fluvial with backward flow, and the
    // connecting 2-shock does not move right.
    CHECK(m.q() ==
          doctest::Approx(lax_left_q(u_l, m.h(), kG)).epsilon(1e-8).scale(1.0));
    const double fm = froude(m, kG);
    CHECK(fm >= -1.0 - 1e-6);
    CHECK(fm <= 1e-6);
    const double speed = (m.q() - cand.q()) / (m.h() - cand.h());
    CHECK(speed <= 1e-7);
  }
  CHECK(found > 0);
}

TEST_CASE("oracle equivalence per case and side") {
  const int n = 2000;
  unsigned long long seed = 40;
  for (Side side : {Side::Incoming, Side::Outgoing}) {
    for (RegionCase c : {RegionCase::A, RegionCase::B, RegionCase::C}) {
      const testing::OracleTally t = testing::oracle_sweep(side, c, n, ++seed);
      INFO("side " << to_string(side) << " case " << to_string(c)
                    << " shell " << t.shell);
      CHECK(t.disagreements == 0);
      CHECK(t.samples == n);
      CHECK(t.admissible > 0);
      CHECK(t.admissible < n);
    }
  }
}

TEST_CASE("region boundary polylines") {
  const State fluvial(1.0, 0.5);
  const auto segs = region_boundary(Side::Incoming, fluvial, 0.01, 100.0);
  REQUIRE(!segs.empty());
  bool has_i1 = false;
  for (const auto& s : segs) {
    if (s.label.find("I1") != std::string::npos) has_i1 = true;
    for (size_t i = 0; i + 1 < s.points.size(); ++i) {
      CHECK(s.points[i].h <= s.points[i + 1].h);
      CHECK(std::isfinite(s.points[i].q));
    }
  }
  CHECK(has_i1);
  // Points on the I1 arc are themselves admissible (closed region).
  for (const auto& s : segs) {
    if (s.label.find("I1") == std::string::npos) continue;
    for (size_t i = 0; i < s.points.size(); i += 37) {
      const State cand(s.points[i].h, s.points[i].q);
      CHECK(attainable_incoming(fluvial, cand, kG).admissible);
    }
  }

  const double hs = 1.0 * std::sqrt(kG);
  const State deep_c(1.0, -3.0 * hs);  // F = -3
  const auto csegs = region_boundary(Side::Incoming, deep_c, 0.01, 100.0);
  REQUIRE(!csegs.empty());

  const auto osegs = region_boundary(Side::Outgoing, fluvial, 0.01, 100.0);
  bool has_o1 = false;
  for (const auto& s : osegs)
    if (s.label.find("O1") != std::string::npos) has_o1 = true;
  CHECK(has_o1);
}
