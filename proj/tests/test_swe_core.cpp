// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 the swnet developers

#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "swnet/core.hpp"

using namespace swnet;

TEST_CASE("state construction rejects dry columns") {
  CHECK_THROWS_AS(State(0.0, 1.0), DryStateError);
  CHECK_THROWS_AS(State(-1.0, 0.0), DryStateError);
  CHECK_THROWS_AS(State(1e-12, 0.0), DryStateError);
  const State u(2.0, 3.0);
  CHECK(u.h() == 2.0);
  CHECK(u.q() == 3.0);
  CHECK(u.v() == doctest::Approx(1.5).epsilon(1e-15));
}

TEST_CASE("flux values") {
  const auto f0 = flux(State(1.0, 0.0));
  CHECK(f0.first == 0.0);
  CHECK(f0.second == doctest::Approx(4.905).epsilon(1e-14));

  const auto f1 = flux(State(2.5, 0.25));
  CHECK(f1.first == 0.25);
  CHECK(f1.second ==
        doctest::Approx(0.25 * 0.25 / 2.5 + 9.81 * 2.5 * 2.5 / 2.0)
            .epsilon(1e-14));
  CHECK(f1.second == doctest::Approx(30.68125).epsilon(1e-12));

  const auto f2 = flux(State(0.2, 3.0));
  CHECK(f2.first == 3.0);
  CHECK(f2.second == doctest::Approx(45.1962).epsilon(1e-12));
}

TEST_CASE("eigenvalues ordering and symmetry") {
  const auto [l1, l2] = eigenvalues(State(1.0, 0.0));
  CHECK(l1 == doctest::Approx(-std::sqrt(9.81)).epsilon(1e-15));
  CHECK(l2 == doctest::Approx(std::sqrt(9.81)).epsilon(1e-15));

  const auto [m1, m2] = eigenvalues(State(0.2, 3.0));
  CHECK(m1 == doctest::Approx(15.0 - std::sqrt(9.81 * 0.2)).epsilon(1e-15));
  CHECK(m2 == doctest::Approx(15.0 + std::sqrt(9.81 * 0.2)).epsilon(1e-15));
  CHECK(m1 > 0.0);

  testing::Rng rng(11);
  for (int i = 0; i < 1000; ++i) {
    const State u = testing::random_candidate(rng, 9.81);
    const auto [a, b] = eigenvalues(u);
    CHECK(a < b);
    CHECK(a + b == doctest::Approx(2.0 * u.v()).epsilon(1e-12));
  }
}

TEST_CASE("froude number") {
  CHECK(froude(State(2.5, 0.25)) ==
        doctest::Approx(0.1 / std::sqrt(9.81 * 2.5)).epsilon(1e-15));
  CHECK(froude(State(0.2, 3.0)) ==
        doctest::Approx(15.0 / std::sqrt(9.81 * 0.2)).epsilon(1e-15));
  CHECK(froude(State(3.7, 0.0)) == 0.0);
  // Custom gravity is honored.
  CHECK(froude(State(1.0, 2.0), 4.0) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("regime classification matches eigenvalue signs") {
  CHECK(classify(State(2.5, 0.25)) == Regime::Fluvial);
  CHECK(classify(State(0.2, 3.0)) == Regime::TorrentialPlus);
  CHECK(classify(State(0.2, -3.0)) == Regime::TorrentialMinus);
  const double hc = 1.0;
  CHECK(classify(State(hc, hc * std::sqrt(9.81 * hc))) ==
        Regime::CriticalPlus);
  CHECK(classify(State(hc, -hc * std::sqrt(9.81 * hc))) ==
        Regime::CriticalMinus);

  testing::Rng rng(12);
  for (int i = 0; i < 2000; ++i) {
    const State u = testing::random_candidate(rng, 9.81);
    const auto [l1, l2] = eigenvalues(u);
    const Regime r = classify(u);
    const double f = froude(u);
    if (std::abs(std::abs(f) - 1.0) < 1e-6) continue;
    if (r == Regime::Fluvial) {
      CHECK(l1 < 0.0);
      CHECK(l2 > 0.0);
    } else if (r == Regime::TorrentialPlus) {
      CHECK(l1 > 0.0);
    } else if (r == Regime::TorrentialMinus) {
      CHECK(l2 < 0.0);
    }
  }
}

TEST_CASE("specific energy and critical depth") {
  CHECK(specific_energy(State(1.0, 0.0)) == 1.0);
  CHECK(specific_energy(State(0.2, 3.0)) ==
        doctest::Approx(0.2 + 225.0 / (2.0 * 9.81)).epsilon(1e-15));

  CHECK(critical_depth(0.0) == 0.0);
  CHECK(critical_depth(0.25) ==
        doctest::Approx(std::cbrt(0.0625 / 9.81)).epsilon(1e-15));
  CHECK(critical_depth(3.0) ==
        doctest::Approx(std::cbrt(9.0 / 9.81)).epsilon(1e-15));

  testing::Rng rng(13);
  for (int i = 0; i < 1000; ++i) {
    const double q = rng.uniform(-10.0, 10.0);
    if (std::abs(q) < 1e-3) continue;
    const double hc = critical_depth(q);
    CHECK(froude(State(hc, q)) ==
          doctest::Approx(q > 0.0 ? 1.0 : -1.0).epsilon(1e-12));
    // E is minimized over h at the critical depth.
    const double e0 = specific_energy(State(hc, q));
    CHECK(specific_energy(State(hc * 1.01, q)) > e0);
    CHECK(specific_energy(State(hc * 0.99, q)) > e0);
  }
}

TEST_CASE("regime names") {
  CHECK(std::string(to_string(Regime::Fluvial)) == "fluvial");
  CHECK(std::string(to_string(Regime::TorrentialPlus)) == "torrential+");
  CHECK(std::string(to_string(Regime::TorrentialMinus)) == "torrential-");
}
