// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 the swnet developers

#include "swnet/core.hpp"

#include <cmath>

namespace swnet {

const char* to_string(Regime r) {
  switch (r) {
    case Regime::Fluvial:
      return "fluvial";
    case Regime::CriticalPlus:
      return "critical+";
    case Regime::CriticalMinus:
      return "critical-";
    case Regime::TorrentialPlus:
      return "torrential+";
    case Regime::TorrentialMinus:
      return "torrential-";
  }
  return "?";
}

std::pair<double, double> flux(const State& u, double g) {
  return {u.q(), u.q() * u.q() / u.h() + 0.5 * g * u.h() * u.h()};
}

std::pair<double, double> eigenvalues(const State& u, double g) {
  const double c = std::sqrt(g * u.h());
  return {u.v() - c, u.v() + c};
}

double froude(const State& u, double g) {
  return u.v() / std::sqrt(g * u.h());
}

Regime classify(const State& u, double g, double tol) {
  const double f = froude(u, g);
  if (std::abs(f - 1.0) <= tol) return Regime::CriticalPlus;
  if (std::abs(f + 1.0) <= tol) return Regime::CriticalMinus;
  if (f > 1.0) return Regime::TorrentialPlus;
  if (f < -1.0) return Regime::TorrentialMinus;
  return Regime::Fluvial;
}

double specific_energy(const State& u, double g) {
  return u.h() + u.v() * u.v() / (2.0 * g);
}

double critical_depth(double q, double g) {
  return std::cbrt(q * q / g);
}

}  // namespace swnet
