// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 the swnet developers

#ifndef SWNET_CORE_HPP
#define SWNET_CORE_HPP

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace swnet {

inline constexpr double kDefaultGravity = 9.81;

// States with h below this are considered dry and rejected everywhere.
inline constexpr double kDryDepth = 1e-10;

// Half-width of the band around |F| = 1 mapped to the critical regimes.
inline constexpr double kCriticalBand = 1e-9;

struct DryStateError : std::domain_error {
  explicit DryStateError(double h)
      : std::domain_error("dry state: h = " + std::to_string(h)) {}
};

struct DomainViolation : std::domain_error {
  using std::domain_error::domain_error;
};

struct VacuumError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NoSolutionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnsupportedRegimeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Water state on one canal cross-section: depth h and discharge q = h v.
class State {
 public:
  State(double h, double q) : h_(h), q_(q) {
    if (!(h > kDryDepth)) throw DryStateError(h);
  }

  double h() const { return h_; }
  double q() const { return q_; }
  double v() const { return q_ / h_; }

 private:
  double h_;
  double q_;
};

enum class Regime {
  Fluvial,         // |F| < 1
  CriticalPlus,    // F = 1 within tolerance
  CriticalMinus,   // F = -1 within tolerance
  TorrentialPlus,  // F > 1
  TorrentialMinus  // F < -1
};

const char* to_string(Regime r);

/// (mass flux, momentum flux) = (q, q^2/h + g h^2/2).
std::pair<double, double> flux(const State& u, double g = kDefaultGravity);

/// (v - sqrt(g h), v + sqrt(g h)).
std::pair<double, double> eigenvalues(const State& u,
                                      double g = kDefaultGravity);

/// Signed Froude number v / sqrt(g h).
double froude(const State& u, double g = kDefaultGravity);

Regime classify(const State& u, double g = kDefaultGravity,
                double tol = kCriticalBand);

inline bool is_fluvial(Regime r) {
  return r == Regime::Fluvial || r == Regime::CriticalPlus ||
         r == Regime::CriticalMinus;
}

/// Specific energy h + v^2 / (2g).
double specific_energy(const State& u, double g = kDefaultGravity);

/// Critical depth (q^2 / g)^(1/3); the signed Froude number at
/// (h_c(q), q) is sign(q).
double critical_depth(double q, double g = kDefaultGravity);

}  // namespace swnet

#endif  // SWNET_CORE_HPP
