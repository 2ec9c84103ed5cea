// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 the swnet developers

#ifndef SWNET_ROOTS_HPP
#define SWNET_ROOTS_HPP

#include <cmath>
#include <stdexcept>

namespace swnet::detail {

// Bracketed bisection refined by a secant/Newton-style step.  The bracket
// [lo, hi] must satisfy sign(f(lo)) != sign(f(hi)) (zero endpoints allowed).
// Terminates when |f| drops below tol or the bracket collapses.
template <class F>
double find_root(F&& f, double lo, double hi, double tol = 1e-12,
                 int max_iter = 200) {
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0))
    throw std::runtime_error("find_root: endpoints do not bracket a root");
  double mid = lo;
  for (int i = 0; i < max_iter; ++i) {
    // Secant guess, falling back to bisection when it leaves the bracket.
    double s = lo - flo * (hi - lo) / (fhi - flo);
    if (!(s > lo && s < hi)) s = 0.5 * (lo + hi);
    const double fs = f(s);
    mid = s;
    if (std::abs(fs) < tol || hi - lo < 1e-16 * (std::abs(lo) + std::abs(hi)))
      return s;
    if ((fs > 0.0) == (flo > 0.0)) {
      lo = s;
      flo = fs;
    } else {
      hi = s;
      fhi = fs;
    }
  }
  return mid;
}

// Grows hi geometrically from lo until f changes sign, then solves.
// f(lo) must be nonzero; the root is assumed to exist on [lo, inf).
template <class F>
double find_root_growing(F&& f, double lo, double tol = 1e-12) {
  const double flo = f(lo);
  if (flo == 0.0) return lo;
  double hi = (lo > 0.0) ? 2.0 * lo : 1.0;
  for (int i = 0; i < 200; ++i) {
    const double fhi = f(hi);
    if ((fhi > 0.0) != (flo > 0.0) || fhi == 0.0)
      return find_root(f, lo, hi, tol);
    lo = hi;
    hi *= 2.0;
  }
  throw std::runtime_error("find_root_growing: no sign change found");
}

}  // namespace swnet::detail

#endif  // SWNET_ROOTS_HPP
