// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 the swnet developers

#include "swnet/rkdg.hpp"

#include <algorithm>
#include <cmath>

namespace swnet {

namespace {

constexpr double kGauss3X[3] = {-0.7745966692414834, 0.0,
                                0.7745966692414834};
constexpr double kGauss3W[3] = {5.0 / 9.0, 8.0 / 9.0, 5.0 / 9.0};

constexpr double kGauss5X[5] = {-0.9061798459386640, -0.5384693101056831,
                                0.0, 0.5384693101056831, 0.9061798459386640};
constexpr double kGauss5W[5] = {0.2369268850561891, 0.4786286704993665,
                                0.5688888888888889, 0.4786286704993665,
                                0.2369268850561891};

double legendre(int l, double xi) {
  switch (l) {
    case 0: return 1.0;
    case 1: return xi;
    case 2: return 0.5 * (3.0 * xi * xi - 1.0);
  }
  return 0.0;
}

double legendre_d(int l, double xi) {
  switch (l) {
    case 1: return 1.0;
    case 2: return 3.0 * xi;
  }
  return 0.0;
}

double max_abs_speed(const State& u, double g) {
  const auto [l1, l2] = eigenvalues(u, g);
  return std::max(std::abs(l1), std::abs(l2));
}

double tvb_minmod(double a, double b, double c, double m_dx2) {
  if (std::abs(a) <= m_dx2) return a;
  if ((a > 0.0) == (b > 0.0) && (b > 0.0) == (c > 0.0)) {
    const double s = (a > 0.0) ? 1.0 : -1.0;
    return s * std::min({std::abs(a), std::abs(b), std::abs(c)});
  }
  return 0.0;
}

// d/dt of all modal coefficients, given prescribed end fluxes.
std::vector<double> residual(const DGField& u,
                             const std::pair<double, double>& f_left,
                             const std::pair<double, double>& f_right,
                             double g) {
  const int cells = u.grid().cells;
  const int modes = u.modes();
  const double dx = u.grid().dx();

  std::vector<std::pair<double, double>> face(cells + 1);
  face[0] = f_left;
  face[cells] = f_right;
  for (int i = 1; i < cells; ++i) {
    const State a = u.right_trace(i - 1);
    const State b = u.left_trace(i);
    const double alpha = std::max(max_abs_speed(a, g), max_abs_speed(b, g));
    face[i] = lax_friedrichs_flux(a, b, alpha, g);
  }

  std::vector<double> r(static_cast<size_t>(cells) * 2 * modes, 0.0);
  const auto at = [&](int m, int comp, int l) -> double& {
    return r[(static_cast<size_t>(m) * 2 + comp) * modes + l];
  };
  for (int m = 0; m < cells; ++m) {
    double vol[2][3] = {};
    if (modes > 1) {
      for (int q = 0; q < 3; ++q) {
        const auto f = flux(u.eval_ref(m, kGauss3X[q]), g);
        for (int l = 1; l < modes; ++l) {
          const double d = kGauss3W[q] * legendre_d(l, kGauss3X[q]);
          vol[0][l] += d * f.first;
          vol[1][l] += d * f.second;
        }
      }
    }
    for (int comp = 0; comp < 2; ++comp) {
      const double fr = comp ? face[m + 1].second : face[m + 1].first;
      const double fl = comp ? face[m].second : face[m].first;
      for (int l = 0; l < modes; ++l) {
        const double sign = (l % 2) ? -1.0 : 1.0;  // P_l(-1)
        at(m, comp, l) =
            (2.0 * l + 1.0) / dx * (vol[comp][l] - (fr - sign * fl));
      }
    }
  }
  return r;
}

void axpy(DGField& u, double dt, const std::vector<double>& r) {
  const int modes = u.modes();
  size_t k = 0;
  for (int m = 0; m < u.grid().cells; ++m)
    for (int comp = 0; comp < 2; ++comp)
      for (int l = 0; l < modes; ++l) u.coef(m, comp, l) += dt * r[k++];
}

// u := a * base + b * u
void blend(DGField& u, const DGField& base, double a, double b) {
  const int modes = u.modes();
  for (int m = 0; m < u.grid().cells; ++m)
    for (int comp = 0; comp < 2; ++comp)
      for (int l = 0; l < modes; ++l)
        u.coef(m, comp, l) =
            a * base.coef(m, comp, l) + b * u.coef(m, comp, l);
}

}  // namespace

DGField::DGField(const CanalGrid& grid, int degree)
    : grid_(grid), degree_(degree),
      c_(static_cast<size_t>(grid.cells) * 2 * (degree + 1), 0.0) {
  if (grid.cells < 1 || !(grid.x_right > grid.x_left))
    throw DomainViolation("DGField: bad grid");
  if (degree < 0 || degree > 2)
    throw DomainViolation("DGField: degree must be 0, 1 or 2");
}

std::pair<double, double> DGField::value_ref(int m, double xi) const {
  double h = 0.0;
  double q = 0.0;
  for (int l = 0; l < modes(); ++l) {
    const double p = legendre(l, xi);
    h += coef(m, 0, l) * p;
    q += coef(m, 1, l) * p;
  }
  return {h, q};
}

State DGField::eval_ref(int m, double xi) const {
  const auto [h, q] = value_ref(m, xi);
  return State(h, q);
}

State DGField::eval(double x) const {
  const double dx = grid_.dx();
  int m = static_cast<int>((x - grid_.x_left) / dx);
  m = std::clamp(m, 0, grid_.cells - 1);
  const double xi = 2.0 * (x - grid_.center(m)) / dx;
  return eval_ref(m, std::clamp(xi, -1.0, 1.0));
}

State DGField::cell_average(int m) const {
  return State(coef(m, 0, 0), coef(m, 1, 0));
}

double DGField::volume() const {
  double v = 0.0;
  for (int m = 0; m < grid_.cells; ++m) v += coef(m, 0, 0);
  return v * grid_.dx();
}

DGField project_initial(const CanalGrid& grid, int degree,
                        const ProfileFn& profile) {
  DGField u(grid, degree);
  for (int m = 0; m < grid.cells; ++m) {
    for (int q = 0; q < 5; ++q) {
      const double x = grid.center(m) + 0.5 * grid.dx() * kGauss5X[q];
      const auto [h, qv] = profile(x);
      for (int l = 0; l <= degree; ++l) {
        const double w =
            0.5 * (2.0 * l + 1.0) * kGauss5W[q] * legendre(l, kGauss5X[q]);
        u.coef(m, 0, l) += w * h;
        u.coef(m, 1, l) += w * qv;
      }
    }
  }
  return u;
}

std::pair<double, double> lax_friedrichs_flux(const State& u_l,
                                              const State& u_r, double alpha,
                                              double g) {
  const auto fl = flux(u_l, g);
  const auto fr = flux(u_r, g);
  return {0.5 * (fl.first + fr.first) - 0.5 * alpha * (u_r.h() - u_l.h()),
          0.5 * (fl.second + fr.second) - 0.5 * alpha * (u_r.q() - u_l.q())};
}

void apply_limiter(DGField& u, const LimiterOptions& lim, double g) {
  if (!lim.enabled || u.degree() == 0) return;
  const int cells = u.grid().cells;
  if (cells < 2) return;
  const double dx = u.grid().dx();
  const double m_dx2 = lim.tvb_m * dx * dx;
  const bool has_c2 = u.degree() >= 2;

  for (int m = 0; m < cells; ++m) {
    double dp[2];
    double dm[2];
    for (int comp = 0; comp < 2; ++comp) {
      const double avg = u.coef(m, comp, 0);
      // Copy-state ghosts outside both ends: the missing difference is 0.
      dp[comp] = (m + 1 < cells) ? u.coef(m + 1, comp, 0) - avg : 0.0;
      dm[comp] = (m > 0) ? avg - u.coef(m - 1, comp, 0) : 0.0;
    }
    const State mean = u.cell_average(m);
    const auto [l1, l2] = eigenvalues(mean, g);
    const double det = l2 - l1;  // 2 sqrt(g h) > 0
    // Rows of R^-1 for eigenvectors (1, l1), (1, l2).
    const auto to_char = [&](const double* w, double* out) {
      out[0] = (l2 * w[0] - w[1]) / det;
      out[1] = (-l1 * w[0] + w[1]) / det;
    };
    double up[2];
    double um[2];
    for (int comp = 0; comp < 2; ++comp) {
      const double c1 = u.coef(m, comp, 1);
      const double c2 = has_c2 ? u.coef(m, comp, 2) : 0.0;
      up[comp] = c1 + c2;   // value at +1 minus average
      um[comp] = c1 - c2;   // average minus value at -1
    }
    double wup[2], wum[2], wdp[2], wdm[2];
    to_char(up, wup);
    to_char(um, wum);
    to_char(dp, wdp);
    to_char(dm, wdm);
    double tup[2], tum[2];
    bool changed = false;
    for (int k = 0; k < 2; ++k) {
      tup[k] = tvb_minmod(wup[k], wdp[k], wdm[k], m_dx2);
      tum[k] = tvb_minmod(wum[k], wdp[k], wdm[k], m_dx2);
      const double s = std::max(
          {1.0, std::abs(wup[k]), std::abs(wum[k])});
      if (std::abs(tup[k] - wup[k]) > 1e-14 * s ||
          std::abs(tum[k] - wum[k]) > 1e-14 * s)
        changed = true;
    }
    if (!changed) continue;
    // Back to conserved variables through R.
    const double nup[2] = {tup[0] + tup[1], l1 * tup[0] + l2 * tup[1]};
    const double num[2] = {tum[0] + tum[1], l1 * tum[0] + l2 * tum[1]};
    for (int comp = 0; comp < 2; ++comp) {
      u.coef(m, comp, 1) = 0.5 * (nup[comp] + num[comp]);
      if (has_c2) u.coef(m, comp, 2) = 0.5 * (nup[comp] - num[comp]);
    }
  }

  // Positivity scaling toward the cell mean so that h stays wet at every
  // trace and quadrature point.
  for (int m = 0; m < cells; ++m) {
    const double avg = u.coef(m, 0, 0);
    double hmin = avg;
    for (const double xi :
         {-1.0, 1.0, kGauss3X[0], kGauss3X[1], kGauss3X[2]})
      hmin = std::min(hmin, u.value_ref(m, xi).first);
    const double eps = std::min(1e-12, avg);
    if (hmin >= eps || !(avg > hmin)) continue;
    const double theta = std::clamp((avg - eps) / (avg - hmin), 0.0, 1.0);
    for (int comp = 0; comp < 2; ++comp)
      for (int l = 1; l <= u.degree(); ++l) u.coef(m, comp, l) *= theta;
  }
}

double StepRecord::net_inflow_rate() const {
  static constexpr double w[3] = {1.0 / 6.0, 1.0 / 6.0, 2.0 / 3.0};
  double r = 0.0;
  for (int s = 0; s < 3; ++s)
    r += w[s] * (stages[s].c1_left - stages[s].c1_right +
                 stages[s].c2_left - stages[s].c2_right);
  return r;
}

NetworkSim::NetworkSim(DGField canal1, DGField canal2, const SimOptions& opts)
    : c1_(std::move(canal1)), c2_(std::move(canal2)), opts_(opts) {
  if (c1_.degree() != c2_.degree())
    throw DomainViolation("NetworkSim: canal degrees differ");
}

double NetworkSim::max_wave_speed() const {
  double s = 0.0;
  const double g = opts_.gravity;
  for (const DGField* f : {&c1_, &c2_}) {
    for (int m = 0; m < f->grid().cells; ++m) {
      s = std::max(s, max_abs_speed(f->cell_average(m), g));
      s = std::max(s, max_abs_speed(f->left_trace(m), g));
      s = std::max(s, max_abs_speed(f->right_trace(m), g));
    }
  }
  return s;
}

double NetworkSim::stable_dt() const {
  const double s = max_wave_speed();
  const double dx = std::min(c1_.grid().dx(), c2_.grid().dx());
  if (s <= 0.0) return opts_.cfl * dx;
  return opts_.cfl * dx / s;
}

StepRecord NetworkSim::step(double dt) {
  if (!(dt > 0.0)) throw DomainViolation("step: dt must be positive");
  if (dt > stable_dt() * (1.0 + 1e-9))
    throw DomainViolation("step: dt violates the CFL condition");

  const double g = opts_.gravity;
  const auto euler = [&](DGField& f1, DGField& f2, StageFlux& sf) {
    const State tl = f1.right_trace(f1.grid().cells - 1);
    const State tr = f2.left_trace(0);
    std::pair<double, double> f1r;
    std::pair<double, double> f2l;
    if (opts_.junction_mode == JunctionMode::Coupled) {
      JunctionOptions jo;
      jo.gravity = g;
      jo.critical_band = opts_.dispatch_band;
      jo.backflow_band = opts_.backflow_band;
      const JunctionSolution sol = solve_junction(tl, tr, opts_.coupling, jo);
      f1r = flux(sol.trace_in, g);
      f2l = flux(sol.trace_out, g);
      sf.tag = sol.case_tag;
      sf.coupled = true;
    } else {
      const double alpha = std::max(max_abs_speed(tl, g),
                                    max_abs_speed(tr, g));
      f1r = f2l = lax_friedrichs_flux(tl, tr, alpha, g);
    }
    const auto f1l = flux(f1.left_trace(0), g);
    const auto f2r = flux(f2.right_trace(f2.grid().cells - 1), g);
    sf.c1_left = f1l.first;
    sf.c1_right = f1r.first;
    sf.c2_left = f2l.first;
    sf.c2_right = f2r.first;
    const auto r1 = residual(f1, f1l, f1r, g);
    const auto r2 = residual(f2, f2l, f2r, g);
    axpy(f1, dt, r1);
    axpy(f2, dt, r2);
  };
  const auto limit = [&](DGField& f1, DGField& f2) {
    apply_limiter(f1, opts_.limiter, g);
    apply_limiter(f2, opts_.limiter, g);
  };

  StepRecord rec{};
  const DGField u0_1 = c1_;
  const DGField u0_2 = c2_;

  euler(c1_, c2_, rec.stages[0]);
  limit(c1_, c2_);

  euler(c1_, c2_, rec.stages[1]);
  blend(c1_, u0_1, 0.75, 0.25);
  blend(c2_, u0_2, 0.75, 0.25);
  limit(c1_, c2_);

  euler(c1_, c2_, rec.stages[2]);
  blend(c1_, u0_1, 1.0 / 3.0, 2.0 / 3.0);
  blend(c2_, u0_2, 1.0 / 3.0, 2.0 / 3.0);
  limit(c1_, c2_);

  t_ += dt;
  return rec;
}

}  // namespace swnet
