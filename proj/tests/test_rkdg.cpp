// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 the swnet developers

#include <cmath>

#include "doctest.h"
#include "swnet/rkdg.hpp"

using namespace swnet;

namespace {

constexpr double kG = 9.81;

DGField constant_field(const CanalGrid& grid, int degree, double h, double q) {
  return project_initial(grid, degree, [=](double) {
    return std::pair{h, q};
  });
}

}  // namespace

TEST_CASE("projection of constants is exact") {
  const CanalGrid grid{0.0, 1.0, 8};
  const DGField f = constant_field(grid, 2, 1.5, 0.3);
  for (int m = 0; m < grid.cells; ++m) {
    CHECK(f.coef(m, 0, 0) == doctest::Approx(1.5).epsilon(1e-14));
    CHECK(f.coef(m, 1, 0) == doctest::Approx(0.3).epsilon(1e-14));
    CHECK(std::abs(f.coef(m, 0, 1)) < 1e-14);
    CHECK(std::abs(f.coef(m, 0, 2)) < 1e-14);
  }
}

TEST_CASE("projection reproduces linear profiles") {
  const CanalGrid grid{0.0, 2.0, 10};
  const DGField f = project_initial(grid, 2, [](double x) {
    return std::pair{2.0 + 0.5 * x, 0.1 * x};
  });
  for (int m = 0; m < grid.cells; ++m) {
    CHECK(f.coef(m, 0, 0) ==
          doctest::Approx(2.0 + 0.5 * grid.center(m)).epsilon(1e-13));
    // Mode 1 carries the slope, mode 2 vanishes for linear data.
    CHECK(f.coef(m, 0, 1) ==
          doctest::Approx(0.5 * grid.dx() / 2.0).epsilon(1e-12));
    CHECK(std::abs(f.coef(m, 0, 2)) < 1e-14);
  }
}

TEST_CASE("projection error decays at the design order") {
  const auto profile = [](double x) {
    return std::pair{2.0 + 0.3 * std::sin(3.0 * x), 0.0};
  };
  const auto l2_error = [&](int cells) {
    const CanalGrid grid{0.0, 2.0, cells};
    const DGField f = project_initial(grid, 2, profile);
    double err = 0.0;
    const int nq = 16;
    for (int m = 0; m < cells; ++m) {
      for (int i = 0; i < nq; ++i) {
        const double xi = -1.0 + (2.0 * i + 1.0) / nq;
        const double x = grid.center(m) + 0.5 * grid.dx() * xi;
        const double d = f.value_ref(m, xi).first - profile(x).first;
        err += d * d * grid.dx() / nq;
      }
    }
    return std::sqrt(err);
  };
  const double e1 = l2_error(16);
  const double e2 = l2_error(32);
  CHECK(std::log2(e1 / e2) > 2.7);
}

TEST_CASE("lax friedrichs flux is consistent") {
  const State u(1.3, 0.7);
  const auto f = lax_friedrichs_flux(u, u, 5.0, kG);
  const auto fx = flux(u, kG);
  CHECK(f.first == doctest::Approx(fx.first).epsilon(1e-14));
  CHECK(f.second == doctest::Approx(fx.second).epsilon(1e-14));

  // Dissipation is proportional to the state jump.
  const State a(2.0, 0.0);
  const State b(1.0, 0.0);
  const auto fab = lax_friedrichs_flux(a, b, 6.0, kG);
  const auto favg = std::pair{0.5 * (flux(a, kG).first + flux(b, kG).first),
                              0.5 * (flux(a, kG).second + flux(b, kG).second)};
  CHECK(fab.first == doctest::Approx(favg.first + 3.0).epsilon(1e-13));
  CHECK(fab.second == doctest::Approx(favg.second).epsilon(1e-13));
}

TEST_CASE("field evaluation") {
  const CanalGrid grid{-1.0, 1.0, 4};
  DGField f = constant_field(grid, 1, 1.0, 0.0);
  f.coef(2, 0, 1) = 0.25;
  // P1 vanishes at the cell center.
  CHECK(f.eval(grid.center(2)).h() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(f.eval_ref(2, 1.0).h() == doctest::Approx(1.25).epsilon(1e-14));
  CHECK(f.eval_ref(2, -1.0).h() == doctest::Approx(0.75).epsilon(1e-14));
  CHECK(f.cell_average(2).h() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(f.volume() == doctest::Approx(2.0).epsilon(1e-13));
}

TEST_CASE("limiter preserves cell averages") {
  const CanalGrid grid{0.0, 1.0, 16};
  DGField f = project_initial(grid, 2, [](double x) {
    return std::pair{x < 0.5 ? 2.0 : 1.0, x < 0.5 ? 0.0 : 0.4};
  });
  std::vector<double> avg_h;
  std::vector<double> avg_q;
  for (int m = 0; m < grid.cells; ++m) {
    avg_h.push_back(f.coef(m, 0, 0));
    avg_q.push_back(f.coef(m, 1, 0));
  }
  LimiterOptions lim;
  apply_limiter(f, lim, kG);
  for (int m = 0; m < grid.cells; ++m) {
    CHECK(f.coef(m, 0, 0) == avg_h[m]);
    CHECK(f.coef(m, 1, 0) == avg_q[m]);
  }
}

TEST_CASE("constant network state is steady") {
  const CanalGrid g1{-5.0, 0.0, 20};
  const CanalGrid g2{0.0, 5.0, 20};
  SimOptions opts;
  NetworkSim sim(constant_field(g1, 2, 1.5, 0.3),
                 constant_field(g2, 2, 1.5, 0.3), opts);
  for (int i = 0; i < 20; ++i) sim.step(sim.stable_dt());
  for (int m = 0; m < 20; ++m) {
    CHECK(std::abs(sim.canal1().cell_average(m).h() - 1.5) < 1e-13);
    CHECK(std::abs(sim.canal1().cell_average(m).q() - 0.3) < 1e-13);
    CHECK(std::abs(sim.canal2().cell_average(m).h() - 1.5) < 1e-13);
    CHECK(std::abs(sim.canal2().cell_average(m).q() - 0.3) < 1e-13);
  }
}

TEST_CASE("cfl violations are rejected") {
  const CanalGrid g1{-1.0, 0.0, 10};
  const CanalGrid g2{0.0, 1.0, 10};
  SimOptions opts;
  NetworkSim sim(constant_field(g1, 2, 1.0, 0.0),
                 constant_field(g2, 2, 1.0, 0.0), opts);
  CHECK_THROWS_AS(sim.step(2.0 * sim.stable_dt()), DomainViolation);
  CHECK_THROWS_AS(sim.step(-1.0), DomainViolation);
}

TEST_CASE("interior junction reproduces the single-domain discretization") {
  // The same dam break on the same global mesh, split at two different
  // places; with the junction replaced by the interior flux the split
  // location must not matter.
  const double dx = 0.02;
  const auto profile = [](double x) {
    return std::pair{x < -0.5 ? 2.0 : 1.0, 0.0};
  };
  SimOptions opts;
  opts.junction_mode = JunctionMode::Interior;
  // The limiter stays off: its one-sided boundary stencils depend on where
  // the canal seam lies, which is exactly the dependence this test forbids
  // for the flux machinery.
  opts.limiter.enabled = false;

  const CanalGrid a1{-1.0, 0.0, 50};
  const CanalGrid a2{0.0, 1.0, 50};
  NetworkSim sa(project_initial(a1, 2, profile),
                project_initial(a2, 2, profile), opts);

  const CanalGrid b1{-1.0, -0.2, 40};
  const CanalGrid b2{-0.2, 1.0, 60};
  NetworkSim sb(project_initial(b1, 2, profile),
                project_initial(b2, 2, profile), opts);

  const double dt = 5e-4;
  for (int i = 0; i < 80; ++i) {
    sa.step(dt);
    sb.step(dt);
  }

  // Compare cell averages over the shared global mesh.
  const auto average_at = [&](const NetworkSim& s, int cell) {
    const double x = -1.0 + (cell + 0.5) * dx;
    const DGField& f = x < (s.canal1().grid().x_right) ? s.canal1()
                                                       : s.canal2();
    const int local = static_cast<int>(
        std::floor((x - f.grid().x_left) / f.grid().dx()));
    return f.cell_average(local);
  };
  for (int cell = 0; cell < 100; ++cell) {
    const State ua = average_at(sa, cell);
    const State ub = average_at(sb, cell);
    CHECK(std::abs(ua.h() - ub.h()) < 1e-12);
    CHECK(std::abs(ua.q() - ub.q()) < 1e-12);
  }
}

TEST_CASE("mass ledger closes and junction fluxes match bit for bit") {
  const CanalGrid g1{-5.0, 0.0, 60};
  const CanalGrid g2{0.0, 5.0, 60};
  SimOptions opts;
  NetworkSim sim(constant_field(g1, 2, 0.25, 0.025),
                 constant_field(g2, 2, 2.5, 0.25), opts);
  const double v0 = sim.total_volume();
  double boundary = 0.0;
  for (int i = 0; i < 300; ++i) {
    const double dt = sim.stable_dt();
    const StepRecord rec = sim.step(dt);
    boundary += dt * rec.net_inflow_rate();
    for (const auto& st : rec.stages) {
      CHECK(st.coupled);
      CHECK(st.c1_right == st.c2_left);
    }
  }
  const double drift = std::abs(sim.total_volume() - v0 - boundary);
  CHECK(drift / std::max(1.0, v0) < 1e-11);
}

TEST_CASE("paper test 1 develops a backward torrential band on canal 1") {
  const CanalGrid g1{-1.0, 0.0, 100};
  const CanalGrid g2{0.0, 1.0, 100};
  SimOptions opts;
  NetworkSim sim(constant_field(g1, 2, 0.25, 0.025),
                 constant_field(g2, 2, 2.5, 0.25), opts);
  bool saw_critical_right = false;
  while (sim.time() < 0.1) {
    const StepRecord rec = sim.step(std::min(sim.stable_dt(), 0.1 - sim.time()));
    for (const auto& st : rec.stages)
      if (st.tag == JunctionCase::AA_CriticalRight) saw_critical_right = true;
  }
  CHECK(saw_critical_right);
  int torrential = 0;
  for (int m = 0; m < 100; ++m) {
    const State u = sim.canal1().cell_average(m);
    if (froude(u, kG) < -1.0) {
      ++torrential;
      CHECK(u.v() < 0.0);
    }
  }
  CHECK(torrential > 3);
}

TEST_CASE("paper test 2 propagates the torrential regime onto canal 2") {
  const CanalGrid g1{-1.0, 0.0, 80};
  const CanalGrid g2{0.0, 1.0, 80};
  SimOptions opts;
  NetworkSim sim(constant_field(g1, 2, 0.2, 3.0),
                 constant_field(g2, 2, 1.8, 4.0), opts);
  const auto right_edge = [&]() {
    double edge = 0.0;
    for (int m = 0; m < 80; ++m) {
      if (froude(sim.canal2().cell_average(m), kG) > 1.0)
        edge = sim.canal2().grid().center(m);
    }
    return edge;
  };
  double prev = right_edge();
  for (int phase = 0; phase < 3; ++phase) {
    const double t_stop = 0.08 * (phase + 1);
    while (sim.time() < t_stop)
      sim.step(std::min(sim.stable_dt(), t_stop - sim.time()));
    const double edge = right_edge();
    CHECK(edge > prev);
    prev = edge;
  }
}
