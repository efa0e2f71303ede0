#include <cmath>
#include <random>

#include "doctest.h"
#include "test_models.hpp"
#include "wbfv/bfe.hpp"
#include "wbfv/burgers.hpp"
#include "wbfv/config.hpp"
#include "wbfv/reference.hpp"
#include "wbfv/solver.hpp"
#include "wbfv/update.hpp"

using namespace wbfv;
using wbfv::test::BurgersNoSource;
using wbfv::test::LinearAdvection;

TEST_CASE("fluctuations vanish for equal states") {
  BurgersModel bm;
  const Fluctuations f =
      interface_fluctuations(bm, StateVec::scalar(1.3), StateVec::scalar(1.3));
  CHECK(f.minus[0] == 0.0);
  CHECK(f.plus[0] == 0.0);

  ScenarioConfig cfg = preset_scenario("s1");
  auto model = build_model(cfg);
  const auto& bfe = dynamic_cast<const BfeModel&>(*model);
  const StateVec q = bfe.state_at_pressure(5.0, 60.0 * kMmhgToCgs, 0.7, 0.1);
  const Fluctuations fb = interface_fluctuations(bfe, q, q);
  for (int c = 0; c < 8; ++c) {
    CHECK(fb.minus[c] == 0.0);
    CHECK(fb.plus[c] == 0.0);
  }
}

TEST_CASE("right-going shock sends its jump to the right cell") {
  BurgersModel m;
  const Fluctuations f =
      interface_fluctuations(m, StateVec::scalar(1.0), StateVec::scalar(0.0));
  CHECK(f.minus[0] == doctest::Approx(0.0));
  CHECK(f.plus[0] == doctest::Approx(-0.5));
}

TEST_CASE("flux-difference identity over random pairs") {
  BurgersModel m;
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  for (int trial = 0; trial < 10000; ++trial) {
    const double ql = u(rng), qr = u(rng);
    const Fluctuations f =
        interface_fluctuations(m, StateVec::scalar(ql), StateVec::scalar(qr));
    const double total = 0.5 * (qr * qr - ql * ql);
    const double scale = std::max(1.0, std::abs(total));
    CHECK(std::abs(f.minus[0] + f.plus[0] - total) <= 4e-16 * scale);
  }
}

TEST_CASE("equal stationary traces produce zero interface terms") {
  // Both traces taken from one marched stationary solution at the shared
  // interface; the interface leg of well-balance.
  ScenarioConfig cfg = preset_scenario("s3");
  auto model = build_model(cfg);
  const auto& bfe = dynamic_cast<const BfeModel&>(*model);
  Grid g = Grid::uniform(0.0, 10.0, 12);
  DiscreteSteady ds = discrete_rest_state(bfe, g, 2, cfg.right.value);
  for (int j = 1; j < 12; ++j) {
    const StateVec left_trace = ds.nodes[j - 1][1];  // right edge of cell j-1
    const StateVec right_trace = ds.nodes[j][0];     // left edge of cell j
    REQUIRE(bitwise_equal(left_trace, right_trace));
    const Fluctuations f = interface_fluctuations(bfe, left_trace, right_trace);
    for (int c = 0; c < 8; ++c) {
      CHECK(f.minus[c] == 0.0);
      CHECK(f.plus[c] == 0.0);
    }
  }
}

TEST_CASE("time quadrature integrates polynomial traces exactly") {
  LinearAdvection m(1.0);
  // Traces polynomial in tau of degree 2; the upwind fluctuation is linear
  // in the jump, so Simpson integrates it exactly.
  auto ql = [](double tau) { return 1.0 + tau; };
  auto qr = [](double tau) { return 0.5 - tau + 2.0 * tau * tau; };
  std::array<StateVec, 3> l, r;
  const SchemeQuadrature& q = SchemeQuadrature::get(3);
  for (int s = 0; s < 3; ++s) {
    l[s] = StateVec::scalar(ql(q.node[s]));
    r[s] = StateVec::scalar(qr(q.node[s]));
  }
  const InterfaceIntegral ii = integrate_interface(m, {l.data(), 3}, {r.data(), 3}, 3);
  // D+ = a (qr - ql); time averages: int qr = 2/3, int ql = 3/2.
  const double exact = 2.0 / 3.0 - 1.5;
  CHECK(ii.dbar_plus[0] == doctest::Approx(exact).epsilon(1e-13));
  CHECK(ii.dbar_minus[0] == doctest::Approx(0.0));
  // Cached traces are the end-of-step star states (upwind: the left trace).
  CHECK(ii.trace_minus[0] == doctest::Approx(ql(1.0)));
}

TEST_CASE("volume terms of a manufactured linear prediction") {
  BurgersModel m;
  SpaceTimePoly poly;
  poly.order = 2;
  // q(xi, tau) = xi at both time levels.
  for (int s = 0; s < 2; ++s)
    for (int p = 0; p < 2; ++p) {
      poly.node[s * 2 + p] = StateVec::scalar(p == 0 ? 0.0 : 1.0);
      poly.deviation[s * 2 + p] = poly.node[s * 2 + p];
    }
  const double dt = 0.2;
  const VolumeTerms vol = volume_terms(m, poly, nullptr, 0.0, 1.0, dt);
  CHECK(vol.b[0] == doctest::Approx(0.5 * dt).epsilon(1e-14));
  CHECK(vol.s[0] == doctest::Approx(0.5).epsilon(1e-14));  // trapezoid of xi^2
}

TEST_CASE("volume terms cancel exactly on stationary predictions") {
  ScenarioConfig cfg = preset_scenario("s2");
  auto model = build_model(cfg);
  const auto& bfe = dynamic_cast<const BfeModel&>(*model);
  Grid g = Grid::uniform(0.0, 10.0, 8);
  DiscreteSteady ds = discrete_rest_state(bfe, g, 3, cfg.right.value);
  SpaceTimePoly poly;
  poly.order = 3;
  for (int s = 0; s < 3; ++s)
    for (int p = 0; p < 3; ++p) {
      poly.node[s * 3 + p] = ds.nodes[2][p];
      poly.deviation[s * 3 + p] = StateVec(8);
    }
  const VolumeTerms vol =
      volume_terms(bfe, poly, ds.nodes[2].data(), g.interface(2), g.dx, 1e-3);
  for (int c = 0; c < 8; ++c) {
    CHECK(vol.b[c] == vol.b_star[c]);
    CHECK(vol.s[c] == vol.s_star[c]);
  }
}

TEST_CASE("constant prediction has zero non-conservative volume term") {
  BurgersNoSource m;
  SpaceTimePoly poly;
  poly.order = 2;
  for (int l = 0; l < 4; ++l) {
    poly.node[l] = StateVec::scalar(2.0);
    poly.deviation[l] = poly.node[l];
  }
  const VolumeTerms vol = volume_terms(m, poly, nullptr, 0.0, 0.5, 0.1);
  CHECK(vol.b[0] == 0.0);
}

TEST_CASE("update with zero differences is the identity") {
  StateVec q(8, 3.0);
  VolumeTerms vol{StateVec(8), StateVec(8), StateVec(8), StateVec(8)};
  const StateVec next = update_cell(q, vol, StateVec(8), StateVec(8), 0.1, 0.01);
  CHECK(bitwise_equal(next, q));
}

TEST_CASE("flat-data update chain matches classical Godunov") {
  BurgersNoSource m;
  const int n = 10;
  const double dx = 0.1, dt = 0.9 * dx / 1.0;
  std::vector<double> mine(n), oracle(n);
  for (int i = 0; i < n; ++i) mine[i] = oracle[i] = (i < n / 2) ? 1.0 : 0.0;

  for (int step = 0; step < 5; ++step) {
    // Scheme route: constant predictions per cell, interface integrals and
    // the volume update.
    std::vector<SpaceTimePoly> polys(n);
    for (int i = 0; i < n; ++i) {
      polys[i].order = 2;
      for (int l = 0; l < 4; ++l) {
        polys[i].node[l] = StateVec::scalar(mine[i]);
        polys[i].deviation[l] = polys[i].node[l];
      }
    }
    std::vector<InterfaceIntegral> ifc(n + 1);
    for (int j = 1; j < n; ++j)
      ifc[j] = time_integrated_fluctuations(m, polys[j - 1], polys[j]);
    // Transparent ends: equal traces give zero terms.
    ifc[0] = time_integrated_fluctuations(m, polys[0], polys[0]);
    ifc[n] = time_integrated_fluctuations(m, polys[n - 1], polys[n - 1]);
    std::vector<double> next(n);
    for (int i = 0; i < n; ++i) {
      const VolumeTerms vol = volume_terms(m, polys[i], nullptr, 0.0, dx, dt);
      next[i] = update_cell(StateVec::scalar(mine[i]), vol,
                            ifc[i + 1].dbar_minus, ifc[i].dbar_plus, dx, dt)[0];
    }
    mine = next;

    // Classical Godunov oracle.
    auto flux = [](double a, double b) {
      const double g = burgers_riemann(a, b);
      return 0.5 * g * g;
    };
    std::vector<double> onext(n);
    for (int i = 0; i < n; ++i) {
      const double fl = (i == 0) ? flux(oracle[0], oracle[0])
                                 : flux(oracle[i - 1], oracle[i]);
      const double fr = (i == n - 1) ? flux(oracle[n - 1], oracle[n - 1])
                                     : flux(oracle[i], oracle[i + 1]);
      onext[i] = oracle[i] - dt / dx * (fr - fl);
    }
    oracle = onext;
  }
  for (int i = 0; i < n; ++i)
    CHECK(mine[i] == doctest::Approx(oracle[i]).epsilon(1e-14));
}

TEST_CASE("parameter components never change over a solver step") {
  ScenarioConfig cfg = preset_scenario("s2");
  cfg.cells = 8;
  auto model = build_model(cfg);
  Grid g = build_grid(cfg);
  Solver solver(*model, g, solver_options(cfg));
  solver.set_initial_condition(initial_condition(cfg, *model));
  const std::vector<StateVec> before = solver.averages();
  for (int k = 0; k < 3; ++k) solver.step_once(1e9);
  for (int i = 0; i < g.n; ++i)
    for (int c : {kBfeA0, kBfeH0, kBfeEe, kBfeEc, kBfePr})
      CHECK(solver.averages()[i][c] == before[i][c]);
}

TEST_CASE("time step control") {
  CHECK(compute_dt(2.0, 0.9, 0.04, 1e9, 1e9) == doctest::Approx(0.018));
  CHECK(compute_dt(2.0, 0.9, 0.04, 0.010, 1e9) == doctest::Approx(0.010));
  CHECK(compute_dt(400.0, 0.8, 1.0, 1e9, 1e9) == doctest::Approx(0.002));
  CHECK(compute_dt(0.0, 0.9, 0.04, 1e9, 0.25) == doctest::Approx(0.25));
}
