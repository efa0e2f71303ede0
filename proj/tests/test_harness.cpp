#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "wbfv/bfe.hpp"
#include "wbfv/config.hpp"
#include "wbfv/csv.hpp"
#include "wbfv/harness.hpp"
#include "wbfv/norms.hpp"
#include "wbfv/reference.hpp"

using namespace wbfv;

namespace {

std::string write_temp(const std::string& name, const std::string& body) {
  const std::string path = "./" + name;
  std::ofstream out(path);
  out << body;
  return path;
}

}  // namespace

TEST_CASE("config files parse with preset seeding and overrides") {
  const std::string path = write_temp("cfg_parse_test.cfg",
                                      "[model]\n"
                                      "scenario = s2\n"
                                      "order = 3\n"
                                      "wb = off\n"
                                      "epsilon_s = 0.02\n"
                                      "[grid]\n"
                                      "cells = 16\n"
                                      "[time]\n"
                                      "t_final = 2.5\n"
                                      "cfl = 0.5\n"
                                      "[bc]\n"
                                      "right_pressure_mmhg = 55\n"
                                      "[output]\n"
                                      "prefix = custom\n"
                                      "snapshots = 0.5, 1.0\n");
  const ScenarioConfig cfg = load_config(path);
  CHECK(cfg.model_kind == ScenarioConfig::ModelKind::kBfe);
  CHECK(cfg.order == 3);
  CHECK_FALSE(cfg.well_balanced);
  CHECK(cfg.cells == 16);
  CHECK(cfg.t_final == 2.5);
  CHECK(cfg.cfl == 0.5);
  CHECK(cfg.epsilon == 0.02);
  CHECK(cfg.right.value == doctest::Approx(55.0 * kMmhgToCgs));
  CHECK(cfg.prefix == "custom");
  REQUIRE(cfg.snapshots.size() == 2);
  CHECK(cfg.snapshots[1] == 1.0);
}

TEST_CASE("config errors carry the config category") {
  CHECK_THROWS_AS(load_config("missing_file.cfg"), ConfigError);
  const std::string bad = write_temp("cfg_bad_value.cfg",
                                     "[model]\nkind = burgers\n[grid]\ncells = "
                                     "many\n");
  CHECK_THROWS_AS(load_config(bad), ConfigError);
  const std::string orphan = write_temp("cfg_orphan.cfg", "key = 1\n");
  CHECK_THROWS_AS(load_config(orphan), ConfigError);
  const std::string both = write_temp("cfg_both_scales.cfg",
                                      "[model]\nscenario = s1\nstiffness_scale "
                                      "= 1.0\ncalibrate_sound_speed = 400\n");
  CHECK_THROWS_AS(load_config(both), ConfigError);
}

TEST_CASE("gravity CSV fixtures load relative to the config") {
  write_temp("cfg_poly.csv", "x,gx\n0.0,981\n5.0,-981\n10.0,981\n");
  const std::string path = write_temp("cfg_poly_test.cfg",
                                      "[model]\n"
                                      "scenario = s3\n"
                                      "[gravity]\n"
                                      "kind = polyline\n"
                                      "csv = cfg_poly.csv\n");
  const ScenarioConfig cfg = load_config(path);
  REQUIRE(cfg.gravity_samples.size() == 3);
  CHECK(cfg.gravity_samples[1].second == -981.0);
  const VesselProfile v = build_vessel(cfg);
  CHECK(v.gravity.value(2.5) == doctest::Approx(0.0));

  write_temp("cfg_headerless.csv", "0.0,981\n10.0,0\n");
  CHECK_THROWS_AS(load_xy_csv("./cfg_headerless.csv"), ConfigError);
}

TEST_CASE("CSV values round trip at 17 significant digits") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    const double v = u(rng) * std::pow(10.0, int(rng() % 40) - 20);
    CHECK(std::stod(format_double(v)) == v);
  }
}

TEST_CASE("norm relations on random data") {
  std::mt19937 rng(41);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const double dx = 10.0 / 64;
  const double omega = 10.0;
  std::vector<double> a(64), b(64);
  for (int t = 0; t < 50; ++t) {
    for (int i = 0; i < 64; ++i) {
      a[i] = u(rng);
      b[i] = u(rng);
    }
    const ErrorNorms n = error_norms(a, b, dx);
    CHECK(n.l1 <= std::sqrt(omega) * n.l2 * (1.0 + 1e-12));
    CHECK(n.l2 <= std::sqrt(omega) * n.linf * (1.0 + 1e-12));
    CHECK(n.l1 <= omega * n.linf * (1.0 + 1e-12));
    CHECK(n.l2 * n.l2 <= n.l1 * n.linf * (1.0 + 1e-12));
  }
}

TEST_CASE("identical configs give bitwise identical runs") {
  ScenarioConfig cfg = preset_scenario("burgers-steady");
  cfg.cells = 16;
  cfg.t_final = 0.5;
  const RunResult a = run_scenario(cfg, ".", false);
  const RunResult b = run_scenario(cfg, ".", false);
  REQUIRE(a.final_averages.size() == b.final_averages.size());
  for (std::size_t i = 0; i < a.final_averages.size(); ++i)
    CHECK(bitwise_equal(a.final_averages[i], b.final_averages[i]));
}

TEST_CASE("zero-length run returns the quadrature-projected data") {
  ScenarioConfig cfg = preset_scenario("burgers-steady");
  cfg.cells = 8;
  cfg.t_final = 0.0;
  const RunResult r = run_scenario(cfg, ".", false);
  const SchemeQuadrature& quad = SchemeQuadrature::get(cfg.order);
  const Grid g = build_grid(cfg);
  for (int i = 0; i < g.n; ++i) {
    double expect = 0.0;
    for (int p = 0; p < cfg.order; ++p)
      expect += quad.weight[p] *
                burgers_initial_condition(g.interface(i) + quad.node[p] * g.dx);
    CHECK(r.final_averages[i][0] == doctest::Approx(expect).epsilon(1e-15));
  }
}

TEST_CASE("wb drift stays at machine precision for a short run") {
  ScenarioConfig cfg = preset_scenario("burgers-steady");
  cfg.cells = 16;
  const WbReport rep = wb_check(cfg, 200);
  CHECK(rep.steps == 200);
  CHECK(rep.drift[0] <= 1e-13);
}

TEST_CASE("snapshot files are deterministic byte for byte") {
  ScenarioConfig cfg = preset_scenario("s1");
  cfg.cells = 4;
  cfg.t_final = 0.01;
  cfg.prefix = "det_a";
  run_scenario(cfg, "det_out", true);
  cfg.prefix = "det_b";
  run_scenario(cfg, "det_out", true);
  std::ifstream fa("det_out/det_a_t0.01.csv"), fb("det_out/det_b_t0.01.csv");
  REQUIRE(fa.good());
  REQUIRE(fb.good());
  std::stringstream sa, sb;
  sa << fa.rdbuf();
  sb << fb.rdbuf();
  CHECK(sa.str() == sb.str());
}

TEST_CASE("aggregation onto nested meshes") {
  std::vector<StateVec> fine;
  for (int i = 0; i < 8; ++i) fine.push_back(StateVec::scalar(i));
  const std::vector<StateVec> coarse = aggregate_averages(fine, 4);
  REQUIRE(coarse.size() == 2);
  CHECK(coarse[0][0] == doctest::Approx(1.5));
  CHECK(coarse[1][0] == doctest::Approx(5.5));
  CHECK_THROWS_AS(aggregate_averages(fine, 3), ConfigError);
}

TEST_CASE("stationary data survive 1000 steps on every configuration") {
  // Burgers at both orders, vessel at both orders across all gravity kinds.
  for (int order : {2, 3}) {
    ScenarioConfig cfg = preset_scenario("burgers-steady");
    cfg.order = order;
    cfg.cells = 16;
    const WbReport rep = wb_check(cfg, 1000);
    CHECK(rep.drift[0] <= 5e-13 * 3.0);  // relative to the exp(1) scale
  }
  for (const char* name : {"s1", "s2", "s3"}) {
    for (int order : {2, 3}) {
      ScenarioConfig cfg = preset_scenario(name);
      cfg.order = order;
      cfg.cells = 12;
      const WbReport rep = wb_check(cfg, 1000);
      CHECK(rep.drift[kBfeArea] <= 5e-13 * 0.4);
      CHECK(rep.drift[kBfeFlow] <= 1e-10);
    }
  }
}

TEST_CASE("plain solver keeps its design order on smooth transients") {
  // Well-balancing off, smooth early-time evolution of the perturbed
  // profile; self-reference on an 8x finer mesh.
  for (int order : {2, 3}) {
    ScenarioConfig fine = preset_scenario("burgers-steady");
    fine.order = order;
    fine.well_balanced = false;
    fine.t_final = 0.05;  // before the perturbation steepens
    fine.cells = 2048;
    const RunResult ref = run_scenario(fine, ".", false);

    double prev = 0.0;
    std::vector<double> orders;
    for (int n : {128, 256, 512}) {
      ScenarioConfig cfg = fine;
      cfg.cells = n;
      const RunResult r = run_scenario(cfg, ".", false);
      const std::vector<StateVec> agg =
          aggregate_averages(ref.final_averages, 2048 / n);
      const double dx = 2.0 / n;
      const ErrorNorms e = error_norms(component_values(r.final_averages, 0),
                                       component_values(agg, 0), dx);
      if (prev > 0.0) orders.push_back(order_between(prev, e.l1));
      prev = e.l1;
    }
    for (double o : orders) CHECK(o == doctest::Approx(order).epsilon(0.2));
  }
}

TEST_CASE("wall parameter profiles load from CSV samples") {
  write_temp("cfg_a0.csv", "x,a0\n0,0.3\n10,0.2\n");
  const std::string path = write_temp("cfg_wall_csv.cfg",
                                      "[model]\n"
                                      "scenario = s1\n"
                                      "a0_csv = cfg_a0.csv\n");
  const ScenarioConfig cfg = load_config(path);
  const VesselProfile v = build_vessel(cfg);
  CHECK(v.a0.value(5.0) == doctest::Approx(0.25));
  CHECK(v.a0.derivative(2.0) == doctest::Approx(-0.01));
  // Samples that stop short of the outlet are rejected.
  write_temp("cfg_a0_short.csv", "x,a0\n0,0.3\n7,0.2\n");
  const std::string bad = write_temp("cfg_wall_bad.cfg",
                                     "[model]\n"
                                     "scenario = s1\n"
                                     "a0_csv = cfg_a0_short.csv\n");
  CHECK_THROWS_AS(build_vessel(load_config(bad)), ConfigError);
}

TEST_CASE("cli exit codes: 0 success, 2 config, 3 solver") {
  auto run = [](const std::string& args) {
    const int rc = std::system(("./wbfv " + args + " >/dev/null 2>&1").c_str());
    return WEXITSTATUS(rc);
  };
  CHECK(run("wb-check --scenario burgers-steady --cells 8 --steps 5") == 0);
  CHECK(run("run --config does_not_exist.cfg") == 2);
  CHECK(run("run --scenario no-such-scenario") == 2);
  CHECK(run("run") == 2);  // missing scenario selection
}
