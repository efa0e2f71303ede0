// Command-line front end: run | converge | wb-check | bench.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "wbfv/csv.hpp"
#include "wbfv/errors.hpp"
#include "wbfv/harness.hpp"

namespace {

using nlohmann::json;

void log_event(const json& j) { std::cerr << j.dump() << "\n"; }

struct CommonArgs {
  std::string config;
  std::string scenario;
  int order = 0;
  int cells = 0;
  std::string wb;
  std::string out = ".";
  int threads = 1;
  double t_final = -1.0;
};

void add_common(CLI::App* cmd, CommonArgs& a) {
  cmd->add_option("--config", a.config, "scenario config file");
  cmd->add_option("--scenario", a.scenario,
                  "built-in scenario: burgers-steady, s1, s2, s3");
  cmd->add_option("--order", a.order, "method order (2 or 3)")
      ->check(CLI::IsMember({2, 3}));
  cmd->add_option("--cells", a.cells, "number of mesh cells");
  cmd->add_option("--wb", a.wb, "well-balanced solver on/off")
      ->check(CLI::IsMember({"on", "off"}));
  cmd->add_option("--out", a.out, "output directory");
  cmd->add_option("--threads", a.threads, "worker threads for refinements");
  cmd->add_option("--t-final", a.t_final, "override final time [s]");
}

wbfv::ScenarioConfig resolve(const CommonArgs& a) {
  if (!a.config.empty() && !a.scenario.empty())
    throw wbfv::ConfigError("give either --config or --scenario, not both");
  wbfv::ScenarioConfig cfg;
  if (!a.config.empty())
    cfg = wbfv::load_config(a.config);
  else if (!a.scenario.empty())
    cfg = wbfv::preset_scenario(a.scenario);
  else
    throw wbfv::ConfigError("one of --config or --scenario is required");
  if (a.order) cfg.order = a.order;
  if (a.cells) cfg.cells = a.cells;
  if (!a.wb.empty()) cfg.well_balanced = a.wb == "on";
  if (a.t_final >= 0.0) cfg.t_final = a.t_final;
  cfg.threads = a.threads;
  return cfg;
}

int cmd_run(const CommonArgs& a) {
  const wbfv::ScenarioConfig cfg = resolve(a);
  const wbfv::RunResult res = wbfv::run_scenario(cfg, a.out, true);
  log_event({{"event", "run_complete"},
             {"scenario", cfg.name},
             {"cells", cfg.cells},
             {"order", cfg.order},
             {"wb", cfg.well_balanced},
             {"steps", res.diag.steps},
             {"newton_iters", res.diag.steady.newton_iters},
             {"fallbacks", res.diag.steady.fallbacks},
             {"max_deviation", res.diag.max_deviation},
             {"seconds", res.wall_seconds}});
  for (const auto& f : res.files) std::cout << f << "\n";
  return 0;
}

int cmd_converge(const CommonArgs& a, int refinements) {
  const wbfv::ScenarioConfig cfg = resolve(a);
  const wbfv::ConvergeResult r =
      wbfv::converge_scenario(cfg, refinements, a.threads);
  std::printf("# %s, order %d, wb %s\n", cfg.name.c_str(), cfg.order,
              cfg.well_balanced ? "on" : "off");
  for (const auto& v : r.variables) {
    std::printf("%-4s %8s %12s %12s %12s %8s %8s\n", v.name.c_str(), "cells",
                "L1", "L2", "Linf", "O(L1)", "O(Linf)");
    for (std::size_t k = 0; k < r.cells.size(); ++k) {
      std::printf("%-4s %8d %12.4e %12.4e %12.4e", "", r.cells[k],
                  v.norms[k].l1, v.norms[k].l2, v.norms[k].linf);
      if (k)
        std::printf(" %8.2f %8.2f\n", v.order_l1[k - 1], v.order_linf[k - 1]);
      else
        std::printf(" %8s %8s\n", "-", "-");
    }
  }
  std::filesystem::create_directories(a.out);
  const std::string path =
      (std::filesystem::path(a.out) / (cfg.prefix + "_convergence.csv"))
          .string();
  wbfv::write_converge_csv(path, r);
  log_event({{"event", "converge_complete"},
             {"scenario", cfg.name},
             {"file", path}});
  return 0;
}

int cmd_wb_check(const CommonArgs& a, long steps) {
  const wbfv::ScenarioConfig cfg = resolve(a);
  const wbfv::WbReport rep = wbfv::wb_check(cfg, steps);
  std::printf("# wb-check %s, order %d, wb %s, %ld steps\n", cfg.name.c_str(),
              cfg.order, cfg.well_balanced ? "on" : "off", rep.steps);
  for (std::size_t c = 0; c < rep.drift.size(); ++c)
    std::printf("component %zu: max drift %.6e\n", c, rep.drift[c]);
  if (cfg.model_kind == wbfv::ScenarioConfig::ModelKind::kBfe) {
    std::printf("flow drift     %.6e cm^3/s\n", rep.flow_drift);
    std::printf("pressure drift %.6e mmHg\n", rep.pressure_drift_mmhg);
    std::printf("hydrostatic residual (rel) %.6e\n", rep.dpdx_rel);
  }
  log_event({{"event", "wb_check_complete"},
             {"scenario", cfg.name},
             {"steps", rep.steps},
             {"flow_drift", rep.flow_drift},
             {"pressure_drift_mmhg", rep.pressure_drift_mmhg},
             {"dpdx_rel", rep.dpdx_rel}});
  return 0;
}

int cmd_bench(const CommonArgs& a, int refinements) {
  wbfv::ScenarioConfig cfg = resolve(a);
  cfg.threads = 1;  // timing mode is strictly single-threaded
  const auto rows = wbfv::bench_scenario(cfg, refinements);
  std::printf("# bench %s, order %d\n", cfg.name.c_str(), cfg.order);
  std::printf("%8s %4s %12s %12s %12s\n", "cells", "wb", "seconds", "L2(A)",
              "L2(q)");
  for (const auto& r : rows)
    std::printf("%8d %4s %12.4e %12.4e %12.4e\n", r.cells,
                r.well_balanced ? "on" : "off", r.seconds, r.l2_area,
                r.l2_flow);
  std::filesystem::create_directories(a.out);
  const std::string path =
      (std::filesystem::path(a.out) / (cfg.prefix + "_bench.csv")).string();
  wbfv::write_bench_csv(path, rows);
  log_event({{"event", "bench_complete"}, {"scenario", cfg.name}, {"file", path}});
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"well-balanced path-conservative finite-volume solver"};
  app.require_subcommand(1);

  CommonArgs run_args, conv_args, wb_args, bench_args;
  int refinements = 4;
  int bench_refinements = 4;
  long steps = 0;

  CLI::App* run = app.add_subcommand("run", "advance a scenario, emit CSV snapshots");
  add_common(run, run_args);
  CLI::App* conv = app.add_subcommand("converge", "empirical convergence table");
  add_common(conv, conv_args);
  conv->add_option("--refinements", refinements, "number of doublings (default 4)");
  CLI::App* wb = app.add_subcommand("wb-check", "stationary preservation drift");
  add_common(wb, wb_args);
  wb->add_option("--steps", steps, "step count (default: run to t_final)");
  CLI::App* bench = app.add_subcommand("bench", "error vs cost, wb on and off");
  add_common(bench, bench_args);
  bench->add_option("--refinements", bench_refinements, "number of doublings");

  try {
    app.parse(argc, argv);
    if (run->parsed()) return cmd_run(run_args);
    if (conv->parsed()) return cmd_converge(conv_args, refinements);
    if (wb->parsed()) return cmd_wb_check(wb_args, steps);
    if (bench->parsed()) return cmd_bench(bench_args, bench_refinements);
    return 2;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  } catch (const wbfv::ConfigError& e) {
    log_event({{"event", "config_error"}, {"what", e.what()}});
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const wbfv::SolverError& e) {
    log_event({{"event", "solver_error"}, {"what", e.what()}});
    std::cerr << "solver error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    log_event({{"event", "error"}, {"what", e.what()}});
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
