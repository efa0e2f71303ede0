#include "wbfv/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <future>
#include <limits>

#include "wbfv/bfe.hpp"
#include "wbfv/csv.hpp"
#include "wbfv/errors.hpp"
#include "wbfv/reference.hpp"

namespace wbfv {

namespace {

double seconds_since(
    const std::chrono::steady_clock::time_point& t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

std::string snapshot_name(const std::string& prefix, double t) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%s_t%g.csv", prefix.c_str(), t);
  return buf;
}

void write_snapshot(const ScenarioConfig& cfg, const Solver& solver,
                    const std::string& path) {
  const Grid& grid = solver.grid();
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
  if (cfg.model_kind == ScenarioConfig::ModelKind::kBurgers) {
    header = {"x", "q"};
    for (int i = 0; i < grid.n; ++i)
      rows.push_back({grid.center(i), solver.averages()[i][0]});
  } else {
    header = {"x",  "A",  "q",  "psi", "A0", "h0",
              "Ee", "Ec", "pr", "u",   "c",  "p"};
    const auto& bfe = dynamic_cast<const BfeModel&>(solver.model());
    for (int i = 0; i < grid.n; ++i) {
      const StateVec& q = solver.averages()[i];
      std::vector<double> row{grid.center(i)};
      for (int c = 0; c < 8; ++c) row.push_back(q[c]);
      row.push_back(bfe.velocity(q));
      row.push_back(bfe.sound_speed(q));
      row.push_back(bfe.pressure(q));
      rows.push_back(std::move(row));
    }
  }
  write_csv(path, header, rows);
}

}  // namespace

RunResult run_scenario(const ScenarioConfig& cfg, const std::string& out_dir,
                       bool write_files) {
  const auto model = build_model(cfg);
  const Grid grid = build_grid(cfg);
  Solver solver(*model, grid, solver_options(cfg));
  solver.set_initial_condition(initial_condition(cfg, *model));

  std::vector<double> stops = cfg.snapshots;
  stops.push_back(cfg.t_final);
  std::sort(stops.begin(), stops.end());
  stops.erase(std::unique(stops.begin(), stops.end()), stops.end());

  RunResult res;
  double wall = 0.0;
  for (double t : stops) {
    if (t < 0.0 || t > cfg.t_final) continue;
    const auto t0 = std::chrono::steady_clock::now();
    solver.advance_to(t);
    wall += seconds_since(t0);
    if (write_files) {
      std::filesystem::create_directories(out_dir);
      const std::string path =
          (std::filesystem::path(out_dir) / snapshot_name(cfg.prefix, t))
              .string();
      write_snapshot(cfg, solver, path);
      res.files.push_back(path);
    }
  }
  res.final_averages = solver.averages();
  res.diag = solver.diagnostics();
  res.wall_seconds = wall;
  return res;
}

namespace {

struct SingleRun {
  std::vector<StateVec> averages;
  double seconds = 0.0;
};

SingleRun timed_run(const ScenarioConfig& cfg) {
  const auto model = build_model(cfg);
  Solver solver(*model, build_grid(cfg), solver_options(cfg));
  solver.set_initial_condition(initial_condition(cfg, *model));
  const auto t0 = std::chrono::steady_clock::now();
  solver.advance_to(cfg.t_final);
  SingleRun r;
  r.seconds = seconds_since(t0);
  r.averages = solver.averages();
  return r;
}

// Reference cell averages of the tracked variables for one mesh size.
struct ReferenceData {
  std::vector<double> area_or_q;
  std::vector<double> flow;  // empty for the scalar model
};

ReferenceData reference_for(const ScenarioConfig& cfg, int cells,
                            const std::vector<StateVec>* self_fine,
                            int self_fine_cells) {
  ReferenceData ref;
  ScenarioConfig c = cfg;
  c.cells = cells;
  const Grid grid = build_grid(c);
  if (cfg.model_kind == ScenarioConfig::ModelKind::kBurgers) {
    ref.area_or_q = burgers_exact_averages(grid);
    return ref;
  }
  if (cfg.reference == ScenarioConfig::Reference::kAnalytic) {
    const auto model = build_model(c);
    const auto& bfe = dynamic_cast<const BfeModel&>(*model);
    ref.area_or_q = bfe_exact_rest_area_averages(bfe, grid, cfg.right.value, cfg.order);
    ref.flow.assign(grid.n, 0.0);
    return ref;
  }
  const std::vector<StateVec> agg =
      aggregate_averages(*self_fine, self_fine_cells / cells);
  ref.area_or_q = component_values(agg, kBfeArea);
  ref.flow = component_values(agg, kBfeFlow);
  return ref;
}

}  // namespace

ConvergeResult converge_scenario(const ScenarioConfig& cfg, int refinements,
                                 int threads) {
  if (refinements < 1) throw ConfigError("converge: need at least one mesh");
  ConvergeResult out;
  for (int k = 0; k < refinements; ++k)
    out.cells.push_back(cfg.cells << k);

  // Self-reference (when no analytic one exists): 4x the finest mesh.
  std::vector<StateVec> self_fine;
  int self_fine_cells = 0;
  const bool need_self =
      cfg.model_kind == ScenarioConfig::ModelKind::kBfe &&
      cfg.reference == ScenarioConfig::Reference::kSelfFine;
  if (need_self) {
    ScenarioConfig fine = cfg;
    fine.cells = out.cells.back() * 4;
    fine.well_balanced = true;
    self_fine_cells = fine.cells;
    self_fine = timed_run(fine).averages;
  }

  std::vector<SingleRun> runs(refinements);
  auto run_one = [&](int k) {
    ScenarioConfig c = cfg;
    c.cells = out.cells[k];
    runs[k] = timed_run(c);
  };
  if (threads > 1) {
    std::vector<std::future<void>> futs;
    for (int k = 0; k < refinements; ++k)
      futs.push_back(std::async(std::launch::async, run_one, k));
    for (auto& f : futs) f.get();
  } else {
    for (int k = 0; k < refinements; ++k) run_one(k);
  }

  const bool burgers = cfg.model_kind == ScenarioConfig::ModelKind::kBurgers;
  ConvergeVariable v0, v1;
  v0.name = burgers ? "q" : "A";
  v1.name = "q";
  for (int k = 0; k < refinements; ++k) {
    const ReferenceData ref =
        reference_for(cfg, out.cells[k], &self_fine, self_fine_cells);
    const double dx = (cfg.x_b - cfg.x_a) / out.cells[k];
    const std::vector<double> primary =
        component_values(runs[k].averages, burgers ? 0 : kBfeArea);
    v0.norms.push_back(error_norms(primary, ref.area_or_q, dx));
    if (!burgers) {
      const std::vector<double> flow =
          component_values(runs[k].averages, kBfeFlow);
      std::vector<double> flow_ref = ref.flow;
      if (flow_ref.empty()) flow_ref.assign(flow.size(), 0.0);
      v1.norms.push_back(error_norms(flow, flow_ref, dx));
    }
    out.seconds.push_back(runs[k].seconds);
  }
  for (int k = 1; k < refinements; ++k) {
    v0.order_l1.push_back(order_between(v0.norms[k - 1].l1, v0.norms[k].l1));
    v0.order_linf.push_back(
        order_between(v0.norms[k - 1].linf, v0.norms[k].linf));
    if (!burgers) {
      v1.order_l1.push_back(order_between(v1.norms[k - 1].l1, v1.norms[k].l1));
      v1.order_linf.push_back(
          order_between(v1.norms[k - 1].linf, v1.norms[k].linf));
    }
  }
  out.variables.push_back(std::move(v0));
  if (!burgers) out.variables.push_back(std::move(v1));
  return out;
}

WbReport wb_check(const ScenarioConfig& cfg, long steps) {
  const auto model = build_model(cfg);
  const Grid grid = build_grid(cfg);
  Solver solver(*model, grid, solver_options(cfg));

  WbReport rep;
  std::vector<StateVec> initial;
  if (cfg.model_kind == ScenarioConfig::ModelKind::kBurgers) {
    const auto& bm = dynamic_cast<const BurgersModel&>(*model);
    DiscreteSteady ds =
        discrete_steady_burgers(bm, grid, cfg.order, cfg.left.value);
    initial = ds.averages;
    solver.set_initial_state(ds.averages, ds.cache);
  } else {
    const auto& bfe = dynamic_cast<const BfeModel&>(*model);
    if (cfg.right.kind != BoundarySpec::Kind::kFixedPressure)
      throw ConfigError("wb_check: vessel scenarios need a pressure outlet");
    DiscreteSteady ds =
        discrete_rest_state(bfe, grid, cfg.order, cfg.right.value);
    initial = ds.averages;

    // Hydrostatic consistency of the discrete profile: the pressure
    // difference across each cell against the exact mean gravity forcing.
    double worst = 0.0;
    const double scale =
        bfe.profile().rho * std::max(1.0, bfe.profile().gravity.max_abs_value());
    for (int i = 0; i < grid.n; ++i) {
      const double p_left = bfe.pressure(ds.nodes[i][0]);
      const double p_right = bfe.pressure(ds.nodes[i][cfg.order - 1]);
      const double mean_g =
          bfe.profile().gravity.average(grid.interface(i), grid.interface(i + 1));
      const double lhs = (p_right - p_left) / grid.dx;
      worst = std::max(worst, std::abs(lhs - bfe.profile().rho * mean_g));
    }
    rep.dpdx_rel = worst / scale;
    solver.set_initial_state(ds.averages, ds.cache);
  }

  if (steps > 0) {
    for (long k = 0; k < steps; ++k)
      solver.step_once(std::numeric_limits<double>::infinity());
  } else {
    solver.advance_to(cfg.t_final);
  }

  const int v = model->dim();
  rep.drift.assign(v, 0.0);
  for (int i = 0; i < grid.n; ++i)
    for (int c = 0; c < v; ++c)
      rep.drift[c] = std::max(
          rep.drift[c], std::abs(solver.averages()[i][c] - initial[i][c]));
  rep.flow_drift = v > 1 ? rep.drift[kBfeFlow] : rep.drift[0];
  if (cfg.model_kind == ScenarioConfig::ModelKind::kBfe) {
    const auto& bfe = dynamic_cast<const BfeModel&>(*model);
    double dp = 0.0;
    for (int i = 0; i < grid.n; ++i)
      dp = std::max(dp, std::abs(bfe.pressure(solver.averages()[i]) -
                                 bfe.pressure(initial[i])));
    rep.pressure_drift_mmhg = dp / kMmhgToCgs;
  }
  rep.steps = solver.diagnostics().steps;
  rep.diag = solver.diagnostics();
  return rep;
}

std::vector<BenchRow> bench_scenario(const ScenarioConfig& cfg,
                                     int refinements) {
  std::vector<BenchRow> rows;
  std::vector<int> cells;
  for (int k = 0; k < refinements; ++k) cells.push_back(cfg.cells << k);

  std::vector<StateVec> self_fine;
  int self_fine_cells = 0;
  if (cfg.model_kind == ScenarioConfig::ModelKind::kBfe &&
      cfg.reference == ScenarioConfig::Reference::kSelfFine) {
    ScenarioConfig fine = cfg;
    fine.cells = cells.back() * 4;
    fine.well_balanced = true;
    self_fine_cells = fine.cells;
    self_fine = timed_run(fine).averages;
  }

  for (int n : cells) {
    for (bool wb : {true, false}) {
      ScenarioConfig c = cfg;
      c.cells = n;
      c.well_balanced = wb;
      const SingleRun r = timed_run(c);
      const ReferenceData ref =
          reference_for(cfg, n, &self_fine, self_fine_cells);
      const double dx = (cfg.x_b - cfg.x_a) / n;
      BenchRow row;
      row.cells = n;
      row.well_balanced = wb;
      row.seconds = r.seconds;
      const bool burgers =
          cfg.model_kind == ScenarioConfig::ModelKind::kBurgers;
      row.l2_area =
          error_norms(component_values(r.averages, burgers ? 0 : kBfeArea),
                      ref.area_or_q, dx)
              .l2;
      if (!burgers) {
        std::vector<double> flow_ref = ref.flow;
        if (flow_ref.empty()) flow_ref.assign(r.averages.size(), 0.0);
        row.l2_flow =
            error_norms(component_values(r.averages, kBfeFlow), flow_ref, dx)
                .l2;
      }
      rows.push_back(row);
    }
  }
  return rows;
}

void write_converge_csv(const std::string& path, const ConvergeResult& r) {
  std::vector<std::string> header{"cells", "seconds"};
  for (const auto& v : r.variables) {
    header.push_back(v.name + "_l1");
    header.push_back(v.name + "_l2");
    header.push_back(v.name + "_linf");
    header.push_back(v.name + "_order_l1");
    header.push_back(v.name + "_order_linf");
  }
  std::vector<std::vector<double>> rows;
  for (std::size_t k = 0; k < r.cells.size(); ++k) {
    std::vector<double> row{static_cast<double>(r.cells[k]), r.seconds[k]};
    for (const auto& v : r.variables) {
      row.push_back(v.norms[k].l1);
      row.push_back(v.norms[k].l2);
      row.push_back(v.norms[k].linf);
      row.push_back(k == 0 ? std::nan("") : v.order_l1[k - 1]);
      row.push_back(k == 0 ? std::nan("") : v.order_linf[k - 1]);
    }
    rows.push_back(std::move(row));
  }
  write_csv(path, header, rows);
}

void write_bench_csv(const std::string& path,
                     const std::vector<BenchRow>& rows) {
  std::vector<std::vector<double>> data;
  for (const auto& r : rows)
    data.push_back({static_cast<double>(r.cells), r.well_balanced ? 1.0 : 0.0,
                    r.seconds, r.l2_area, r.l2_flow});
  write_csv(path, {"cells", "wb", "seconds", "l2_area", "l2_flow"}, data);
}

}  // namespace wbfv
