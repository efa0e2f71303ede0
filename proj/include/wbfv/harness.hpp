#ifndef WBFV_HARNESS_HPP
#define WBFV_HARNESS_HPP

#include <string>
#include <vector>

#include "wbfv/config.hpp"
#include "wbfv/norms.hpp"
#include "wbfv/solver.hpp"

namespace wbfv {

struct RunResult {
  std::vector<StateVec> final_averages;
  RunDiagnostics diag;
  double wall_seconds = 0.0;  // stepping only, I/O excluded
  std::vector<std::string> files;
};

// Executes the scenario, emitting one CSV snapshot per requested time (the
// final time is always included when writing is enabled).
RunResult run_scenario(const ScenarioConfig& cfg, const std::string& out_dir,
                       bool write_files);

struct ConvergeVariable {
  std::string name;
  std::vector<ErrorNorms> norms;    // one entry per refinement
  std::vector<double> order_l1;     // between consecutive refinements
  std::vector<double> order_linf;
};

struct ConvergeResult {
  std::vector<int> cells;
  std::vector<double> seconds;
  std::vector<ConvergeVariable> variables;
};

// Runs cells, 2*cells, ..., 2^(refinements-1)*cells and measures errors
// against the scenario's reference (analytic rest state, or a 4x-finer
// self-reference for scenarios without one).
ConvergeResult converge_scenario(const ScenarioConfig& cfg, int refinements,
                                 int threads);

struct WbReport {
  long steps = 0;
  std::vector<double> drift;  // per component, max over cells
  double flow_drift = 0.0;    // convenience alias (component 1 / scalar)
  double pressure_drift_mmhg = 0.0;  // blood-flow model only
  double dpdx_rel = 0.0;  // hydrostatic consistency of the initial profile
  RunDiagnostics diag;
};

// Initializes with the scheme's own discrete stationary data and measures
// the drift after `steps` steps (or up to t_final when steps == 0).
WbReport wb_check(const ScenarioConfig& cfg, long steps);

struct BenchRow {
  int cells = 0;
  bool well_balanced = true;
  double seconds = 0.0;
  double l2_area = 0.0;
  double l2_flow = 0.0;
};

// Error-versus-cost ladder over both solver variants at each refinement.
std::vector<BenchRow> bench_scenario(const ScenarioConfig& cfg,
                                     int refinements);

void write_converge_csv(const std::string& path, const ConvergeResult& r);
void write_bench_csv(const std::string& path, const std::vector<BenchRow>& rows);

}  // namespace wbfv

#endif
