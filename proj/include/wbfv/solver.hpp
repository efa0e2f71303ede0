#ifndef WBFV_SOLVER_HPP
#define WBFV_SOLVER_HPP

#include <functional>
#include <memory>
#include <vector>

#include "wbfv/grid.hpp"
#include "wbfv/model.hpp"
#include "wbfv/predictor.hpp"
#include "wbfv/reconstruction.hpp"
#include "wbfv/steady_state.hpp"
#include "wbfv/update.hpp"

namespace wbfv {

struct BoundarySpec {
  enum class Kind {
    kDirichlet,      // fixed scalar state (Burgers inflow)
    kTransparent,    // zero-order extrapolated ghost
    kReflective,     // no-flow: copy state, negate the flow component
    kFixedPressure,  // ghost area from the tube law at a target pressure
  };
  Kind kind = Kind::kTransparent;
  double value = 0.0;  // Dirichlet state or total pressure [dyn/cm^2]
};

struct SolverOptions {
  int order = 2;
  bool well_balanced = true;
  double cfl = 0.9;
  double dt_max = 1.0;
  BoundarySpec left;
  BoundarySpec right;
};

struct RunDiagnostics {
  long steps = 0;
  SteadyStats steady;
  double max_deviation = 0.0;
  double last_dt = 0.0;
  double last_nu = 0.0;
};

// One-mesh explicit driver: per step it identifies the local stationary
// profiles, reconstructs, predicts in space-time, integrates the interface
// fluctuations and applies the cell update. Cells are independent within
// each phase.
class Solver {
 public:
  Solver(const SystemModel& model, Grid grid, SolverOptions opt);

  // Scheme-quadrature projection of pointwise initial data, plus the
  // interface trace cache.
  void set_initial_condition(const std::function<StateVec(double)>& ic);
  void set_initial_state(std::vector<StateVec> averages, BoundaryCache cache);

  void advance_to(double t_stop);
  void step_once(double t_stop);

  double time() const { return t_; }
  const std::vector<StateVec>& averages() const { return avg_; }
  const BoundaryCache& cache() const { return cache_; }
  const RunDiagnostics& diagnostics() const { return diag_; }
  const SystemModel& model() const { return model_; }
  const Grid& grid() const { return grid_; }
  const SolverOptions& options() const { return opt_; }

 private:
  double wave_speed_bound() const;
  StateVec ghost_state(const BoundarySpec& bc, const StateVec& interior) const;
  InterfaceIntegral constrained_boundary(
      const BoundarySpec& bc, bool left_side,
      std::span<const StateVec> interior_nodes) const;

  const SystemModel& model_;
  Grid grid_;
  SolverOptions opt_;
  Predictor predictor_;
  double t_ = 0.0;

  std::vector<StateVec> avg_;
  std::vector<StateVec> avg_next_;
  BoundaryCache cache_;
  std::vector<CellSteady> steady_;
  std::vector<std::array<StateVec, 3>> recon_;
  std::vector<SpaceTimePoly> poly_;
  std::vector<InterfaceIntegral> iface_;
  std::vector<double> warm_anchor_;
  std::vector<char> have_warm_;
  RunDiagnostics diag_;
};

}  // namespace wbfv

#endif
