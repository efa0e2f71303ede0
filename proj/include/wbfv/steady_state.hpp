#ifndef WBFV_STEADY_STATE_HPP
#define WBFV_STEADY_STATE_HPP

#include <array>

#include "wbfv/model.hpp"
#include "wbfv/quadrature.hpp"

namespace wbfv {

// Local stationary solution of one cell, sampled at the scheme's spatial
// quadrature nodes. Nodes are connected by single explicit RK steps of size
// dx / (order - 1) starting from the anchor at the left interface.
struct CellSteady {
  int order = 2;
  std::array<StateVec, 3> node{};
  double anchor = 0.0;
  bool fallback = false;
  int newton_iters = 0;
};

struct SteadyStats {
  long newton_iters = 0;
  long fallbacks = 0;
};

// One explicit RK step for dQ/dx = stationary_rhs: Heun for order 2,
// Kutta's third-order rule for order 3.
StateVec rk_step(const SystemModel& m, double x0, const StateVec& q0, double h,
                 int order);

// Anchor Newton solve: the quadrature average of the marched profile must
// match the anchored component of the cell average. On divergence or a sonic
// point the profile falls back to the constant cell average (flagged).
CellSteady fit_cell_steady(const SystemModel& m, const StateVec& cell_avg,
                           double x_left, double dx, int order,
                           const double* warm_anchor = nullptr,
                           SteadyStats* stats = nullptr);

// Marches a full profile from an explicit anchor state (no Newton); used to
// construct discrete stationary initial data.
void march_cell(const SystemModel& m, const StateVec& anchor_state,
                double x_left, double dx, int order,
                std::array<StateVec, 3>& out);

}  // namespace wbfv

#endif
