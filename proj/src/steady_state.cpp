#include "wbfv/steady_state.hpp"

#include <cmath>
#include <limits>

#include "wbfv/errors.hpp"

namespace wbfv {

StateVec rk_step(const SystemModel& m, double x0, const StateVec& q0, double h,
                 int order) {
  if (order == 2) {
    // Heun: c = (0, 1), b = (1/2, 1/2).
    const StateVec k1 = m.stationary_rhs(x0, q0);
    const StateVec k2 = m.stationary_rhs(x0 + h, q0 + h * k1);
    return q0 + (0.5 * h) * (k1 + k2);
  }
  // Kutta's third-order rule: c = (0, 1/2, 1), a21 = 1/2, a31 = -1, a32 = 2,
  // b = (1/6, 2/3, 1/6).
  const StateVec k1 = m.stationary_rhs(x0, q0);
  const StateVec k2 = m.stationary_rhs(x0 + 0.5 * h, q0 + (0.5 * h) * k1);
  const StateVec k3 =
      m.stationary_rhs(x0 + h, q0 + h * ((-1.0) * k1 + 2.0 * k2));
  return q0 + (h / 6.0) * (k1 + 4.0 * k2 + k3);
}

void march_cell(const SystemModel& m, const StateVec& anchor_state,
                double x_left, double dx, int order,
                std::array<StateVec, 3>& out) {
  const double h = dx / (order - 1);
  out[0] = anchor_state;
  for (int p = 0; p + 1 < order; ++p) {
    out[p + 1] = rk_step(m, x_left + p * h, out[p], h, order);
    m.steady_impose_structure(out[p + 1], x_left + (p + 1) * h);
  }
}

CellSteady fit_cell_steady(const SystemModel& m, const StateVec& cell_avg,
                           double x_left, double dx, int order,
                           const double* warm_anchor, SteadyStats* stats) {
  const SchemeQuadrature& quad = SchemeQuadrature::get(order);
  CellSteady out;
  out.order = order;

  auto fallback = [&]() {
    for (int p = 0; p < order; ++p) out.node[p] = cell_avg;
    out.anchor = cell_avg[0];
    out.fallback = true;
    if (stats) {
      stats->newton_iters += out.newton_iters;
      stats->fallbacks += 1;
    }
    return out;
  };

  // Weighted average of the anchored component along the marched profile.
  std::array<StateVec, 3> nodes;
  auto march_residual = [&](double anchor) {
    march_cell(m, m.steady_anchor_state(cell_avg, anchor, x_left), x_left, dx,
               order, nodes);
    double avg = 0.0;
    for (int p = 0; p < order; ++p) avg += quad.weight[p] * nodes[p][0];
    return avg - cell_avg[0];
  };

  const double scale = std::max(1.0, std::abs(cell_avg[0]));
  const double tol_accept = 1e-12 * scale;
  const double tol_polish = 4e-16 * scale;

  double a = warm_anchor ? *warm_anchor : m.steady_anchor_guess(cell_avg);
  double best_a = a;
  double best_r = std::numeric_limits<double>::infinity();
  std::array<StateVec, 3> best_nodes;

  try {
    for (int it = 0; it < 25; ++it) {
      const double r = march_residual(a);
      ++out.newton_iters;
      if (std::abs(r) < std::abs(best_r)) {
        best_r = r;
        best_a = a;
        best_nodes = nodes;
      }
      if (std::abs(r) <= tol_polish) break;
      const double delta = 1e-7 * std::max(std::abs(a), 1e-30);
      const double r2 = march_residual(a + delta);
      const double slope = (r2 - r) / delta;
      if (slope == 0.0 || !std::isfinite(slope)) break;
      double next = a - r / slope;
      if (!std::isfinite(next)) break;
      if (next == a) break;
      a = next;
    }
  } catch (const SolverError&) {
    if (!(std::abs(best_r) <= tol_accept)) return fallback();
  }

  if (!(std::abs(best_r) <= tol_accept)) return fallback();

  out.anchor = best_a;
  for (int p = 0; p < order; ++p) out.node[p] = best_nodes[p];
  if (stats) stats->newton_iters += out.newton_iters;
  return out;
}

}  // namespace wbfv
