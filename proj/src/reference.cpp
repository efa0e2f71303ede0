#include "wbfv/reference.hpp"

#include <cmath>
#include <functional>

#include "wbfv/errors.hpp"
#include "wbfv/quadrature.hpp"
#include "wbfv/steady_state.hpp"

namespace wbfv {

std::vector<double> burgers_exact_averages(const Grid& grid) {
  std::vector<double> avg(grid.n);
  for (int i = 0; i < grid.n; ++i)
    avg[i] =
        (std::exp(grid.interface(i + 1)) - std::exp(grid.interface(i))) /
        grid.dx;
  return avg;
}

namespace {

// Scalar rest-state ODE for the area, parameters taken pointwise from the
// prescribed profiles.
double rest_rhs(const BfeModel& m, double x, double area) {
  StateVec q(8);
  q[kBfeArea] = area;
  m.steady_impose_structure(q, x);
  return m.stationary_rhs(x, q)[kBfeArea];
}

double rk4_scalar(const BfeModel& m, double x, double a, double h) {
  const double k1 = rest_rhs(m, x, a);
  const double k2 = rest_rhs(m, x + 0.5 * h, a + 0.5 * h * k1);
  const double k3 = rest_rhs(m, x + 0.5 * h, a + 0.5 * h * k2);
  const double k4 = rest_rhs(m, x + h, a + h * k3);
  return a + h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

double rest_pressure(const BfeModel& m, double x, double area) {
  StateVec q(8);
  q[kBfeArea] = area;
  m.steady_impose_structure(q, x);
  return m.pressure(q);
}

// Marches a0 from x = 0 through the sorted sample positions; nsub RK4
// substeps between consecutive samples.
std::vector<double> dense_march(const BfeModel& m, double a0,
                                const std::vector<double>& samples, int nsub) {
  std::vector<double> out;
  out.reserve(samples.size());
  double x = 0.0;
  double a = a0;
  for (double target : samples) {
    const double gap = target - x;
    if (gap > 0.0) {
      const double h = gap / nsub;
      for (int k = 0; k < nsub; ++k) a = rk4_scalar(m, x + k * h, a, h);
      x = target;
    }
    out.push_back(a);
  }
  return out;
}

double shoot_inlet_area(const BfeModel& m, double length, double p_out,
                        const std::function<double(double)>& outlet_pressure) {
  // Secant on the inlet area; the outlet pressure grows monotonically with it.
  double a0 = m.state_at_pressure(0.0, p_out, 0.0, 0.0)[kBfeArea];
  double a1 = a0 * 1.001;
  double f0 = outlet_pressure(a0) - p_out;
  double f1 = outlet_pressure(a1) - p_out;
  for (int it = 0; it < 80; ++it) {
    if (std::abs(f1) <= 4e-16 * std::abs(p_out)) return a1;
    const double denom = f1 - f0;
    if (denom == 0.0) break;
    const double a2 = a1 - f1 * (a1 - a0) / denom;
    if (!(a2 > 0.0) || !std::isfinite(a2)) break;
    a0 = a1;
    f0 = f1;
    a1 = a2;
    f1 = outlet_pressure(a1) - p_out;
  }
  if (std::abs(f1) > 1e-8 * std::abs(p_out))
    throw SolverError("rest-state shooting failed to converge");
  (void)length;
  return a1;
}

}  // namespace

std::vector<double> bfe_exact_rest_area_averages(const BfeModel& model,
                                                 const Grid& grid,
                                                 double p_out, int order) {
  const double length = grid.x_b;
  const int nsub = std::max(16, 8192 / std::max(1, grid.n * order));

  // Sample the dense solution at the scheme's own quadrature nodes and
  // average with the scheme weights: the reference then lives in the same
  // discrete representation as the computed cell data.
  const SchemeQuadrature& quad = SchemeQuadrature::get(order);
  std::vector<double> samples;
  samples.reserve(grid.n * order);
  for (int i = 0; i < grid.n; ++i)
    for (int k = 0; k < order; ++k)
      samples.push_back(grid.interface(i) + quad.node[k] * grid.dx);

  auto outlet_pressure = [&](double a_in) {
    const std::vector<double> vals =
        dense_march(model, a_in, {length}, 8192);
    return rest_pressure(model, length, vals[0]);
  };
  const double a_in = shoot_inlet_area(model, length, p_out, outlet_pressure);

  const std::vector<double> areas = dense_march(model, a_in, samples, nsub);
  std::vector<double> avg(grid.n, 0.0);
  for (int i = 0; i < grid.n; ++i) {
    double acc = 0.0;
    for (int k = 0; k < order; ++k) acc += quad.weight[k] * areas[i * order + k];
    avg[i] = acc;
  }
  return avg;
}

namespace {

DiscreteSteady assemble_from_nodes(const Grid& grid, int order,
                                   const std::vector<std::array<StateVec, 3>>& nodes,
                                   int vdim) {
  const SchemeQuadrature& quad = SchemeQuadrature::get(order);
  DiscreteSteady out;
  out.nodes = nodes;
  out.averages.assign(grid.n, StateVec(vdim));
  out.cache = BoundaryCache::sized(grid.n + 1, vdim);
  for (int i = 0; i < grid.n; ++i) {
    StateVec acc(vdim);
    for (int p = 0; p < order; ++p) acc += quad.weight[p] * nodes[i][p];
    out.averages[i] = acc;
  }
  for (int j = 0; j < grid.n; ++j) {
    out.cache.plus[j] = nodes[j][0];
    out.cache.minus[j] = j > 0 ? nodes[j - 1][order - 1] : nodes[j][0];
  }
  out.cache.minus[grid.n] = nodes[grid.n - 1][order - 1];
  out.cache.plus[grid.n] = nodes[grid.n - 1][order - 1];
  return out;
}

}  // namespace

DiscreteSteady discrete_steady_burgers(const BurgersModel& model,
                                       const Grid& grid, int order,
                                       double left_value) {
  std::vector<std::array<StateVec, 3>> nodes(grid.n);
  StateVec anchor = StateVec::scalar(left_value);
  for (int i = 0; i < grid.n; ++i) {
    march_cell(model, anchor, grid.interface(i), grid.dx, order, nodes[i]);
    anchor = nodes[i][order - 1];
  }
  return assemble_from_nodes(grid, order, nodes, 1);
}

DiscreteSteady discrete_rest_state(const BfeModel& model, const Grid& grid,
                                   int order, double p_out) {
  std::vector<std::array<StateVec, 3>> nodes(grid.n);
  StateVec rest_avg(8);  // zero flow; only the flow slot matters here

  auto march_chain = [&](double a_in) {
    StateVec anchor = model.steady_anchor_state(rest_avg, a_in, 0.0);
    for (int i = 0; i < grid.n; ++i) {
      march_cell(model, anchor, grid.interface(i), grid.dx, order, nodes[i]);
      anchor = nodes[i][order - 1];
    }
    return model.pressure(nodes[grid.n - 1][order - 1]);
  };
  const double a_in =
      shoot_inlet_area(model, grid.x_b, p_out,
                       [&](double a) { return march_chain(a); });
  march_chain(a_in);
  return assemble_from_nodes(grid, order, nodes, 8);
}

std::vector<StateVec> aggregate_averages(const std::vector<StateVec>& fine,
                                         int factor) {
  if (factor < 1 || fine.size() % factor != 0)
    throw ConfigError("aggregate_averages: mesh sizes are not nested");
  std::vector<StateVec> coarse;
  coarse.reserve(fine.size() / factor);
  for (std::size_t i = 0; i < fine.size(); i += factor) {
    StateVec acc(fine[0].size());
    for (int k = 0; k < factor; ++k) acc += fine[i + k];
    coarse.push_back((1.0 / factor) * acc);
  }
  return coarse;
}

}  // namespace wbfv
