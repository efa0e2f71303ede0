#ifndef WBFV_REFERENCE_HPP
#define WBFV_REFERENCE_HPP

#include <array>
#include <vector>

#include "wbfv/bfe.hpp"
#include "wbfv/burgers.hpp"
#include "wbfv/grid.hpp"
#include "wbfv/reconstruction.hpp"

namespace wbfv {

// Exact cell averages of the analytic Burgers steady state exp(x).
std::vector<double> burgers_exact_averages(const Grid& grid);

// High-accuracy rest-state area averages of the vessel (flow = 0), anchored
// at the outlet pressure; dense classical RK4 on the stationary ODE with
// per-cell Gauss sampling. Independent of the scheme's own RK family.
std::vector<double> bfe_exact_rest_area_averages(const BfeModel& model,
                                                 const Grid& grid,
                                                 double p_out, int order);

// Discrete stationary data belonging to the scheme's own family at a given
// order: the per-cell RK march chained across the mesh and averaged with the
// scheme quadrature, plus the interface trace cache.
struct DiscreteSteady {
  std::vector<StateVec> averages;
  BoundaryCache cache;
  std::vector<std::array<StateVec, 3>> nodes;
};

DiscreteSteady discrete_steady_burgers(const BurgersModel& model,
                                       const Grid& grid, int order,
                                       double left_value);

// Rest state of the vessel; the inlet anchor area is shot so that the outlet
// interface sits at the target pressure.
DiscreteSteady discrete_rest_state(const BfeModel& model, const Grid& grid,
                                   int order, double p_out);

// Mean-aggregates nested fine-mesh averages onto a coarser mesh.
std::vector<StateVec> aggregate_averages(const std::vector<StateVec>& fine,
                                         int factor);

}  // namespace wbfv

#endif
