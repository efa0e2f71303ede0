#ifndef WBFV_RECONSTRUCTION_HPP
#define WBFV_RECONSTRUCTION_HPP

#include <functional>
#include <vector>

#include "wbfv/grid.hpp"
#include "wbfv/model.hpp"

namespace wbfv {

// Interface-adjacent states from the Riemann problems of the previous step:
// minus[i] is the trace just left of interface i (owned by cell i-1),
// plus[i] just right of it (owned by cell i).
struct BoundaryCache {
  std::vector<StateVec> minus;
  std::vector<StateVec> plus;

  static BoundaryCache sized(int n_interfaces, int vdim) {
    BoundaryCache c;
    c.minus.assign(n_interfaces, StateVec(vdim));
    c.plus.assign(n_interfaces, StateVec(vdim));
    return c;
  }
};

// Nodal values of the cell polynomial at the scheme's spatial quadrature
// nodes, built from the cell average and the cached boundary states. The
// polynomial interpolates the cached states and reproduces the average
// exactly; out must hold `order` entries.
void reconstruct_cell(const StateVec& avg, const StateVec& left_plus,
                      const StateVec& right_minus, double dx, int order,
                      StateVec* out);

// Initial cache: one-sided limits of the initial condition at each
// interface (equal traces for continuous data).
BoundaryCache bootstrap_cache(const std::function<StateVec(double)>& ic,
                              const Grid& grid);

}  // namespace wbfv

#endif
