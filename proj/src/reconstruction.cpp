#include "wbfv/reconstruction.hpp"

namespace wbfv {

void reconstruct_cell(const StateVec& avg, const StateVec& left_plus,
                      const StateVec& right_minus, double dx, int order,
                      StateVec* out) {
  if (order == 2) {
    const StateVec half_slope = 0.5 * (right_minus - left_plus);
    out[0] = avg - half_slope;
    out[1] = avg + half_slope;
    return;
  }
  // Quadratic a + b xi + c xi^2 in the offset xi from the left interface,
  // pinned to the cached traces with the exact cell mean.
  const StateVec& a = left_plus;
  const StateVec b_dx = 3.0 * avg - 2.0 * left_plus - right_minus;   // b * dx/2
  const StateVec c_dx2 = left_plus + right_minus - 2.0 * avg;        // c * dx^2/3
  out[0] = a;
  out[1] = a + b_dx + 0.75 * c_dx2;  // xi = dx/2
  out[2] = a + 2.0 * b_dx + 3.0 * c_dx2;
}

BoundaryCache bootstrap_cache(const std::function<StateVec(double)>& ic,
                              const Grid& grid) {
  BoundaryCache c;
  c.minus.reserve(grid.n + 1);
  c.plus.reserve(grid.n + 1);
  for (int i = 0; i <= grid.n; ++i) {
    const StateVec v = ic(grid.interface(i));
    c.minus.push_back(v);
    c.plus.push_back(v);
  }
  return c;
}

}  // namespace wbfv
