#ifndef WBFV_GRID_HPP
#define WBFV_GRID_HPP

#include "wbfv/errors.hpp"

namespace wbfv {

// Uniform 1D mesh of n cells on [x_a, x_b].
struct Grid {
  double x_a = 0.0;
  double x_b = 1.0;
  int n = 0;
  double dx = 0.0;

  static Grid uniform(double a, double b, int n_cells) {
    if (!(b > a)) throw ConfigError("grid: x_b must exceed x_a");
    if (n_cells < 4) throw ConfigError("grid: at least 4 cells required");
    Grid g;
    g.x_a = a;
    g.x_b = b;
    g.n = n_cells;
    g.dx = (b - a) / n_cells;
    return g;
  }

  double interface(int i) const { return x_a + i * dx; }        // i = 0..n
  double center(int i) const { return x_a + (i + 0.5) * dx; }   // i = 0..n-1
};

}  // namespace wbfv

#endif
