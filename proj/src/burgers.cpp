#include "wbfv/burgers.hpp"

#include <cmath>

namespace wbfv {

double burgers_riemann(double ql, double qr) {
  if (ql > qr) {
    // Shock with speed (ql + qr) / 2.
    return (ql + qr > 0.0) ? ql : qr;
  }
  // Rarefaction; the solution at x/t = 0 is the sonic state when it opens
  // across the origin.
  if (ql >= 0.0) return ql;
  if (qr <= 0.0) return qr;
  return 0.0;
}

double burgers_initial_condition(double x) {
  const double d = x + 0.5;
  return std::exp(x) + 0.3 * std::exp(-200.0 * d * d);
}

double burgers_boundary_value(double x_a) { return std::exp(x_a); }

}  // namespace wbfv
