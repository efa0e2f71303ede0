#ifndef WBFV_BURGERS_HPP
#define WBFV_BURGERS_HPP

#include "wbfv/model.hpp"

namespace wbfv {

// Exact Godunov state of dq/dt + d(q^2/2)/dx = 0 along x/t = 0.
double burgers_riemann(double ql, double qr);

// Scalar Burgers equation with the quadratic algebraic source,
//   dq/dt + q dq/dx = q^2.
// Stationary family q*(x) = C exp(x).
class BurgersModel : public SystemModel {
 public:
  int dim() const override { return 1; }

  StateVec matrix_action(const StateVec& q, const StateVec& w) const override {
    StateVec r(1);
    r[0] = q[0] * w[0];
    return r;
  }

  StateVec source(const StateVec& q, double) const override {
    StateVec r(1);
    r[0] = q[0] * q[0];
    return r;
  }

  void eigenvalues(const StateVec& q, std::span<double> out) const override {
    out[0] = q[0];
  }

  double max_abs_eigenvalue(const StateVec& q) const override {
    return std::abs(q[0]);
  }

  // q q' = q^2 reduces to q' = q (valid also at q = 0).
  StateVec stationary_rhs(double, const StateVec& q) const override {
    return q;
  }

  RiemannFan riemann(const StateVec& ql, const StateVec& qr) const override {
    RiemannFan fan;
    const double g = burgers_riemann(ql[0], qr[0]);
    fan.star_left = StateVec::scalar(g);
    fan.star_right = fan.star_left;
    fan.lam_left_outer = ql[0];
    fan.lam_left_inner = g;
    fan.lam_right_inner = g;
    fan.lam_right_outer = qr[0];
    return fan;
  }

  StateVec local_flux(const StateVec& q) const override {
    return StateVec::scalar(0.5 * q[0] * q[0]);
  }

  bool admissible(const StateVec& q) const override { return q.finite(); }

  double steady_anchor_guess(const StateVec& cell_avg) const override {
    return cell_avg[0];
  }

  StateVec steady_anchor_state(const StateVec&, double anchor,
                               double) const override {
    return StateVec::scalar(anchor);
  }
};

// Initial and boundary data of the steady-perturbation scenario.
double burgers_initial_condition(double x);
double burgers_boundary_value(double x_a);

}  // namespace wbfv

#endif
