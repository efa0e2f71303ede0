#ifndef WBFV_TEST_MODELS_HPP
#define WBFV_TEST_MODELS_HPP

#include "wbfv/burgers.hpp"
#include "wbfv/model.hpp"

namespace wbfv::test {

// Constant-coefficient advection; stationary solutions are constants.
class LinearAdvection : public SystemModel {
 public:
  explicit LinearAdvection(double speed) : a_(speed) {}
  int dim() const override { return 1; }
  StateVec matrix_action(const StateVec&, const StateVec& w) const override {
    return StateVec::scalar(a_ * w[0]);
  }
  StateVec source(const StateVec&, double) const override { return StateVec(1); }
  void eigenvalues(const StateVec&, std::span<double> out) const override {
    out[0] = a_;
  }
  double max_abs_eigenvalue(const StateVec&) const override {
    return std::abs(a_);
  }
  StateVec stationary_rhs(double, const StateVec&) const override {
    return StateVec(1);
  }
  RiemannFan riemann(const StateVec& ql, const StateVec& qr) const override {
    RiemannFan f;
    f.star_left = a_ > 0.0 ? ql : qr;
    f.star_right = f.star_left;
    f.lam_left_outer = f.lam_left_inner = a_;
    f.lam_right_inner = f.lam_right_outer = a_;
    return f;
  }
  StateVec local_flux(const StateVec& q) const override {
    return StateVec::scalar(a_ * q[0]);
  }
  bool admissible(const StateVec& q) const override { return q.finite(); }
  double steady_anchor_guess(const StateVec& c) const override { return c[0]; }
  StateVec steady_anchor_state(const StateVec&, double v, double) const override {
    return StateVec::scalar(v);
  }

 private:
  double a_;
};

// Burgers flux without the algebraic source; classical conservation law.
class BurgersNoSource : public BurgersModel {
 public:
  StateVec source(const StateVec&, double) const override { return StateVec(1); }
  StateVec stationary_rhs(double, const StateVec&) const override {
    return StateVec(1);
  }
};

}  // namespace wbfv::test

#endif
