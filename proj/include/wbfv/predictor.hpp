#ifndef WBFV_PREDICTOR_HPP
#define WBFV_PREDICTOR_HPP

#include <array>
#include <vector>

#include "wbfv/model.hpp"
#include "wbfv/small_linalg.hpp"

namespace wbfv {

// Reference-element operators for the tensor-product Lagrange basis
// theta_{s,p}(xi, tau) = l_p(xi) l_s(tau) on the scheme nodes ({0,1} for
// order 2, {0,1/2,1} for order 3). All entries are exact integrals on
// [0,1]^2, independent of dx and dt. Flattened index l = s * P + p.
struct RefElement {
  int order = 2;
  int n = 4;  // P^2
  std::array<double, 3> node{};
  std::array<double, 3> weight{};
  std::array<double, 81> end_mass{};    // [theta_k, theta_l] at tau = 1
  std::array<double, 81> time_stiff{};  // <d_tau theta_k, theta_l>
  std::array<double, 81> mass{};        // <theta_k, theta_l>
  std::array<double, 27> init_trace{};  // [theta_k, psi_p] at tau = 0
  std::array<double, 9> dxi{};          // 1D discrete spatial derivative

  double m1(int k, int l) const { return end_mass[k * n + l]; }
  double kt(int k, int l) const { return time_stiff[k * n + l]; }
  double mm(int k, int l) const { return mass[k * n + l]; }
  double f0(int k, int p) const { return init_trace[k * order + p]; }
  double d1(int p, int j) const { return dxi[p * order + j]; }

  // Lagrange basis in product form; exactly delta at the nodes.
  double basis1d(int i, double x) const;
  double dbasis1d(int i, double x) const;

  static const RefElement& get(int order);
};

// Space-time prediction of one cell: nodal values of the prediction and of
// its deviation from the local stationary solution.
struct SpaceTimePoly {
  int order = 2;
  std::array<StateVec, 9> node{};       // prediction at (s, p)
  std::array<StateVec, 9> deviation{};  // d = prediction - stationary

  const StateVec& at(int s, int p) const { return node[s * order + p]; }
  double max_deviation() const {
    double m = 0.0;
    for (int l = 0; l < order * order; ++l)
      m = std::max(m, deviation[l].max_abs());
    return m;
  }
};

StateVec evaluate_prediction(const SpaceTimePoly& poly, double xi, double tau);

// Local implicit space-time evolution of the deviations, by a fixed-point
// iteration with exactly `order` passes. The component-diagonal linear part
// of the source sits on the left-hand side; everything else is lagged.
class Predictor {
 public:
  Predictor(const SystemModel& m, int order);

  // Factor the left-hand-side blocks for a new time step.
  void set_step(double dt, double dx);

  // qstar == nullptr disables well-balancing: deviations are the full state
  // and the stationary counterterms are dropped.
  SpaceTimePoly predict(const StateVec* w_nodal, const StateVec* qstar_nodal,
                        double x_left, int cell_index) const;

 private:
  const SystemModel& model_;
  const RefElement& ref_;
  int vdim_;
  double dt_ = 0.0;
  double dx_ = 0.0;
  std::array<int, kMaxComponents> factor_of_comp_{};
  std::vector<LuFactors> factors_;
  std::vector<double> lambda_;
};

}  // namespace wbfv

#endif
