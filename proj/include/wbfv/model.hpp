#ifndef WBFV_MODEL_HPP
#define WBFV_MODEL_HPP

#include <span>
#include <vector>

#include "wbfv/state.hpp"

namespace wbfv {

// Interface Riemann solution: constant states adjacent to the standing wave,
// plus the outer/inner wave speeds of the two genuinely nonlinear families.
// Scalar models carry the single Godunov state in both slots.
struct RiemannFan {
  StateVec star_left;
  StateVec star_right;
  double lam_left_outer = 0.0;   // fastest left-going speed, at the left state
  double lam_left_inner = 0.0;   // left family speed at the left star state
  double lam_right_inner = 0.0;  // right family speed at the right star state
  double lam_right_outer = 0.0;  // fastest right-going speed, at the right state
};

// Quasi-linear system  dQ/dt + A(Q) dQ/dx = S(Q, x)  with v components.
// Implementations supply the matrix action, the source, the eigenvalues and
// the reduced stationary ODE in closed form.
class SystemModel {
 public:
  virtual ~SystemModel() = default;

  virtual int dim() const = 0;

  // A(Q) * w. Exactly linear in w.
  virtual StateVec matrix_action(const StateVec& q, const StateVec& w) const = 0;

  virtual StateVec source(const StateVec& q, double x) const = 0;

  // Coefficient of the component-diagonal linear part of the source; the
  // space-time predictor treats it implicitly.
  virtual double source_linear_coeff(int comp) const {
    (void)comp;
    return 0.0;
  }

  virtual void eigenvalues(const StateVec& q, std::span<double> out) const = 0;
  virtual double max_abs_eigenvalue(const StateVec& q) const = 0;

  // Right-hand side of dQ*/dx for the stationary problem A(Q*)Q*' = S(Q*).
  // Throws SolverError at a sonic point.
  virtual StateVec stationary_rhs(double x, const StateVec& q) const = 0;

  virtual RiemannFan riemann(const StateVec& ql, const StateVec& qr) const = 0;

  // Flux of the conservative sub-system with the non-evolved components of q
  // held fixed; fluctuations are flux differences of this function.
  virtual StateVec local_flux(const StateVec& q) const = 0;

  virtual bool admissible(const StateVec& q) const = 0;

  // Hooks for the per-cell stationary identification: the scalar anchor
  // unknown, the full anchor state built from it, and the per-node structure
  // (prescribed parameter profiles) re-imposed after each integration step.
  virtual double steady_anchor_guess(const StateVec& cell_avg) const = 0;
  virtual StateVec steady_anchor_state(const StateVec& cell_avg, double anchor,
                                       double x) const = 0;
  virtual void steady_impose_structure(StateVec& q, double x) const {
    (void)q;
    (void)x;
  }
};

StateVec quasilinear_residual(const SystemModel& m, const StateVec& q,
                              const StateVec& dqdx, double x);

// Largest wave speed over a collection of states. Throws on empty input.
double max_wave_speed(const SystemModel& m, std::span<const StateVec> states);

// Debug utility: dense assembly of A(Q) through the matrix action.
std::vector<double> dense_matrix(const SystemModel& m, const StateVec& q);

// Diagnostic: integral of A(Psi(s)) dPsi/ds along the segment path joining
// ql and qr, by 5-point Gauss quadrature.
StateVec segment_path_integral(const SystemModel& m, const StateVec& ql,
                               const StateVec& qr);

}  // namespace wbfv

#endif
