#ifndef WBFV_BFE_HPP
#define WBFV_BFE_HPP

#include "wbfv/model.hpp"
#include "wbfv/profiles.hpp"

namespace wbfv {

// Component layout of the 8-variable blood-flow state.
enum BfeComp {
  kBfeArea = 0,
  kBfeFlow = 1,
  kBfePsi = 2,
  kBfeA0 = 3,
  kBfeH0 = 4,
  kBfeEe = 5,
  kBfeEc = 6,
  kBfePr = 7
};

// Hyperbolized 1D blood-flow system with friction, gravity and spatially
// varying wall properties. The wall parameters and the reference pressure
// ride along as constant-in-time state components; gravity enters through
// the source only.
class BfeModel : public SystemModel {
 public:
  explicit BfeModel(VesselProfile profile) : profile_(std::move(profile)) {}

  const VesselProfile& profile() const { return profile_; }

  int dim() const override { return 8; }

  StateVec matrix_action(const StateVec& q, const StateVec& w) const override;
  StateVec source(const StateVec& q, double x) const override;
  double source_linear_coeff(int comp) const override {
    return comp == kBfePsi ? -1.0 / profile_.epsilon : 0.0;
  }

  void eigenvalues(const StateVec& q, std::span<double> out) const override;
  double max_abs_eigenvalue(const StateVec& q) const override;

  StateVec stationary_rhs(double x, const StateVec& q) const override;

  // Two-rarefaction approximate solver. Wall parameters are transported
  // unchanged across the outer waves; the star region satisfies equal flow
  // and equal total pressure across the standing contact.
  RiemannFan riemann(const StateVec& ql, const StateVec& qr) const override;

  StateVec local_flux(const StateVec& q) const override;

  bool admissible(const StateVec& q) const override;

  double steady_anchor_guess(const StateVec& cell_avg) const override {
    return cell_avg[kBfeArea];
  }
  StateVec steady_anchor_state(const StateVec& cell_avg, double anchor,
                               double x) const override;
  void steady_impose_structure(StateVec& q, double x) const override;

  // Helpers shared by boundary conditions, diagnostics and output.
  WallParams wall_of(const StateVec& q) const {
    return WallParams{q[kBfeA0], q[kBfeH0], q[kBfeEe], q[kBfeEc]};
  }
  double velocity(const StateVec& q) const { return q[kBfeFlow] / q[kBfeArea]; }
  double sound_speed(const StateVec& q) const;
  double pressure(const StateVec& q) const;

  // Full state at position x with given total pressure, flow and psi; the
  // wall data come from the prescribed profiles.
  StateVec state_at_pressure(double x, double p_total, double flow,
                             double psi) const;
  // Same, but reusing the wall data and reference pressure of `like`.
  StateVec state_with_pressure_like(const StateVec& like, double p_total,
                                    double flow, double psi) const;

  // Boundary states pinned by the physical condition and connected to the
  // interior trace across the wave family that enters the domain (the same
  // one-wave relations the interface solver uses).
  StateVec noflow_boundary_state(const StateVec& interior) const;
  StateVec pressure_boundary_state(const StateVec& interior,
                                   double p_total) const;

 private:
  VesselProfile profile_;
};

}  // namespace wbfv

#endif
