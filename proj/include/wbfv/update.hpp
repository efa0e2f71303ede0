#ifndef WBFV_UPDATE_HPP
#define WBFV_UPDATE_HPP

#include <span>

#include "wbfv/model.hpp"
#include "wbfv/predictor.hpp"

namespace wbfv {

// Jump terms of one interface Riemann problem: the part assigned to the
// left cell (minus) and to the right cell (plus). For systems with a
// standing contact the parameter jump is assigned to neither side.
struct Fluctuations {
  StateVec minus;
  StateVec plus;
  RiemannFan fan;
};

Fluctuations interface_fluctuations(const SystemModel& m, const StateVec& ql,
                                    const StateVec& qr);

// Time-averaged fluctuations from per-node interface traces, plus the
// end-of-step star traces that seed the next reconstruction.
struct InterfaceIntegral {
  StateVec dbar_minus;
  StateVec dbar_plus;
  StateVec trace_minus;  // left-of-interface state at the end of the step
  StateVec trace_plus;   // right-of-interface state at the end of the step
};

InterfaceIntegral integrate_interface(const SystemModel& m,
                                      std::span<const StateVec> ql_nodes,
                                      std::span<const StateVec> qr_nodes,
                                      int order);

InterfaceIntegral time_integrated_fluctuations(const SystemModel& m,
                                               const SpaceTimePoly& left,
                                               const SpaceTimePoly& right);

// Space-time quadrature of the non-conservative products (integrated form)
// and of the sources (averaged form). qstar_nodal == nullptr drops the
// stationary counterterms.
struct VolumeTerms {
  StateVec b;
  StateVec b_star;
  StateVec s;
  StateVec s_star;
};

VolumeTerms volume_terms(const SystemModel& m, const SpaceTimePoly& poly,
                         const StateVec* qstar_nodal, double x_left, double dx,
                         double dt);

StateVec update_cell(const StateVec& q, const VolumeTerms& vol,
                     const StateVec& dbar_minus_right,
                     const StateVec& dbar_plus_left, double dx, double dt);

// CFL time step from the largest wave speed, clipped to the remaining time.
double compute_dt(double nu, double cfl, double dx, double remaining,
                  double dt_max);

}  // namespace wbfv

#endif
