#include "wbfv/update.hpp"

#include <algorithm>

#include "wbfv/errors.hpp"
#include "wbfv/quadrature.hpp"

namespace wbfv {

Fluctuations interface_fluctuations(const SystemModel& m, const StateVec& ql,
                                    const StateVec& qr) {
  Fluctuations f;
  f.fan = m.riemann(ql, qr);
  if (m.dim() > 1 &&
      (f.fan.lam_left_inner >= 0.0 || f.fan.lam_right_inner <= 0.0))
    throw SolverError("interface_fluctuations: supercritical star region");
  f.minus = m.local_flux(f.fan.star_left) - m.local_flux(ql);
  f.plus = m.local_flux(qr) - m.local_flux(f.fan.star_right);
  return f;
}

InterfaceIntegral integrate_interface(const SystemModel& m,
                                      std::span<const StateVec> ql_nodes,
                                      std::span<const StateVec> qr_nodes,
                                      int order) {
  const SchemeQuadrature& q = SchemeQuadrature::get(order);
  InterfaceIntegral out;
  out.dbar_minus = StateVec(m.dim());
  out.dbar_plus = StateVec(m.dim());
  for (int s = 0; s < order; ++s) {
    const Fluctuations f =
        interface_fluctuations(m, ql_nodes[s], qr_nodes[s]);
    out.dbar_minus += q.weight[s] * f.minus;
    out.dbar_plus += q.weight[s] * f.plus;
    if (s == order - 1) {
      out.trace_minus = f.fan.star_left;
      out.trace_plus = f.fan.star_right;
    }
  }
  return out;
}

InterfaceIntegral time_integrated_fluctuations(const SystemModel& m,
                                               const SpaceTimePoly& left,
                                               const SpaceTimePoly& right) {
  const int P = left.order;
  std::array<StateVec, 3> ql, qr;
  for (int s = 0; s < P; ++s) {
    ql[s] = left.at(s, P - 1);
    qr[s] = right.at(s, 0);
  }
  return integrate_interface(m, {ql.data(), static_cast<std::size_t>(P)},
                             {qr.data(), static_cast<std::size_t>(P)}, P);
}

VolumeTerms volume_terms(const SystemModel& m, const SpaceTimePoly& poly,
                         const StateVec* qstar_nodal, double x_left, double dx,
                         double dt) {
  const RefElement& r = RefElement::get(poly.order);
  const int P = poly.order;
  const int v = m.dim();

  VolumeTerms out{StateVec(v), StateVec(v), StateVec(v), StateVec(v)};

  // Stationary spatial derivative, reused for both quadratures so that the
  // two accumulations cancel exactly when the deviations vanish.
  double dqs[3][kMaxComponents];
  if (qstar_nodal) {
    for (int p = 0; p < P; ++p)
      for (int c = 0; c < v; ++c) {
        double acc = 0.0;
        for (int j = 0; j < P; ++j) acc += r.d1(p, j) * qstar_nodal[j][c];
        dqs[p][c] = acc;
      }
  }

  // Star-state integrands are time-constant; evaluate once per spatial node
  // but accumulate over the same (time, space) sweep as the main terms.
  StateVec ncs_p[3], srcs_p[3];
  if (qstar_nodal) {
    for (int p = 0; p < P; ++p) {
      StateVec ders(v);
      for (int c = 0; c < v; ++c) ders[c] = dqs[p][c];
      ncs_p[p] = m.matrix_action(qstar_nodal[p], ders);
      srcs_p[p] = m.source(qstar_nodal[p], x_left + dx * r.node[p]);
    }
  }

  double b[kMaxComponents] = {}, s[kMaxComponents] = {};
  double bs[kMaxComponents] = {}, ss[kMaxComponents] = {};
  for (int st = 0; st < P; ++st)
    for (int p = 0; p < P; ++p) {
      const double w = r.weight[st] * r.weight[p];
      const double x = x_left + dx * r.node[p];
      StateVec der(v);
      for (int c = 0; c < v; ++c) {
        double dd = 0.0;
        for (int j = 0; j < P; ++j)
          dd += r.d1(p, j) * poly.deviation[st * P + j][c];
        der[c] = qstar_nodal ? dd + dqs[p][c] : dd;
      }
      const StateVec nc = m.matrix_action(poly.at(st, p), der);
      const StateVec src = m.source(poly.at(st, p), x);
      for (int c = 0; c < v; ++c) {
        b[c] += (w * dt) * nc[c];
        s[c] += w * src[c];
      }
      if (qstar_nodal) {
        for (int c = 0; c < v; ++c) {
          bs[c] += (w * dt) * ncs_p[p][c];
          ss[c] += w * srcs_p[p][c];
        }
      }
    }
  for (int c = 0; c < v; ++c) {
    out.b[c] = b[c];
    out.s[c] = s[c];
    out.b_star[c] = bs[c];
    out.s_star[c] = ss[c];
  }
  return out;
}

StateVec update_cell(const StateVec& q, const VolumeTerms& vol,
                     const StateVec& dbar_minus_right,
                     const StateVec& dbar_plus_left, double dx, double dt) {
  StateVec next = q;
  next -= (1.0 / dx) * (vol.b - vol.b_star);
  next -= (dt / dx) * (dbar_minus_right + dbar_plus_left);
  next += dt * (vol.s - vol.s_star);
  return next;
}

double compute_dt(double nu, double cfl, double dx, double remaining,
                  double dt_max) {
  double dt = (nu > 0.0) ? cfl * dx / nu : dt_max;
  dt = std::min(dt, dt_max);
  return std::min(dt, remaining);
}

}  // namespace wbfv
