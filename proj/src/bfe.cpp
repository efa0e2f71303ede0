#include "wbfv/bfe.hpp"

#include <cmath>
#include <sstream>

#include "wbfv/errors.hpp"

namespace wbfv {

StateVec BfeModel::matrix_action(const StateVec& q, const StateVec& w) const {
  const double area = q[kBfeArea];
  const double u = q[kBfeFlow] / area;
  const TubeLawEval ev = profile_.law.eval(area, q[kBfePsi], wall_of(q));
  const double aor = area / profile_.rho;
  const double c2 = aor * ev.d_area;

  StateVec out(8);
  out[kBfeArea] = w[kBfeFlow];
  out[kBfeFlow] = (c2 - u * u) * w[kBfeArea] + 2.0 * u * w[kBfeFlow] +
                  aor * (ev.d_psi * w[kBfePsi] + ev.d_a0 * w[kBfeA0] +
                         ev.d_h0 * w[kBfeH0] + ev.d_ee * w[kBfeEe] +
                         ev.d_ec * w[kBfeEc] + w[kBfePr]);
  out[kBfePsi] = -w[kBfeFlow] / profile_.epsilon;
  return out;
}

StateVec BfeModel::source(const StateVec& q, double x) const {
  const double area = q[kBfeArea];
  StateVec s(8);
  s[kBfeFlow] = profile_.friction * q[kBfeFlow] / area +
                area * profile_.gravity.value(x);
  s[kBfePsi] = -q[kBfePsi] / profile_.epsilon;
  return s;
}

void BfeModel::eigenvalues(const StateVec& q, std::span<double> out) const {
  const double u = velocity(q);
  const double c = sound_speed(q);
  out[0] = u - c;
  for (int i = 1; i < 7; ++i) out[i] = 0.0;
  out[7] = u + c;
}

double BfeModel::max_abs_eigenvalue(const StateVec& q) const {
  return std::abs(velocity(q)) + sound_speed(q);
}

double BfeModel::sound_speed(const StateVec& q) const {
  return std::sqrt(
      profile_.law.sound_speed_sq(q[kBfeArea], wall_of(q), profile_.rho));
}

double BfeModel::pressure(const StateVec& q) const {
  return q[kBfePr] +
         profile_.law.eval(q[kBfeArea], q[kBfePsi], wall_of(q)).zeta;
}

StateVec BfeModel::stationary_rhs(double x, const StateVec& q) const {
  const double area = q[kBfeArea];
  if (!(area > 0.0)) throw SolverError("stationary_rhs: non-positive area");
  const double u = q[kBfeFlow] / area;
  const TubeLawEval ev = profile_.law.eval(area, q[kBfePsi], wall_of(q));
  const double aor = area / profile_.rho;
  const double c2 = aor * ev.d_area;
  const double denom = c2 - u * u;
  if (std::abs(denom) <= 1e-12 * std::max(c2, u * u)) {
    std::ostringstream os;
    os << "stationary_rhs: sonic point at x = " << x;
    throw SolverError(os.str());
  }

  const double da0 = profile_.a0.derivative(x);
  const double dh0 = profile_.h0.derivative(x);
  const double dee = profile_.ee.derivative(x);
  const double dec = profile_.ec.derivative(x);
  const double dpr = profile_.pr.derivative(x);

  const double forcing = profile_.friction * q[kBfeFlow] / area +
                         area * profile_.gravity.value(x) -
                         aor * (ev.d_a0 * da0 + ev.d_h0 * dh0 + ev.d_ee * dee +
                                ev.d_ec * dec + dpr);

  StateVec rhs(8);
  rhs[kBfeArea] = forcing / denom;
  rhs[kBfeA0] = da0;
  rhs[kBfeH0] = dh0;
  rhs[kBfeEe] = dee;
  rhs[kBfeEc] = dec;
  rhs[kBfePr] = dpr;
  return rhs;
}

StateVec BfeModel::local_flux(const StateVec& q) const {
  const double area = q[kBfeArea];
  StateVec f(8);
  f[kBfeArea] = q[kBfeFlow];
  f[kBfeFlow] = q[kBfeFlow] * q[kBfeFlow] / area +
                profile_.law.flux_potential(area, wall_of(q), profile_.rho);
  f[kBfePsi] = -q[kBfeFlow] / profile_.epsilon;
  return f;
}

bool BfeModel::admissible(const StateVec& q) const {
  return q.finite() && q[kBfeArea] > 0.0 && q[kBfeA0] > 0.0 &&
         q[kBfeH0] > 0.0 && q[kBfeEe] > 0.0 && q[kBfeEc] > 0.0;
}

StateVec BfeModel::steady_anchor_state(const StateVec& cell_avg, double anchor,
                                       double x) const {
  StateVec q(8);
  q[kBfeArea] = anchor;
  q[kBfeFlow] = cell_avg[kBfeFlow];
  q[kBfePsi] = 0.0;
  steady_impose_structure(q, x);
  return q;
}

void BfeModel::steady_impose_structure(StateVec& q, double x) const {
  q[kBfeA0] = profile_.a0.value(x);
  q[kBfeH0] = profile_.h0.value(x);
  q[kBfeEe] = profile_.ee.value(x);
  q[kBfeEc] = profile_.ec.value(x);
  q[kBfePr] = profile_.pr.value(x);
}

StateVec BfeModel::state_at_pressure(double x, double p_total, double flow,
                                     double psi) const {
  const WallParams w = profile_.wall_at(x);
  const double pr = profile_.pr.value(x);
  StateVec q(8);
  q[kBfeArea] = profile_.law.invert(p_total - pr, w);
  q[kBfeFlow] = flow;
  q[kBfePsi] = psi;
  q[kBfeA0] = w.a0;
  q[kBfeH0] = w.h0;
  q[kBfeEe] = w.ee;
  q[kBfeEc] = w.ec;
  q[kBfePr] = pr;
  return q;
}

StateVec BfeModel::state_with_pressure_like(const StateVec& like,
                                            double p_total, double flow,
                                            double psi) const {
  StateVec q = like;
  q[kBfeArea] = profile_.law.invert(p_total - like[kBfePr], wall_of(like));
  q[kBfeFlow] = flow;
  q[kBfePsi] = psi;
  return q;
}

StateVec BfeModel::noflow_boundary_state(const StateVec& interior) const {
  const double area = interior[kBfeArea];
  const double u = velocity(interior);
  const double ct = sound_speed(interior);
  // Entering right-family relation u_b = u + ct (A_b / A - 1) with u_b = 0.
  const double area_b = area * (1.0 - u / ct);
  if (!(area_b > 0.0))
    throw SolverError("noflow boundary: non-positive area");
  StateVec b = interior;
  b[kBfeArea] = area_b;
  b[kBfeFlow] = 0.0;
  b[kBfePsi] = interior[kBfePsi] + (area - area_b) / profile_.epsilon;
  return b;
}

StateVec BfeModel::pressure_boundary_state(const StateVec& interior,
                                           double p_total) const {
  const double area = interior[kBfeArea];
  const double u = velocity(interior);
  const double ct = sound_speed(interior);
  const WallParams w = wall_of(interior);
  double zeta_t = p_total - interior[kBfePr];
  double area_b = profile_.law.invert(zeta_t, w);
  if (profile_.law.gamma() != 0.0) {
    // psi rides the same invariant and feeds back into the pressure.
    for (int it = 0; it < 3; ++it) {
      const double psi_b =
          interior[kBfePsi] + (area - area_b) / profile_.epsilon;
      area_b = profile_.law.invert(zeta_t - profile_.law.gamma() * psi_b, w);
    }
  }
  // Entering left-family relation.
  const double u_b = u + ct * (1.0 - area_b / area);
  StateVec b = interior;
  b[kBfeArea] = area_b;
  b[kBfeFlow] = area_b * u_b;
  b[kBfePsi] = interior[kBfePsi] + (area - area_b) / profile_.epsilon;
  if (std::abs(u_b) >= sound_speed(b))
    throw SolverError("pressure boundary: supercritical state");
  return b;
}

namespace {

struct Side {
  double area;
  double u;
  double psi;
  double pr;
  WallParams wall;
  double ct;  // frozen sound speed at the initial area
};

}  // namespace

RiemannFan BfeModel::riemann(const StateVec& ql, const StateVec& qr) const {
  // Trivial problem: keep the data bitwise so that equal traces produce
  // exactly zero fluctuations.
  if (bitwise_equal(ql, qr)) {
    RiemannFan fan;
    fan.star_left = ql;
    fan.star_right = qr;
    const double u = velocity(ql);
    const double c = sound_speed(ql);
    fan.lam_left_outer = u - c;
    fan.lam_left_inner = u - c;
    fan.lam_right_inner = u + c;
    fan.lam_right_outer = u + c;
    return fan;
  }

  const TubeLaw& law = profile_.law;
  const double rho = profile_.rho;
  const double eps = profile_.epsilon;

  auto make_side = [&](const StateVec& q) {
    Side s;
    s.area = q[kBfeArea];
    s.u = velocity(q);
    s.psi = q[kBfePsi];
    s.pr = q[kBfePr];
    s.wall = wall_of(q);
    s.ct = std::sqrt(law.sound_speed_sq(s.area, s.wall, rho));
    return s;
  };
  const Side L = make_side(ql);
  const Side R = make_side(qr);

  if (std::abs(L.u) >= L.ct || std::abs(R.u) >= R.ct)
    throw SolverError("riemann: supercritical input state");

  // Flow equality across the contact ties the two star areas together:
  //   (ctR/AR) Ar^2 + (uR - ctR) Ar + (ctL/AL) a^2 - (uL + ctL) a = 0.
  const double kl = L.ct / L.area;
  const double kr = R.ct / R.area;
  auto star_right_area = [&](double a, bool& ok) {
    const double cof = kl * a * a - (L.u + L.ct) * a;
    const double disc = (R.u - R.ct) * (R.u - R.ct) - 4.0 * kr * cof;
    if (disc < 0.0) {
      ok = false;
      return 0.0;
    }
    const double ar = ((R.ct - R.u) + std::sqrt(disc)) / (2.0 * kr);
    ok = ar > 0.0;
    return ar;
  };

  auto u_left = [&](double a) { return L.u + L.ct - (a / L.area) * L.ct; };
  auto u_right = [&](double ar) { return R.u - R.ct + (ar / R.area) * R.ct; };

  // Total-pressure mismatch across the contact, as a function of the left
  // star area alone.
  auto residual = [&](double a, bool& ok, double* ar_out,
                      double* deriv) -> double {
    double ar = star_right_area(a, ok);
    if (!ok) return 0.0;
    const double psi_l = L.psi + (L.area - a) / eps;
    const double psi_r = R.psi + (R.area - ar) / eps;
    const TubeLawEval el = law.eval(a, psi_l, L.wall);
    const TubeLawEval er = law.eval(ar, psi_r, R.wall);
    const double hl = u_left(a);
    const double hr = u_right(ar);
    const double g = (L.pr + el.zeta + 0.5 * rho * hl * hl) -
                     (R.pr + er.zeta + 0.5 * rho * hr * hr);
    if (ar_out) *ar_out = ar;
    if (deriv) {
      const double dcof = 2.0 * kl * a - (L.u + L.ct);
      const double dar = -dcof / (2.0 * kr * ar + (R.u - R.ct));
      const double dpl = el.d_area - law.gamma() / eps;
      const double dpr = er.d_area - law.gamma() / eps;
      *deriv = dpl + rho * hl * (-L.ct / L.area) -
               (dpr + rho * hr * (R.ct / R.area)) * dar;
    }
    return g;
  };

  const double scale =
      std::max({1.0, std::abs(L.pr) + law.eval(L.area, L.psi, L.wall).zeta,
                std::abs(R.pr) + law.eval(R.area, R.psi, R.wall).zeta,
                0.5 * rho * L.u * L.u, 0.5 * rho * R.u * R.u});
  const double tol_accept = 1e-10 * scale;
  const double tol_polish = 1e-14 * scale;

  double lo = 1e-3 * std::min(L.area, R.area);
  double hi = 10.0 * std::max(L.area, R.area);
  double a = 0.5 * (L.area + R.area);
  bool ok = false;
  double ar = 0.0;
  double best_res = 0.0;
  bool have_lo_sign = false, have_hi_sign = false;
  double lo_signed = lo, hi_signed = hi;

  int it = 0;
  for (; it < 100; ++it) {
    double deriv = 0.0;
    const double g = residual(a, ok, &ar, &deriv);
    if (!ok) {
      // Infeasible iterate (no real star area); retreat toward the data.
      hi = a;
      a = 0.5 * (lo + a);
      continue;
    }
    best_res = g;
    if (std::abs(g) <= tol_polish) break;
    if (g > 0.0) {
      have_hi_sign = true;
      hi_signed = a;
      hi = std::min(hi, a);
    } else {
      have_lo_sign = true;
      lo_signed = a;
      lo = std::max(lo, a);
    }
    double next = (deriv != 0.0) ? a - g / deriv : a;
    if (!(next > lo && next < hi) || deriv == 0.0) {
      if (have_lo_sign && have_hi_sign)
        next = 0.5 * (lo_signed + hi_signed);
      else
        next = 0.5 * (lo + hi);
    }
    if (next == a) break;
    a = next;
  }

  if (!ok) throw SolverError("riemann: no admissible star region");
  if (std::abs(best_res) > tol_accept) {
    std::ostringstream os;
    os << "riemann: Newton stalled after " << it
       << " iterations, residual = " << best_res << ", A*L = " << a;
    throw SolverError(os.str());
  }
  if (!(ar > 0.0)) throw SolverError("riemann: non-positive right star area");

  const double ul_star = u_left(a);
  const double flow_star = a * ul_star;

  RiemannFan fan;
  fan.star_left = ql;
  fan.star_left[kBfeArea] = a;
  fan.star_left[kBfeFlow] = flow_star;
  fan.star_left[kBfePsi] = L.psi + (L.area - a) / eps;
  fan.star_right = qr;
  fan.star_right[kBfeArea] = ar;
  fan.star_right[kBfeFlow] = flow_star;
  fan.star_right[kBfePsi] = R.psi + (R.area - ar) / eps;

  fan.lam_left_outer = L.u - L.ct;
  fan.lam_left_inner =
      ul_star - std::sqrt(law.sound_speed_sq(a, L.wall, rho));
  fan.lam_right_inner =
      flow_star / ar + std::sqrt(law.sound_speed_sq(ar, R.wall, rho));
  fan.lam_right_outer = R.u + R.ct;
  return fan;
}

}  // namespace wbfv
