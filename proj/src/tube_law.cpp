#include "wbfv/tube_law.hpp"

#include <cmath>

#include "wbfv/errors.hpp"

namespace wbfv {

namespace {
constexpr double kSqrtPi = 1.7724538509055160273;
}

double TubeLaw::stiffness_e(const WallParams& w) const {
  return scale_ * kSqrtPi * w.h0 * w.ee / ((1.0 - nu_ * nu_) * std::sqrt(w.a0));
}

double TubeLaw::stiffness_c(const WallParams& w) const {
  return scale_ * kSqrtPi * w.h0 * w.ec / ((1.0 - nu_ * nu_) * std::sqrt(w.a0));
}

TubeLawEval TubeLaw::eval(double area, double psi, const WallParams& w) const {
  if (!(area > 0.0)) throw SolverError("tube_law: non-positive area");
  const double ke = stiffness_e(w);
  const double kc = stiffness_c(w);
  const double r = area / w.a0;
  // Exponents are fixed at 1/2 and 3; avoid pow in the hot path.
  const double re = std::sqrt(r);
  const double rc = r * r * r;

  TubeLawEval e;
  e.zeta = ke * (re - 1.0) + kc * (rc - 1.0) + gamma_ * psi;
  e.d_area = (ke * me_ * re + kc * mc_ * rc) / area;
  e.d_psi = gamma_;
  e.d_a0 = -(ke * (re - 1.0) + kc * (rc - 1.0)) / (2.0 * w.a0) -
           (ke * me_ * re + kc * mc_ * rc) / w.a0;
  e.d_h0 = (ke * (re - 1.0) + kc * (rc - 1.0)) / w.h0;
  e.d_ee = ke * (re - 1.0) / w.ee;
  e.d_ec = kc * (rc - 1.0) / w.ec;
  return e;
}

double TubeLaw::sound_speed_sq(double area, const WallParams& w,
                               double rho) const {
  if (!(area > 0.0)) throw SolverError("tube_law: non-positive area");
  const double r = area / w.a0;
  const double re = std::sqrt(r);
  const double rc = r * r * r;
  return (stiffness_e(w) * me_ * re + stiffness_c(w) * mc_ * rc) / rho;
}

double TubeLaw::flux_potential(double area, const WallParams& w,
                               double rho) const {
  const double r = area / w.a0;
  const double r32 = r * std::sqrt(r);
  const double r2 = r * r;
  const double r4 = r2 * r2;
  return (w.a0 / rho) * (stiffness_e(w) * me_ / (me_ + 1.0) * r32 +
                         stiffness_c(w) * mc_ / (mc_ + 1.0) * r4);
}

double TubeLaw::invert(double zeta_target, const WallParams& w) const {
  double lo = 1e-6 * w.a0;
  double hi = 100.0 * w.a0;
  auto f = [&](double a) { return eval(a, 0.0, w).zeta - zeta_target; };
  if (f(lo) > 0.0 || f(hi) < 0.0)
    throw SolverError("tube_law: inversion target outside bracket");
  double a = w.a0;
  for (int it = 0; it < 200; ++it) {
    const TubeLawEval e = eval(a, 0.0, w);
    const double res = e.zeta - zeta_target;
    if (std::abs(res) <= 1e-14 * (std::abs(zeta_target) + stiffness_e(w)))
      return a;
    if (res > 0.0)
      hi = a;
    else
      lo = a;
    double step = res / e.d_area;
    double next = a - step;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (next == a) return a;
    a = next;
  }
  return a;
}

double TubeLaw::scale_for_sound_speed(double c_ref, const WallParams& w,
                                      double rho) {
  TubeLaw unit(1.0, 0.0);
  const double c2_unit = unit.sound_speed_sq(w.a0, w, rho);
  return c_ref * c_ref / c2_unit;
}

}  // namespace wbfv
