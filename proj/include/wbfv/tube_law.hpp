#ifndef WBFV_TUBE_LAW_HPP
#define WBFV_TUBE_LAW_HPP

namespace wbfv {

// Unit conversions applied at configuration load; everything internal is CGS.
inline constexpr double kPaToCgs = 10.0;          // Pa -> dyn/cm^2
inline constexpr double kMmhgToCgs = 1333.22;     // mmHg -> dyn/cm^2
inline constexpr double kGravityCgs = 981.0;      // cm/s^2

// Local wall data at a point of the vessel axis, CGS units.
struct WallParams {
  double a0 = 0.0;  // reference area [cm^2]
  double h0 = 0.0;  // wall thickness [cm]
  double ee = 0.0;  // elastin modulus [dyn/cm^2]
  double ec = 0.0;  // collagen modulus [dyn/cm^2]
};

// Elastic pressure and its partial derivatives at one state.
struct TubeLawEval {
  double zeta = 0.0;
  double d_area = 0.0;
  double d_psi = 0.0;
  double d_a0 = 0.0;
  double d_h0 = 0.0;
  double d_ee = 0.0;
  double d_ec = 0.0;
};

// Two-term pressure-area relation
//   zeta(A, psi) = Ke [(A/A0)^me - 1] + Kc [(A/A0)^mc - 1] + Gamma psi,
// with Laplace-type stiffness K = scale * sqrt(pi) h0 E / ((1 - nu^2) sqrt(A0)).
// zeta(A0, 0) = 0 and d zeta / dA > 0 for all A > 0.
class TubeLaw {
 public:
  TubeLaw() = default;
  TubeLaw(double scale, double gamma) : scale_(scale), gamma_(gamma) {}

  double stiffness_e(const WallParams& w) const;
  double stiffness_c(const WallParams& w) const;

  TubeLawEval eval(double area, double psi, const WallParams& w) const;

  // c^2 = (A / rho) d zeta / dA.
  double sound_speed_sq(double area, const WallParams& w, double rho) const;

  // Antiderivative of c^2 in A (frozen wall data); used for flux differences.
  double flux_potential(double area, const WallParams& w, double rho) const;

  // Area with zeta(A, 0) = zeta_target, by safeguarded Newton.
  double invert(double zeta_target, const WallParams& w) const;

  double exponent_e() const { return me_; }
  double exponent_c() const { return mc_; }
  double gamma() const { return gamma_; }
  double scale() const { return scale_; }

  // Scale that yields the requested reference sound speed at A = A0.
  static double scale_for_sound_speed(double c_ref, const WallParams& w,
                                      double rho);

 private:
  double me_ = 0.5;
  double mc_ = 3.0;
  double nu_ = 0.5;  // wall Poisson ratio
  double scale_ = 1.0;
  double gamma_ = 0.0;
};

}  // namespace wbfv

#endif
