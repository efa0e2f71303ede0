#ifndef WBFV_PROFILES_HPP
#define WBFV_PROFILES_HPP

#include <string>
#include <vector>

#include "wbfv/tube_law.hpp"

namespace wbfv {

// Scalar spatial profile with an analytic derivative where defined.
// Polylines are C0; their derivative is the segment slope.
class Profile {
 public:
  enum class Kind { kConstant, kLinear, kPolyline, kExpSmooth };

  Profile() = default;

  static Profile constant(double value);
  // Linear taper from v_start at x = 0 to v_end at x = length.
  static Profile linear(double v_start, double v_end, double length);
  static Profile polyline(std::vector<double> xs, std::vector<double> vs);
  // amp * (exp(-x) - exp(-length)); vanishes at x = length.
  static Profile exp_smooth(double amp, double length);

  double value(double x) const;
  double derivative(double x) const;
  // Exact mean of the profile over [lo, hi].
  double average(double lo, double hi) const;

  Kind kind() const { return kind_; }
  bool covers(double lo, double hi) const;
  double min_x() const;
  double max_x() const;
  double max_abs_value() const;

 private:
  Kind kind_ = Kind::kConstant;
  double c0_ = 0.0;
  double c1_ = 0.0;
  double len_ = 1.0;
  std::vector<double> xs_;
  std::vector<double> vs_;
};

// (x, value) samples from a two-column CSV with a header row.
std::vector<std::pair<double, double>> load_xy_csv(const std::string& path);

// Vessel description: wall parameter profiles, gravity projection, fluid
// constants and the pressure-area law. CGS units throughout.
struct VesselProfile {
  Profile a0;
  Profile h0;
  Profile ee;
  Profile ec;
  Profile pr;
  Profile gravity;
  double rho = 1.05;                 // blood density [g/cm^3]
  double friction = -8.0 * 3.14159265358979323846 * 0.04 / 1.05;  // R [cm^2/s]
  double epsilon = 1e-4;             // relaxation time [s]
  double length = 10.0;              // vessel length [cm]
  TubeLaw law;

  WallParams wall_at(double x) const {
    return WallParams{a0.value(x), h0.value(x), ee.value(x), ec.value(x)};
  }
};

}  // namespace wbfv

#endif
