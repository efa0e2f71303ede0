#include <cmath>

#include "doctest.h"
#include "wbfv/errors.hpp"
#include "wbfv/tube_law.hpp"

using namespace wbfv;

namespace {

const WallParams kS1Wall{0.24, 0.05, 3.6e6 * kPaToCgs, 9.0e8 * kPaToCgs};

// Central finite differences of zeta in every argument.
void check_partials(const TubeLaw& law, double area, double psi,
                    const WallParams& w) {
  const TubeLawEval e = law.eval(area, psi, w);
  auto fd = [&](auto get, double base, double analytic) {
    const double h = 1e-6 * std::abs(base);
    const double num = (get(base + h) - get(base - h)) / (2.0 * h);
    const double scale = std::max(std::abs(analytic), std::abs(num));
    if (scale < 1e-9) return;  // both derivative routes vanish
    CHECK(std::abs(num - analytic) <= 1e-6 * scale);
  };
  fd([&](double a) { return law.eval(a, psi, w).zeta; }, area, e.d_area);
  {
    // psi enters linearly; a unit step avoids cancellation against the
    // large elastic part.
    const double h = 1.0;
    const double num =
        (law.eval(area, psi + h, w).zeta - law.eval(area, psi - h, w).zeta) /
        (2.0 * h);
    CHECK(num == doctest::Approx(e.d_psi).epsilon(1e-6));
  }
  fd([&](double v) { return law.eval(area, psi, {v, w.h0, w.ee, w.ec}).zeta; },
     w.a0, e.d_a0);
  fd([&](double v) { return law.eval(area, psi, {w.a0, v, w.ee, w.ec}).zeta; },
     w.h0, e.d_h0);
  fd([&](double v) { return law.eval(area, psi, {w.a0, w.h0, v, w.ec}).zeta; },
     w.ee, e.d_ee);
  fd([&](double v) { return law.eval(area, psi, {w.a0, w.h0, w.ee, v}).zeta; },
     w.ec, e.d_ec);
}

}  // namespace

TEST_CASE("reference state carries zero elastic pressure") {
  TubeLaw law(1.0, 0.0);
  const TubeLawEval e = law.eval(kS1Wall.a0, 0.0, kS1Wall);
  CHECK(e.zeta == 0.0);
}

TEST_CASE("stiffness coefficients match the closed formula") {
  TubeLaw law(1.0, 0.0);
  CHECK(law.stiffness_e(kS1Wall) ==
        doctest::Approx(8683215.0546992123).epsilon(1e-13));
  CHECK(law.stiffness_c(kS1Wall) ==
        doctest::Approx(2170803763.6748028).epsilon(1e-13));
  CHECK(law.sound_speed_sq(kS1Wall.a0, kS1Wall, 1.05) > 0.0);
}

TEST_CASE("partials agree with central differences across the strain grid") {
  TubeLaw law(1.0, 0.3);  // nonzero viscoelastic coefficient
  for (double ratio : {0.5, 0.8, 1.0, 1.3, 1.7, 2.0}) {
    for (double psi : {0.0, 10.0, -10.0}) {
      check_partials(law, ratio * kS1Wall.a0, psi, kS1Wall);
    }
  }
}

TEST_CASE("partials at 1.3 A0 within 1e-6 relative") {
  TubeLaw law(1.0, 0.0);
  check_partials(law, 1.3 * kS1Wall.a0, 0.0, kS1Wall);
}

TEST_CASE("sound speed is monotone in area") {
  TubeLaw law(2.5779710020512713e-05, 0.0);
  double prev = 0.0;
  for (double r = 0.5; r <= 2.01; r += 0.1) {
    const double c2 = law.sound_speed_sq(r * kS1Wall.a0, kS1Wall, 1.05);
    CHECK(c2 > prev);
    prev = c2;
  }
}

TEST_CASE("flux potential derivative equals the squared sound speed") {
  TubeLaw law(2.5779710020512713e-05, 0.0);
  for (double r : {0.7, 1.0, 1.4, 1.9}) {
    const double a = r * kS1Wall.a0;
    const double h = 1e-6 * a;
    const double num = (law.flux_potential(a + h, kS1Wall, 1.05) -
                        law.flux_potential(a - h, kS1Wall, 1.05)) /
                       (2.0 * h);
    CHECK(num == doctest::Approx(law.sound_speed_sq(a, kS1Wall, 1.05))
                     .epsilon(1e-8));
  }
}

TEST_CASE("pressure inversion round trip") {
  TubeLaw law(2.5779710020512713e-05, 0.0);
  for (double r : {0.6, 0.95, 1.34, 1.8}) {
    const double a = r * kS1Wall.a0;
    const double zeta = law.eval(a, 0.0, kS1Wall).zeta;
    CHECK(law.invert(zeta, kS1Wall) == doctest::Approx(a).epsilon(1e-10));
  }
  CHECK_THROWS_AS(law.eval(-1.0, 0.0, kS1Wall), SolverError);
}

TEST_CASE("calibration hits the requested reference sound speed") {
  const double s = TubeLaw::scale_for_sound_speed(400.0, kS1Wall, 1.05);
  CHECK(s == doctest::Approx(2.5779710020512713e-05).epsilon(1e-13));
  TubeLaw law(s, 0.0);
  CHECK(std::sqrt(law.sound_speed_sq(kS1Wall.a0, kS1Wall, 1.05)) ==
        doctest::Approx(400.0).epsilon(1e-13));
}
