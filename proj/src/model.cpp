#include "wbfv/model.hpp"

#include <stdexcept>

#include "wbfv/quadrature.hpp"

namespace wbfv {

StateVec quasilinear_residual(const SystemModel& m, const StateVec& q,
                              const StateVec& dqdx, double x) {
  return m.matrix_action(q, dqdx) - m.source(q, x);
}

double max_wave_speed(const SystemModel& m, std::span<const StateVec> states) {
  if (states.empty())
    throw std::invalid_argument("max_wave_speed: empty state collection");
  double nu = 0.0;
  for (const StateVec& q : states) nu = std::max(nu, m.max_abs_eigenvalue(q));
  return nu;
}

std::vector<double> dense_matrix(const SystemModel& m, const StateVec& q) {
  const int v = m.dim();
  std::vector<double> a(v * v, 0.0);
  for (int j = 0; j < v; ++j) {
    StateVec e(v);
    e[j] = 1.0;
    const StateVec col = m.matrix_action(q, e);
    for (int i = 0; i < v; ++i) a[i * v + j] = col[i];
  }
  return a;
}

StateVec segment_path_integral(const SystemModel& m, const StateVec& ql,
                               const StateVec& qr) {
  const StateVec jump = qr - ql;
  StateVec acc(m.dim());
  const auto& g = gauss5();
  for (int i = 0; i < 5; ++i) {
    const StateVec psi = ql + g.node[i] * jump;
    acc += g.weight[i] * m.matrix_action(psi, jump);
  }
  return acc;
}

}  // namespace wbfv
