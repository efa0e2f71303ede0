#ifndef WBFV_NORMS_HPP
#define WBFV_NORMS_HPP

#include <cmath>
#include <span>
#include <vector>

#include "wbfv/state.hpp"

namespace wbfv {

// Discrete error norms over cell averages, dx-weighted for L1 and L2.
struct ErrorNorms {
  double l1 = 0.0;
  double l2 = 0.0;
  double linf = 0.0;
};

inline ErrorNorms error_norms(std::span<const double> a,
                              std::span<const double> b, double dx) {
  ErrorNorms n;
  double sum1 = 0.0, sum2 = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double e = std::abs(a[i] - b[i]);
    sum1 += e;
    sum2 += e * e;
    n.linf = std::max(n.linf, e);
  }
  n.l1 = dx * sum1;
  n.l2 = std::sqrt(dx * sum2);
  return n;
}

inline std::vector<double> component_values(std::span<const StateVec> states,
                                            int comp) {
  std::vector<double> v;
  v.reserve(states.size());
  for (const StateVec& q : states) v.push_back(q[comp]);
  return v;
}

// Empirical order between two successive refinements (factor 2).
inline double order_between(double coarse, double fine) {
  return std::log2(coarse / fine);
}

}  // namespace wbfv

#endif
