#ifndef WBFV_SMALL_LINALG_HPP
#define WBFV_SMALL_LINALG_HPP

#include <array>
#include <cassert>
#include <cmath>

#include "wbfv/errors.hpp"

namespace wbfv {

// Dense LU with partial pivoting for the small systems this solver needs
// (space-time predictor blocks are at most 9x9).
inline constexpr int kMaxLinDim = 9;

struct LuFactors {
  int n = 0;
  std::array<double, kMaxLinDim * kMaxLinDim> a{};
  std::array<int, kMaxLinDim> piv{};

  double& at(int i, int j) { return a[i * n + j]; }
  double at(int i, int j) const { return a[i * n + j]; }
};

inline LuFactors lu_factor(const double* m, int n) {
  assert(n > 0 && n <= kMaxLinDim);
  LuFactors f;
  f.n = n;
  for (int i = 0; i < n * n; ++i) f.a[i] = m[i];
  for (int k = 0; k < n; ++k) {
    int p = k;
    double best = std::abs(f.at(k, k));
    for (int i = k + 1; i < n; ++i) {
      const double v = std::abs(f.at(i, k));
      if (v > best) {
        best = v;
        p = i;
      }
    }
    if (best == 0.0) throw SolverError("lu_factor: singular matrix");
    f.piv[k] = p;
    if (p != k)
      for (int j = 0; j < n; ++j) std::swap(f.a[k * n + j], f.a[p * n + j]);
    const double inv = 1.0 / f.at(k, k);
    for (int i = k + 1; i < n; ++i) {
      const double l = f.at(i, k) * inv;
      f.at(i, k) = l;
      for (int j = k + 1; j < n; ++j) f.at(i, j) -= l * f.at(k, j);
    }
  }
  return f;
}

inline void lu_solve(const LuFactors& f, double* x) {
  const int n = f.n;
  // Stored multipliers refer to fully pivoted rows; permute the right-hand
  // side completely before substituting.
  for (int k = 0; k < n; ++k)
    if (f.piv[k] != k) std::swap(x[k], x[f.piv[k]]);
  for (int k = 0; k < n; ++k)
    for (int i = k + 1; i < n; ++i) x[i] -= f.at(i, k) * x[k];
  for (int i = n - 1; i >= 0; --i) {
    for (int j = i + 1; j < n; ++j) x[i] -= f.at(i, j) * x[j];
    x[i] /= f.at(i, i);
  }
}

}  // namespace wbfv

#endif
