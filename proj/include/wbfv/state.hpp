#ifndef WBFV_STATE_HPP
#define WBFV_STATE_HPP

#include <array>
#include <cassert>
#include <cmath>

namespace wbfv {

inline constexpr int kMaxComponents = 8;

// Fixed-capacity state vector. Covers both the scalar model (1 component)
// and the blood-flow system (8 components) without heap traffic.
class StateVec {
 public:
  StateVec() = default;
  explicit StateVec(int n, double fill = 0.0) : n_(n) {
    assert(n >= 0 && n <= kMaxComponents);
    for (int i = 0; i < n_; ++i) c_[i] = fill;
  }
  static StateVec scalar(double q) {
    StateVec v(1);
    v[0] = q;
    return v;
  }

  int size() const { return n_; }
  double& operator[](int i) {
    assert(i >= 0 && i < n_);
    return c_[i];
  }
  double operator[](int i) const {
    assert(i >= 0 && i < n_);
    return c_[i];
  }

  StateVec& operator+=(const StateVec& o) {
    assert(o.n_ == n_);
    for (int i = 0; i < n_; ++i) c_[i] += o.c_[i];
    return *this;
  }
  StateVec& operator-=(const StateVec& o) {
    assert(o.n_ == n_);
    for (int i = 0; i < n_; ++i) c_[i] -= o.c_[i];
    return *this;
  }
  StateVec& operator*=(double a) {
    for (int i = 0; i < n_; ++i) c_[i] *= a;
    return *this;
  }

  bool finite() const {
    for (int i = 0; i < n_; ++i)
      if (!std::isfinite(c_[i])) return false;
    return true;
  }
  double max_abs() const {
    double m = 0.0;
    for (int i = 0; i < n_; ++i) m = std::max(m, std::abs(c_[i]));
    return m;
  }

 private:
  std::array<double, kMaxComponents> c_{};
  int n_ = 0;
};

inline StateVec operator+(StateVec a, const StateVec& b) { return a += b; }
inline StateVec operator-(StateVec a, const StateVec& b) { return a -= b; }
inline StateVec operator*(double s, StateVec a) { return a *= s; }

inline bool bitwise_equal(const StateVec& a, const StateVec& b) {
  if (a.size() != b.size()) return false;
  for (int i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

}  // namespace wbfv

#endif
