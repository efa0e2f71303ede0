#ifndef WBFV_QUADRATURE_HPP
#define WBFV_QUADRATURE_HPP

#include <array>
#include <cassert>

namespace wbfv {

// Scheme quadrature on [0,1]: endpoints for order 2 (trapezoid),
// endpoints + midpoint for order 3 (Simpson). The same nodes are used in
// space and in time.
struct SchemeQuadrature {
  int p = 2;  // number of nodes = order of the method
  std::array<double, 3> node{};
  std::array<double, 3> weight{};

  static const SchemeQuadrature& get(int order) {
    static const SchemeQuadrature q2{2, {0.0, 1.0, 0.0}, {0.5, 0.5, 0.0}};
    static const SchemeQuadrature q3{
        3, {0.0, 0.5, 1.0}, {1.0 / 6.0, 2.0 / 3.0, 1.0 / 6.0}};
    assert(order == 2 || order == 3);
    return order == 2 ? q2 : q3;
  }
};

// Gauss-Legendre nodes/weights on [0,1], used for exact integration of the
// reference-element products and for high-accuracy averaging in tests and
// references.
template <int N>
struct GaussLegendre {
  std::array<double, N> node{};
  std::array<double, N> weight{};
};

inline const GaussLegendre<5>& gauss5() {
  // Nodes/weights on [-1,1] mapped to [0,1].
  static const GaussLegendre<5> g = [] {
    GaussLegendre<5> q;
    const double x[5] = {-0.9061798459386639928, -0.5384693101056830910, 0.0,
                         0.5384693101056830910, 0.9061798459386639928};
    const double w[5] = {0.2369268850561890875, 0.4786286704993664680,
                         0.5688888888888888889, 0.4786286704993664680,
                         0.2369268850561890875};
    for (int i = 0; i < 5; ++i) {
      q.node[i] = 0.5 * (x[i] + 1.0);
      q.weight[i] = 0.5 * w[i];
    }
    return q;
  }();
  return g;
}

inline const GaussLegendre<16>& gauss16() {
  static const GaussLegendre<16> g = [] {
    GaussLegendre<16> q;
    const double x[8] = {0.0950125098376374402, 0.2816035507792589132,
                         0.4580167776572273863, 0.6178762444026437484,
                         0.7554044083550030339, 0.8656312023878317439,
                         0.9445750230732325761, 0.9894009349916499326};
    const double w[8] = {0.1894506104550684963, 0.1826034150449235889,
                         0.1691565193950025382, 0.1495959888165767320,
                         0.1246289712555338720, 0.0951585116824927848,
                         0.0622535239386478929, 0.0271524594117540949};
    for (int i = 0; i < 8; ++i) {
      q.node[8 + i] = 0.5 * (1.0 + x[i]);
      q.node[7 - i] = 0.5 * (1.0 - x[i]);
      q.weight[8 + i] = 0.5 * w[i];
      q.weight[7 - i] = 0.5 * w[i];
    }
    return q;
  }();
  return g;
}

// Integrates f over [a,b] with composite 16-point Gauss on nseg segments.
template <class F>
double integrate(F&& f, double a, double b, int nseg = 8) {
  const auto& g = gauss16();
  double total = 0.0;
  const double h = (b - a) / nseg;
  for (int s = 0; s < nseg; ++s) {
    const double lo = a + s * h;
    double acc = 0.0;
    for (int i = 0; i < 16; ++i) acc += g.weight[i] * f(lo + g.node[i] * h);
    total += acc * h;
  }
  return total;
}

}  // namespace wbfv

#endif
