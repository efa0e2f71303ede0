#include "wbfv/predictor.hpp"

#include <cmath>
#include <sstream>

#include "wbfv/errors.hpp"
#include "wbfv/quadrature.hpp"

namespace wbfv {

double RefElement::basis1d(int i, double x) const {
  double v = 1.0;
  for (int j = 0; j < order; ++j) {
    if (j == i) continue;
    v *= (x - node[j]) / (node[i] - node[j]);
  }
  return v;
}

double RefElement::dbasis1d(int i, double x) const {
  double sum = 0.0;
  for (int k = 0; k < order; ++k) {
    if (k == i) continue;
    double term = 1.0 / (node[i] - node[k]);
    for (int j = 0; j < order; ++j) {
      if (j == i || j == k) continue;
      term *= (x - node[j]) / (node[i] - node[j]);
    }
    sum += term;
  }
  return sum;
}

namespace {

RefElement build_ref_element(int order) {
  RefElement r;
  r.order = order;
  r.n = order * order;
  const SchemeQuadrature& q = SchemeQuadrature::get(order);
  r.node = q.node;
  r.weight = q.weight;

  // Exact 1D products by Gauss quadrature (integrands are polynomials of
  // degree at most 4).
  const auto& g = gauss5();
  const int P = order;
  double mx[3][3] = {};  // int l_i l_j
  double sx[3][3] = {};  // int l_i l_j'
  for (int i = 0; i < P; ++i)
    for (int j = 0; j < P; ++j)
      for (int k = 0; k < 5; ++k) {
        const double x = g.node[k];
        const double w = g.weight[k];
        mx[i][j] += w * r.basis1d(i, x) * r.basis1d(j, x);
        sx[i][j] += w * r.basis1d(i, x) * r.dbasis1d(j, x);
      }

  // dxi = (mass)^-1 (stiffness) on the spatial factor.
  {
    double m[9];
    for (int i = 0; i < P; ++i)
      for (int j = 0; j < P; ++j) m[i * P + j] = mx[i][j];
    const LuFactors lu = lu_factor(m, P);
    for (int col = 0; col < P; ++col) {
      double rhs[3];
      for (int i = 0; i < P; ++i) rhs[i] = sx[i][col];
      lu_solve(lu, rhs);
      for (int i = 0; i < P; ++i) r.dxi[i * P + col] = rhs[i];
    }
  }

  for (int sk = 0; sk < P; ++sk)
    for (int pk = 0; pk < P; ++pk)
      for (int sl = 0; sl < P; ++sl)
        for (int pl = 0; pl < P; ++pl) {
          const int k = sk * P + pk;
          const int l = sl * P + pl;
          r.end_mass[k * r.n + l] =
              mx[pk][pl] * r.basis1d(sk, 1.0) * r.basis1d(sl, 1.0);
          double tt = 0.0;  // int l_sk' l_sl dtau
          for (int gq = 0; gq < 5; ++gq)
            tt += g.weight[gq] * r.dbasis1d(sk, g.node[gq]) *
                  r.basis1d(sl, g.node[gq]);
          r.time_stiff[k * r.n + l] = mx[pk][pl] * tt;
          r.mass[k * r.n + l] = mx[pk][pl] * mx[sk][sl];
        }

  for (int sk = 0; sk < P; ++sk)
    for (int pk = 0; pk < P; ++pk)
      for (int p = 0; p < P; ++p)
        r.init_trace[(sk * P + pk) * P + p] = mx[pk][p] * r.basis1d(sk, 0.0);

  return r;
}

}  // namespace

const RefElement& RefElement::get(int order) {
  static const RefElement r2 = build_ref_element(2);
  static const RefElement r3 = build_ref_element(3);
  if (order != 2 && order != 3)
    throw ConfigError("predictor: order must be 2 or 3");
  return order == 2 ? r2 : r3;
}

StateVec evaluate_prediction(const SpaceTimePoly& poly, double xi,
                             double tau) {
  const RefElement& r = RefElement::get(poly.order);
  const int P = poly.order;
  StateVec out(poly.node[0].size());
  for (int s = 0; s < P; ++s) {
    const double lt = r.basis1d(s, tau);
    if (lt == 0.0) continue;
    for (int p = 0; p < P; ++p) {
      const double w = lt * r.basis1d(p, xi);
      if (w == 0.0) continue;
      out += w * poly.node[s * P + p];
    }
  }
  return out;
}

Predictor::Predictor(const SystemModel& m, int order)
    : model_(m), ref_(RefElement::get(order)), vdim_(m.dim()) {
  // Group components by their implicit source coefficient.
  for (int c = 0; c < vdim_; ++c) {
    const double lam = m.source_linear_coeff(c);
    int idx = -1;
    for (std::size_t k = 0; k < lambda_.size(); ++k)
      if (lambda_[k] == lam) idx = static_cast<int>(k);
    if (idx < 0) {
      lambda_.push_back(lam);
      idx = static_cast<int>(lambda_.size()) - 1;
    }
    factor_of_comp_[c] = idx;
  }
  factors_.resize(lambda_.size());
}

void Predictor::set_step(double dt, double dx) {
  dt_ = dt;
  dx_ = dx;
  const int n = ref_.n;
  double g[81];
  for (std::size_t k = 0; k < lambda_.size(); ++k) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        g[i * n + j] = ref_.m1(i, j) - ref_.kt(i, j) -
                       dt * lambda_[k] * ref_.mm(i, j);
    factors_[k] = lu_factor(g, n);
  }
}

SpaceTimePoly Predictor::predict(const StateVec* w_nodal,
                                 const StateVec* qstar_nodal, double x_left,
                                 int cell_index) const {
  const int P = ref_.order;
  const int n = ref_.n;
  const int v = vdim_;
  const bool wb = qstar_nodal != nullptr;

  double xp[3];
  for (int p = 0; p < P; ++p) xp[p] = x_left + dx_ * ref_.node[p];

  double lam[kMaxComponents];
  for (int c = 0; c < v; ++c) lam[c] = lambda_[factor_of_comp_[c]];

  // Stationary data: spatial derivative, matrix action, nonlinear source.
  // These stay fixed over the passes; the same arrays feed the counterterm
  // subtraction so that zero deviations cancel exactly.
  double dqs[3][kMaxComponents];      // per spatial node
  double ncstar[9][kMaxComponents];
  double snlstar[9][kMaxComponents];
  if (wb) {
    for (int p = 0; p < P; ++p)
      for (int c = 0; c < v; ++c) {
        double acc = 0.0;
        for (int j = 0; j < P; ++j) acc += ref_.d1(p, j) * qstar_nodal[j][c];
        dqs[p][c] = acc;
      }
    for (int p = 0; p < P; ++p) {
      StateVec der(v);
      for (int c = 0; c < v; ++c) der[c] = dqs[p][c];
      const StateVec nc = model_.matrix_action(qstar_nodal[p], der);
      StateVec snl = model_.source(qstar_nodal[p], xp[p]);
      for (int c = 0; c < v; ++c) snl[c] -= lam[c] * qstar_nodal[p][c];
      for (int s = 0; s < P; ++s)
        for (int c = 0; c < v; ++c) {
          ncstar[s * P + p][c] = nc[c];
          snlstar[s * P + p][c] = snl[c];
        }
    }
  }

  // Deviation initial data and its weak trace, per component.
  double d0[3][kMaxComponents];
  for (int p = 0; p < P; ++p)
    for (int c = 0; c < v; ++c)
      d0[p][c] = wb ? w_nodal[p][c] - qstar_nodal[p][c] : w_nodal[p][c];
  double f0d0[9][kMaxComponents];
  for (int k = 0; k < n; ++k)
    for (int c = 0; c < v; ++c) {
      double acc = 0.0;
      for (int p = 0; p < P; ++p) acc += ref_.f0(k, p) * d0[p][c];
      f0d0[k][c] = acc;
    }

  double dhat[9][kMaxComponents];
  for (int s = 0; s < P; ++s)
    for (int p = 0; p < P; ++p)
      for (int c = 0; c < v; ++c) dhat[s * P + p][c] = d0[p][c];

  double delta[9][kMaxComponents];
  const double dtdx = dt_ / dx_;

  for (int pass = 0; pass < P; ++pass) {
    for (int s = 0; s < P; ++s)
      for (int p = 0; p < P; ++p) {
        const int l = s * P + p;
        StateVec q(v), der(v);
        for (int c = 0; c < v; ++c) {
          double dd = 0.0;
          for (int j = 0; j < P; ++j)
            dd += ref_.d1(p, j) * dhat[s * P + j][c];
          if (wb) {
            q[c] = dhat[l][c] + qstar_nodal[p][c];
            der[c] = dd + dqs[p][c];
          } else {
            q[c] = dhat[l][c];
            der[c] = dd;
          }
        }
        const StateVec nc = model_.matrix_action(q, der);
        const StateVec src = model_.source(q, xp[p]);
        if (wb) {
          for (int c = 0; c < v; ++c) {
            const double snl = src[c] - lam[c] * q[c];
            delta[l][c] = -dtdx * (nc[c] - ncstar[l][c]) +
                          dt_ * (snl - snlstar[l][c]);
          }
        } else {
          for (int c = 0; c < v; ++c)
            delta[l][c] = -dtdx * nc[c] + dt_ * (src[c] - lam[c] * q[c]);
        }
      }
    for (int c = 0; c < v; ++c) {
      double x[9];
      for (int k = 0; k < n; ++k) {
        double acc = f0d0[k][c];
        const double* mm_row = &ref_.mass[k * n];
        for (int l = 0; l < n; ++l) acc += mm_row[l] * delta[l][c];
        x[k] = acc;
      }
      lu_solve(factors_[factor_of_comp_[c]], x);
      for (int k = 0; k < n; ++k) dhat[k][c] = x[k];
    }
  }

  SpaceTimePoly out;
  out.order = P;
  for (int s = 0; s < P; ++s)
    for (int p = 0; p < P; ++p) {
      const int l = s * P + p;
      StateVec dev(v), node(v);
      for (int c = 0; c < v; ++c) {
        dev[c] = dhat[l][c];
        node[c] = wb ? dhat[l][c] + qstar_nodal[p][c] : dhat[l][c];
      }
      out.deviation[l] = dev;
      out.node[l] = node;
      if (!model_.admissible(node)) {
        std::ostringstream os;
        os << "predictor: inadmissible space-time node in cell " << cell_index;
        throw SolverError(os.str());
      }
    }
  return out;
}

}  // namespace wbfv
