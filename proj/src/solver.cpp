#include "wbfv/solver.hpp"

#include <cmath>
#include <sstream>

#include "wbfv/bfe.hpp"
#include "wbfv/errors.hpp"
#include "wbfv/quadrature.hpp"

namespace wbfv {

Solver::Solver(const SystemModel& model, Grid grid, SolverOptions opt)
    : model_(model), grid_(grid), opt_(opt), predictor_(model, opt.order) {
  if (opt_.order != 2 && opt_.order != 3)
    throw ConfigError("solver: order must be 2 or 3");
  if (!(opt_.cfl > 0.0 && opt_.cfl <= 1.0))
    throw ConfigError("solver: CFL must lie in (0, 1]");
  const int n = grid_.n;
  avg_.assign(n, StateVec(model_.dim()));
  avg_next_ = avg_;
  cache_ = BoundaryCache::sized(n + 1, model_.dim());
  steady_.resize(n);
  recon_.resize(n);
  poly_.resize(n);
  iface_.resize(n + 1);
  warm_anchor_.assign(n, 0.0);
  have_warm_.assign(n, 0);
}

void Solver::set_initial_condition(
    const std::function<StateVec(double)>& ic) {
  const SchemeQuadrature& quad = SchemeQuadrature::get(opt_.order);
  for (int i = 0; i < grid_.n; ++i) {
    StateVec acc(model_.dim());
    for (int p = 0; p < opt_.order; ++p)
      acc += quad.weight[p] * ic(grid_.interface(i) + quad.node[p] * grid_.dx);
    avg_[i] = acc;
  }
  cache_ = bootstrap_cache(ic, grid_);
}

void Solver::set_initial_state(std::vector<StateVec> averages,
                               BoundaryCache cache) {
  if (static_cast<int>(averages.size()) != grid_.n ||
      static_cast<int>(cache.minus.size()) != grid_.n + 1)
    throw ConfigError("solver: initial state size mismatch");
  avg_ = std::move(averages);
  cache_ = std::move(cache);
}

double Solver::wave_speed_bound() const {
  double nu = 0.0;
  for (const StateVec& q : avg_) nu = std::max(nu, model_.max_abs_eigenvalue(q));
  for (int i = 0; i <= grid_.n; ++i) {
    nu = std::max(nu, model_.max_abs_eigenvalue(cache_.minus[i]));
    nu = std::max(nu, model_.max_abs_eigenvalue(cache_.plus[i]));
  }
  if (model_.dim() == 1) {
    // Scalar case: also the per-cell mean of the two interface states.
    for (int i = 0; i < grid_.n; ++i) {
      StateVec m = 0.5 * (cache_.plus[i] + cache_.minus[i + 1]);
      nu = std::max(nu, model_.max_abs_eigenvalue(m));
    }
  }
  return nu;
}

StateVec Solver::ghost_state(const BoundarySpec& bc,
                             const StateVec& interior) const {
  switch (bc.kind) {
    case BoundarySpec::Kind::kDirichlet: {
      StateVec g(model_.dim());
      g[0] = bc.value;
      return g;
    }
    case BoundarySpec::Kind::kTransparent:
      return interior;
    case BoundarySpec::Kind::kReflective: {
      StateVec g = interior;
      const int flow = model_.dim() > 1 ? 1 : 0;
      g[flow] = -g[flow];
      return g;
    }
    case BoundarySpec::Kind::kFixedPressure:
      throw ConfigError("fixed-pressure boundary requires the blood-flow model");
  }
  return interior;
}

// Constrained boundary interface: the boundary state satisfies the physical
// condition and connects to the interior trace across the entering wave
// family, so the condition holds pointwise at the interface.
InterfaceIntegral Solver::constrained_boundary(
    const BoundarySpec& bc, bool left_side,
    std::span<const StateVec> interior_nodes) const {
  const auto* bfe = dynamic_cast<const BfeModel*>(&model_);
  if (!bfe)
    throw ConfigError("constrained boundary requires the blood-flow model");
  const int P = opt_.order;
  const SchemeQuadrature& q = SchemeQuadrature::get(P);
  InterfaceIntegral out;
  out.dbar_minus = StateVec(model_.dim());
  out.dbar_plus = StateVec(model_.dim());
  for (int s = 0; s < P; ++s) {
    const StateVec& in = interior_nodes[s];
    StateVec b = in;  // transparent: interior state passes through
    if (bc.kind == BoundarySpec::Kind::kReflective)
      b = bfe->noflow_boundary_state(in);
    else if (bc.kind == BoundarySpec::Kind::kFixedPressure)
      b = bfe->pressure_boundary_state(in, bc.value);
    else if (bc.kind == BoundarySpec::Kind::kDirichlet)
      throw ConfigError("dirichlet boundary is not defined for the vessel model");
    const StateVec jump = left_side
                              ? model_.local_flux(in) - model_.local_flux(b)
                              : model_.local_flux(b) - model_.local_flux(in);
    if (left_side)
      out.dbar_plus += q.weight[s] * jump;
    else
      out.dbar_minus += q.weight[s] * jump;
    if (s == P - 1) {
      out.trace_minus = b;
      out.trace_plus = b;
    }
  }
  return out;
}

void Solver::step_once(double t_stop) {
  const int n = grid_.n;
  const int P = opt_.order;
  const double remaining = t_stop - t_;
  const double nu = wave_speed_bound();
  double dt = compute_dt(nu, opt_.cfl, grid_.dx, remaining, opt_.dt_max);
  if (!(dt > 0.0)) throw SolverError("solver: non-positive time step");

  // Phase 1a: stationary identification and reconstruction (dt-independent).
  for (int i = 0; i < n; ++i) {
    const double xl = grid_.interface(i);
    if (opt_.well_balanced) {
      steady_[i] = fit_cell_steady(model_, avg_[i], xl, grid_.dx, P,
                                   have_warm_[i] ? &warm_anchor_[i] : nullptr,
                                   &diag_.steady);
      warm_anchor_[i] = steady_[i].anchor;
      have_warm_[i] = 1;
    }
    reconstruct_cell(avg_[i], cache_.plus[i], cache_.minus[i + 1], grid_.dx, P,
                     recon_[i].data());
    for (int p = 0; p < P; ++p) {
      if (!model_.admissible(recon_[i][p])) {
        std::ostringstream os;
        os << "solver: inadmissible reconstruction in cell " << i;
        throw SolverError(os.str());
      }
    }
  }

  // Phase 1b: space-time predictions. When the predicted nodes reveal a
  // faster wave than the trace-based bound, the step is redone with the
  // tighter dt.
  for (int attempt = 0; attempt < 6; ++attempt) {
    predictor_.set_step(dt, grid_.dx);
    double nu_pred = 0.0;
    for (int i = 0; i < n; ++i) {
      const StateVec* qstar =
          opt_.well_balanced ? steady_[i].node.data() : nullptr;
      poly_[i] = predictor_.predict(recon_[i].data(), qstar,
                                    grid_.interface(i), i);
      for (int l = 0; l < P * P; ++l)
        nu_pred = std::max(nu_pred, model_.max_abs_eigenvalue(poly_[i].node[l]));
    }
    const double dt_pred =
        compute_dt(nu_pred, opt_.cfl, grid_.dx, remaining, opt_.dt_max);
    if (dt_pred >= dt * (1.0 - 1e-12) || attempt == 5) break;
    dt = dt_pred;
  }
  for (int i = 0; i < n; ++i)
    diag_.max_deviation =
        std::max(diag_.max_deviation, poly_[i].max_deviation());

  // Phase 2: interface fluctuations and the next trace cache.
  const bool constrained_bc = model_.dim() > 1;
  std::array<StateVec, 3> ql, qr;
  for (int j = 0; j <= n; ++j) {
    try {
      if (j == 0) {
        for (int s = 0; s < P; ++s) qr[s] = poly_[0].at(s, 0);
        if (constrained_bc) {
          iface_[j] = constrained_boundary(
              opt_.left, true, {qr.data(), static_cast<std::size_t>(P)});
          continue;
        }
        for (int s = 0; s < P; ++s) ql[s] = ghost_state(opt_.left, qr[s]);
      } else if (j == n) {
        for (int s = 0; s < P; ++s) ql[s] = poly_[n - 1].at(s, P - 1);
        if (constrained_bc) {
          iface_[j] = constrained_boundary(
              opt_.right, false, {ql.data(), static_cast<std::size_t>(P)});
          continue;
        }
        for (int s = 0; s < P; ++s) qr[s] = ghost_state(opt_.right, ql[s]);
      } else {
        for (int s = 0; s < P; ++s) {
          ql[s] = poly_[j - 1].at(s, P - 1);
          qr[s] = poly_[j].at(s, 0);
        }
      }
      iface_[j] = integrate_interface(
          model_, {ql.data(), static_cast<std::size_t>(P)},
          {qr.data(), static_cast<std::size_t>(P)}, P);
    } catch (const SolverError& e) {
      std::ostringstream os;
      os << e.what() << " (interface " << j << ", x = " << grid_.interface(j)
         << ")";
      throw SolverError(os.str());
    }
  }

  // Phase 3: volume terms and the explicit update.
  for (int i = 0; i < n; ++i) {
    const StateVec* qstar =
        opt_.well_balanced ? steady_[i].node.data() : nullptr;
    const VolumeTerms vol = volume_terms(model_, poly_[i], qstar,
                                         grid_.interface(i), grid_.dx, dt);
    avg_next_[i] = update_cell(avg_[i], vol, iface_[i + 1].dbar_minus,
                               iface_[i].dbar_plus, grid_.dx, dt);
    if (!model_.admissible(avg_next_[i])) {
      std::ostringstream os;
      os << "solver: inadmissible update in cell " << i;
      throw SolverError(os.str());
    }
  }

  avg_.swap(avg_next_);
  for (int j = 0; j <= n; ++j) {
    cache_.minus[j] = iface_[j].trace_minus;
    cache_.plus[j] = iface_[j].trace_plus;
  }
  t_ += dt;
  diag_.steps += 1;
  diag_.last_dt = dt;
  diag_.last_nu = nu;
}

void Solver::advance_to(double t_stop) {
  if (t_stop <= t_) return;
  const double snap = 1e-12 * std::max(1.0, std::abs(t_stop));
  while (t_ < t_stop - snap) step_once(t_stop);
  t_ = t_stop;
}

}  // namespace wbfv
