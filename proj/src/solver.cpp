#include "geosph/solver.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#include "geosph/diagnostics.hpp"
#include "geosph/errors.hpp"
#include "geosph/integrator.hpp"

namespace geosph {

void ParticleRates::resize(std::size_t n) {
  for (auto* v : {&vx, &vy, &ax, &ay, &drho, &de, &sxx, &syy, &szz, &sxy, &exx, &eyy, &exy, &plastic})
    v->assign(n, 0.0);
  boundary_force = {};
}

Solver::Solver(ParticleSystem initial, const SolverSettings& settings)
    : settings_(settings), state_(std::move(initial)), evaluator_(settings) {
  validate(settings_.kernel(1.0));
  dt_ = effective_dt(settings_);
  for (std::size_t i = 0; i < state_.n_real; ++i) total_mass_ += state_.mass[i];

  switch (settings_.stabilizer.kind) {
    case StabilizerKind::conventional:
    case StabilizerKind::artificial_stress:
      for (std::size_t i = 0; i < state_.n_real; ++i) state_.knot[i] = settings_.stabilizer.conventional_knot;
      break;
    case StabilizerKind::adaptive_kernel:
      break;
  }
  rebuild_neighbors();
  adapt_knots();
  last_.momentum = total_momentum(state_);
}

void Solver::rebuild_neighbors() {
  table_ = build_neighbors(state_.x, state_.y, state_.n_real, state_.n_real, settings_.kernel_b * settings_.h);
}

ParticleRates Solver::evaluate(const ParticleSystem& st) {
  ParticleRates r;
  r.resize(st.n_real);
  evaluator_.prepare(st);
  const Vec2 g = settings_.controls.gravity;
  const MaterialParams& mat = settings_.material;

  for (std::size_t i = 0; i < st.n_real; ++i) {
    auto [sums, wall] = evaluator_.particle_sums(i, st, table_);
    r.boundary_force.x += st.mass[i] * wall.ax;
    r.boundary_force.y += st.mass[i] * wall.ay;
    sums += wall;

    r.vx[i] = st.vx[i];
    r.vy[i] = st.vy[i];
    r.ax[i] = sums.ax + g.x;
    r.ay[i] = sums.ay + g.y;
    r.drho[i] = sums.drho;
    r.de[i] = sums.de;
    r.exx[i] = sums.exx;
    r.eyy[i] = sums.eyy;
    r.exy[i] = sums.exy;

    const Stress sigma = st.stress(i);
    const auto sr = stress_rate(sigma, {sums.exx, sums.eyy, sums.exy}, {sums.wxy}, mat);
    r.sxx[i] = sr.rate.xx;
    r.syy[i] = sr.rate.yy;
    r.szz[i] = sr.rate.zz;
    r.sxy[i] = sr.rate.xy;
    r.plastic[i] = effective_plastic_strain_increment(sr.lambda_dot, sigma, mat, 1.0);
  }
  return r;
}

void Solver::advance(ParticleSystem& st, const ParticleRates& r, double dt) const {
  for (std::size_t i = 0; i < st.n_real; ++i) {
    st.x[i] += dt * r.vx[i];
    st.y[i] += dt * r.vy[i];
    st.vx[i] += dt * r.ax[i];
    st.vy[i] += dt * r.ay[i];
    st.rho[i] += dt * r.drho[i];
    st.energy[i] += dt * r.de[i];
    st.sxx[i] += dt * r.sxx[i];
    st.syy[i] += dt * r.syy[i];
    st.szz[i] += dt * r.szz[i];
    st.sxy[i] += dt * r.sxy[i];
  }
}

void Solver::constrain(ParticleSystem& st) const {
  for (std::size_t i = 0; i < st.n_real; ++i) {
    st.set_stress(i, return_to_cone(st.stress(i), settings_.material));
    const bool finite = std::isfinite(st.x[i]) && std::isfinite(st.y[i]) && std::isfinite(st.vx[i]) &&
                        std::isfinite(st.vy[i]) && std::isfinite(st.rho[i]) && std::isfinite(st.energy[i]) &&
                        std::isfinite(st.sxx[i]) && std::isfinite(st.syy[i]) && std::isfinite(st.szz[i]) &&
                        std::isfinite(st.sxy[i]);
    if (!finite || !(st.rho[i] > 0.0)) {
      std::ostringstream msg;
      msg << (finite ? "non-positive density" : "non-finite field") << " at particle " << i << " (x=" << st.x[i]
          << ", y=" << st.y[i] << ", rho=" << st.rho[i] << ") in step " << steps_ + 1;
      throw NumericalAbort(msg.str());
    }
  }
}

void Solver::adapt_knots() {
  if (settings_.stabilizer.kind != StabilizerKind::adaptive_kernel) return;
  const std::size_t n = state_.n_real;
  const AdaptiveKnotSettings& adaptive = settings_.stabilizer.adaptive;
  zones_.resize(n);
  radius_.resize(n);

  // Classification reads pressures frozen before any knot changes.
  std::vector<double> pressure(n);
  for (std::size_t i = 0; i < n; ++i) pressure[i] = state_.stress(i).pressure();

  for (std::size_t i = 0; i < n; ++i) {
    const double r_i = farthest_immediate_distance(state_.cell[i]);
    const double limit = r_i * (1.0 + adaptive.neighbour_margin);
    pressure_scratch_.clear();
    const std::size_t begin = table_.begin(i);
    const std::size_t end = begin + table_.real_count[i];
    for (std::size_t k = begin; k < end; ++k)
      if (table_.r[k] <= limit) pressure_scratch_.push_back(pressure[table_.index[k]]);
    zones_[i] = classify_pressure_zone(pressure_scratch_);
    radius_[i] = r_i;
    state_.knot[i] = adapt_knot(zones_[i], r_i, settings_.kernel_b, settings_.h, adaptive);
  }
}

void Solver::step() {
  const Vec2 before = total_momentum(state_);
  const ParticleRates mid = midpoint_step(*this, state_, dt_);

  for (std::size_t i = 0; i < state_.n_real; ++i) {
    state_.eps_p[i] += dt_ * mid.plastic[i];
    state_.cell[i] = update_cell(state_.cell[i], {mid.exx[i], mid.eyy[i], mid.exy[i]}, dt_);
  }
  ++steps_;
  time_ = static_cast<double>(steps_) * dt_;
  rebuild_neighbors();
  adapt_knots();

  StepDiagnostics d;
  d.step = steps_;
  d.time = time_;
  d.momentum = total_momentum(state_);
  d.momentum_change = d.momentum - before;
  d.gravity_impulse = (total_mass_ * dt_) * settings_.controls.gravity;
  d.boundary_impulse = dt_ * mid.boundary_force;
  d.residual = norm(d.momentum_change - d.gravity_impulse - d.boundary_impulse);
  const double scale = norm(d.gravity_impulse);
  d.relative_residual = scale > 0.0 ? d.residual / scale : d.residual;
  last_ = d;

  if (d.relative_residual > settings_.momentum_residual_limit) {
    std::ostringstream msg;
    msg << "momentum residual " << d.relative_residual << " exceeds limit " << settings_.momentum_residual_limit
        << " in step " << steps_;
    throw NumericalAbort(msg.str());
  }
}

}  // namespace geosph
