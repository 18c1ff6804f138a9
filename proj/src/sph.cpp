#include "geosph/sph.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "geosph/boundary.hpp"

namespace geosph {

double cfl_dt(double h, double c_sound, double cfl_number) {
  if (!(h > 0.0) || !(c_sound > 0.0) || !(cfl_number > 0.0))
    throw std::invalid_argument("cfl_dt: inputs must be positive");
  return cfl_number * h / c_sound;
}

double effective_dt(const SolverSettings& s) {
  return std::min(s.controls.dt, cfl_dt(s.h, s.material.sound_speed(), s.controls.cfl_number));
}

RateEvaluator::RateEvaluator(const SolverSettings& settings)
    : settings_(settings), kernels_(&simd::kernels(settings.simd)) {
  visc_.gamma1 = settings.controls.gamma1;
  visc_.gamma2 = settings.controls.gamma2;
  visc_.sound_speed = settings.material.sound_speed();
  visc_.h = settings.h;
  visc_.epsilon = settings.controls.epsilon_visc;
  const KernelParams reference = settings.kernel(1.0);
  reference_shape_ = KernelShape::from(reference);
  w_at_spacing_ = eval_w(reference, settings.spacing / settings.h);
}

void RateEvaluator::prepare(const ParticleSystem& state) {
  artificial_.clear();
  if (settings_.stabilizer.kind != StabilizerKind::artificial_stress) return;
  artificial_.resize(state.n_real);
  for (std::size_t i = 0; i < state.n_real; ++i)
    artificial_[i] = artificial_stress(state.stress(i), state.rho[i], settings_.stabilizer.eps_as);
}

void RateEvaluator::gather(std::size_t i, const ParticleSystem& st, const NeighborTable& table) {
  const std::size_t begin = table.begin(i);
  const std::size_t n = table.count(i);
  simd::PairBatch& b = batch_;
  b.resize(n);

  const double xi = st.x[i], yi = st.y[i];
  const double vxi = st.vx[i], vyi = st.vy[i];
  const bool with_artificial = !artificial_.empty();
  const ArtificialStress r_i = with_artificial ? artificial_[i] : ArtificialStress{};

  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t j = table.index[begin + k];
    const double dx = xi - st.x[j];
    const double dy = yi - st.y[j];
    b.dx[k] = dx;
    b.dy[k] = dy;
    b.r[k] = std::sqrt(dx * dx + dy * dy);
    b.mass[k] = st.mass[j];
    b.rho[k] = st.rho[j];
    b.volume[k] = st.mass[j] / st.rho[j];
    const double inv_rho2 = 1.0 / (st.rho[j] * st.rho[j]);

    ArtificialStress r_j = r_i;
    if (j < st.n_real) {
      b.dvx[k] = vxi - st.vx[j];
      b.dvy[k] = vyi - st.vy[j];
      b.txx[k] = st.sxx[j] * inv_rho2;
      b.tyy[k] = st.syy[j] * inv_rho2;
      b.txy[k] = st.sxy[j] * inv_rho2;
      if (with_artificial) r_j = artificial_[j];
    } else {
      // Ghost: no-slip fictitious velocity and the real particle's stress.
      const std::size_t g = j - st.n_real;
      const WallLine& wall = st.walls[st.ghost_wall[g]];
      const auto fv = fictitious_velocity({vxi, vyi}, wall.signed_distance({xi, yi}), st.ghost_distance[g],
                                          settings_.chi_max);
      b.dvx[k] = fv.relative.x;
      b.dvy[k] = fv.relative.y;
      b.txx[k] = st.sxx[i] * inv_rho2;
      b.tyy[k] = st.syy[i] * inv_rho2;
      b.txy[k] = st.sxy[i] * inv_rho2;
    }

    b.axx[k] = b.ayy[k] = b.axy[k] = 0.0;
    if (with_artificial) {
      const double sum = std::abs(r_i.xx + r_j.xx) + std::abs(r_i.yy + r_j.yy) + std::abs(r_i.xy + r_j.xy);
      if (sum > 0.0) {
        const double w = b.r[k] < reference_shape_.b * settings_.h
                             ? eval_w(settings_.kernel(1.0), b.r[k] / settings_.h)
                             : 0.0;
        const auto s = artificial_stress_term(r_i, r_j, w / w_at_spacing_, settings_.stabilizer.exponent_n);
        b.axx[k] = s.xx;
        b.ayy[k] = s.yy;
        b.axy[k] = s.xy;
      }
    }
  }
}

std::pair<simd::RateSums, simd::RateSums> RateEvaluator::particle_sums(std::size_t i, const ParticleSystem& st,
                                                                       const NeighborTable& table) {
  gather(i, st, table);
  const std::size_t n = table.count(i);
  const std::size_t n_real = table.real_count[i];
  const KernelShape shape = KernelShape::from(settings_.kernel(st.knot[i]));
  kernels_->grad(shape, batch_, 0, n);
  if (settings_.symmetrize_kernel) {
    const std::size_t begin = table.begin(i);
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t j = table.index[begin + k];
      if (j >= st.n_real || st.knot[j] == st.knot[i]) continue;
      const KernelShape other = KernelShape::from(settings_.kernel(st.knot[j]));
      batch_.grad[k] = 0.5 * (batch_.grad[k] + other.grad_factor(batch_.r[k]));
    }
  }

  simd::PairSelf self;
  const double inv_rho2 = 1.0 / (st.rho[i] * st.rho[i]);
  self.txx = st.sxx[i] * inv_rho2;
  self.tyy = st.syy[i] * inv_rho2;
  self.txy = st.sxy[i] * inv_rho2;
  self.rho = st.rho[i];

  return {kernels_->accumulate(self, visc_, batch_, 0, n_real), kernels_->accumulate(self, visc_, batch_, n_real, n)};
}

namespace {

simd::RateSums total_sums(std::size_t i, const NeighborTable& table, const ParticleSystem& state,
                          const SolverSettings& settings) {
  if (i >= state.n_real) throw std::invalid_argument("rates are only defined for real particles");
  RateEvaluator eval(settings);
  eval.prepare(state);
  auto [real, boundary] = eval.particle_sums(i, state, table);
  real += boundary;
  return real;
}

}  // namespace

double continuity_rhs(std::size_t i, const NeighborTable& table, const ParticleSystem& state,
                      const SolverSettings& settings) {
  return total_sums(i, table, state, settings).drho;
}

Vec2 momentum_rhs(std::size_t i, const NeighborTable& table, const ParticleSystem& state,
                  const SolverSettings& settings) {
  const auto s = total_sums(i, table, state, settings);
  return Vec2{s.ax, s.ay} + settings.controls.gravity;
}

double energy_rhs(std::size_t i, const NeighborTable& table, const ParticleSystem& state,
                  const SolverSettings& settings) {
  return total_sums(i, table, state, settings).de;
}

std::pair<StrainRate, Spin> strain_spin_rates(std::size_t i, const NeighborTable& table,
                                              const ParticleSystem& state, const SolverSettings& settings) {
  const auto s = total_sums(i, table, state, settings);
  return {StrainRate{s.exx, s.eyy, s.exy}, Spin{s.wxy}};
}

}  // namespace geosph
