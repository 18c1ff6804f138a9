#pragma once

#include <cstddef>
#include <limits>
#include <utility>
#include <vector>

#include "geosph/constitutive.hpp"
#include "geosph/kernel.hpp"
#include "geosph/neighbors.hpp"
#include "geosph/particles.hpp"
#include "geosph/simd/pair_rates.hpp"
#include "geosph/stabilizer.hpp"

namespace geosph {

struct StepControls {
  double dt = 5e-5;
  double gamma1 = 1.0;
  double gamma2 = 0.0;
  double epsilon_visc = 0.01;
  Vec2 gravity{0.0, -9.81};
  double cfl_number = 0.1;
};

struct SolverSettings {
  MaterialParams material;
  StepControls controls;
  double h = 0.0375;
  double kernel_b = 2.0;
  double spacing = 0.025;  // initial particle spacing
  StabilizerMode stabilizer;
  double chi_max = 1.5;
  /// Average the kernel gradients of i and j instead of using i's shape only.
  bool symmetrize_kernel = false;
  simd::Level simd = simd::Level::scalar;
  /// Adaptive-mode momentum residual (relative to |M g dt|) that aborts the
  /// run. Infinite by default: the residual is only logged.
  double momentum_residual_limit = std::numeric_limits<double>::infinity();

  KernelParams kernel(double a) const { return {a, kernel_b, h, 2}; }
};

double cfl_dt(double h, double c_sound, double cfl_number);

/// Step actually used: min(configured dt, CFL dt with the P-wave speed).
double effective_dt(const SolverSettings& settings);

/// Gathers the neighbour pairs of one particle and evaluates the pair sums
/// through the selected SIMD kernels. Sums always use particle i's kernel
/// shape (gather form) unless symmetrization is enabled.
class RateEvaluator {
 public:
  explicit RateEvaluator(const SolverSettings& settings);

  /// Recomputes per-particle artificial stresses; call once per state.
  void prepare(const ParticleSystem& state);

  /// Sums over real neighbours and over boundary neighbours separately.
  /// Pair geometry is taken from the current positions in `state`.
  std::pair<simd::RateSums, simd::RateSums> particle_sums(std::size_t i, const ParticleSystem& state,
                                                          const NeighborTable& table);

  const SolverSettings& settings() const { return settings_; }

 private:
  void gather(std::size_t i, const ParticleSystem& state, const NeighborTable& table);

  SolverSettings settings_;
  const simd::PairKernels* kernels_;
  simd::ViscosityParams visc_;
  KernelShape reference_shape_;  // a = 1, for the artificial-stress weighting
  double w_at_spacing_ = 1.0;
  simd::PairBatch batch_;
  std::vector<ArtificialStress> artificial_;
};

// Single-particle entry points of the discrete conservation laws. Each call
// gathers the pairs afresh; the solver uses RateEvaluator directly.
double continuity_rhs(std::size_t i, const NeighborTable& table, const ParticleSystem& state,
                      const SolverSettings& settings);
/// Includes gravity.
Vec2 momentum_rhs(std::size_t i, const NeighborTable& table, const ParticleSystem& state,
                  const SolverSettings& settings);
double energy_rhs(std::size_t i, const NeighborTable& table, const ParticleSystem& state,
                  const SolverSettings& settings);
std::pair<StrainRate, Spin> strain_spin_rates(std::size_t i, const NeighborTable& table,
                                              const ParticleSystem& state, const SolverSettings& settings);

}  // namespace geosph
