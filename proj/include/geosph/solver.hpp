#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "geosph/neighbors.hpp"
#include "geosph/particles.hpp"
#include "geosph/sph.hpp"
#include "geosph/stabilizer.hpp"

namespace geosph {

/// Linear-momentum balance of one step. residual = |dP - gravity - boundary|.
struct StepDiagnostics {
  std::uint64_t step = 0;
  double time = 0.0;
  Vec2 momentum;
  Vec2 momentum_change;
  Vec2 gravity_impulse;
  Vec2 boundary_impulse;
  double residual = 0.0;
  double relative_residual = 0.0;  // residual / |gravity impulse|
};

/// Time derivatives of every real particle's fields.
struct ParticleRates {
  std::vector<double> vx, vy, ax, ay, drho, de;
  std::vector<double> sxx, syy, szz, sxy;
  std::vector<double> exx, eyy, exy;
  std::vector<double> plastic;  // effective plastic strain rate
  Vec2 boundary_force;          // sum of m_i times the ghost contribution

  void resize(std::size_t n);
};

/// Midpoint predictor-corrector over a ParticleSystem. The neighbour table
/// is rebuilt once per step at the corrected positions; the half step reuses
/// the pair list with geometry recomputed from the predicted positions.
class Solver {
 public:
  Solver(ParticleSystem initial, const SolverSettings& settings);

  /// Advances one step. Throws NumericalAbort on a non-finite field, a
  /// non-positive density or a collapsed cell; the state is left as it was
  /// when the failure was detected.
  void step();

  const ParticleSystem& state() const { return state_; }
  const SolverSettings& settings() const { return settings_; }
  const NeighborTable& neighbors() const { return table_; }
  const StepDiagnostics& last_step() const { return last_; }
  double time() const { return time_; }
  double dt() const { return dt_; }
  std::uint64_t step_count() const { return steps_; }

  /// Result of the latest knot adaptation (adaptive mode only; empty
  /// otherwise): pressure zone and farthest-immediate-neighbour estimate.
  std::span<const PressureZone> zones() const { return zones_; }
  std::span<const double> immediate_radius() const { return radius_; }

  // Integrator model interface.
  using State = ParticleSystem;
  using Rates = ParticleRates;
  Rates evaluate(const State& state);
  void advance(State& state, const Rates& rates, double dt) const;
  void constrain(State& state) const;

 private:
  void rebuild_neighbors();
  void adapt_knots();

  SolverSettings settings_;
  ParticleSystem state_;
  NeighborTable table_;
  RateEvaluator evaluator_;
  double dt_ = 0.0;
  double time_ = 0.0;
  std::uint64_t steps_ = 0;
  double total_mass_ = 0.0;
  StepDiagnostics last_;
  std::vector<PressureZone> zones_;
  std::vector<double> radius_;
  std::vector<double> pressure_scratch_;
};

}  // namespace geosph
