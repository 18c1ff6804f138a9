#pragma once

#include <concepts>

namespace geosph {

/// A system that can be advanced by the midpoint predictor-corrector.
/// evaluate() returns the time derivatives at a state, advance() performs
/// state += dt * rates, and constrain() projects a freshly advanced state
/// back onto the admissible set (the stress return for the SPH model).
template <class M>
concept MidpointModel = requires(M& model, typename M::State& state, const typename M::Rates& rates, double dt) {
  { model.evaluate(state) } -> std::same_as<typename M::Rates>;
  model.advance(state, rates, dt);
  model.constrain(state);
};

/// One step t -> t + dt: predict the half step from the rates at t, then
/// correct the full step with the midpoint rates. Returns the midpoint rates.
template <MidpointModel M>
typename M::Rates midpoint_step(M& model, typename M::State& state, double dt) {
  typename M::State half = state;
  const typename M::Rates start = model.evaluate(state);
  model.advance(half, start, 0.5 * dt);
  model.constrain(half);
  typename M::Rates mid = model.evaluate(half);
  model.advance(state, mid, dt);
  model.constrain(state);
  return mid;
}

}  // namespace geosph
