#pragma once

#include "geosph/config.hpp"
#include "geosph/particles.hpp"

namespace geosph {

/// Disc on a rigid floor. Particles sit on a square lattice centred on the
/// disc and are kept when |x - c| <= R + s/2. The floor surface is y = 0 and
/// the disc bottom starts drop_gap above it, moving at (0, -impact_speed).
ParticleSystem build_cylinder_drop(const SimConfig& cfg);

/// Rectangular block with its lower-left particle at the origin, a rigid
/// floor half a spacing below the bottom row and (optionally) a rigid wall
/// half a spacing left of the first column. The right face is free. Also
/// used by the custom scenario with its own block dimensions.
ParticleSystem build_vertical_cut(const SimConfig& cfg);

/// Dispatches on cfg.scenario. Throws ConfigError on inconsistent geometry.
ParticleSystem build_scenario(const SimConfig& cfg);

}  // namespace geosph
