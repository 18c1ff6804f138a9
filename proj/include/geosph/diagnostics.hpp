#pragma once

#include <cstddef>
#include <vector>

#include "geosph/neighbors.hpp"
#include "geosph/particles.hpp"

namespace geosph {

/// Horizontal extent max(x) - min(x) of the real particles; 0 for fewer
/// than two particles.
double max_spread(const ParticleSystem& state);

/// Nearest-neighbour distances among real particles.
struct SpacingStats {
  std::size_t count = 0;
  double min = 0.0;
  double max = 0.0;
  double mean = 0.0;
  double bin_width = 0.0;
  std::vector<std::size_t> histogram;  // last bin collects everything beyond
};

/// interior[i] marks the particles to include. Nearest neighbours are
/// searched among all real particles; the search falls back to brute force
/// for particles with no neighbour inside `search_radius`.
SpacingStats spacing_stats(const ParticleSystem& state, const std::vector<char>& interior, double search_radius,
                           double bin_width, std::size_t bins = 16);

/// Particles whose real-neighbour count within `radius` equals the maximum
/// count found (a full stencil). Evaluated on the initial lattice; distances
/// within 1e-9 relative of the radius count as outside.
std::vector<char> full_support_mask(const ParticleSystem& state, double radius);

/// Nearest real-neighbour distance of every particle flagged in `mask`
/// (others get 0).
std::vector<double> nearest_neighbor_distances(const ParticleSystem& state, const std::vector<char>& mask,
                                               double search_radius);

/// Share of flagged particles whose nearest neighbour is farther than
/// `threshold`.
double fracture_fraction(const std::vector<double>& nearest, const std::vector<char>& mask, double threshold);

struct Energies {
  double kinetic = 0.0;
  double strain = 0.0;     // elastic: J2/(2G) + p^2/(2K) per unit volume
  double potential = 0.0;  // -m g.x
  double internal = 0.0;   // m e
  double total() const { return kinetic + strain + potential; }
};

Energies energies(const ParticleSystem& state, const MaterialParams& mat, Vec2 gravity);

Vec2 total_momentum(const ParticleSystem& state);

}  // namespace geosph
