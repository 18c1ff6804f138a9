#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "geosph/boundary.hpp"
#include "geosph/constitutive.hpp"
#include "geosph/stabilizer.hpp"
#include "geosph/vec2.hpp"

namespace geosph {

enum class ParticleKind : std::uint8_t { real = 0, boundary = 1 };

/// Value view of one particle, assembled from the SoA store.
struct Particle {
  std::uint32_t id = 0;
  ParticleKind kind = ParticleKind::real;
  Vec2 x;
  Vec2 v;
  double rho = 0.0;
  double m = 0.0;
  Stress sigma;
  double e = 0.0;
  double eps_bar_p = 0.0;
  double a_knot = 1.0;
  DeformedCell cell;
};

/// Structure-of-arrays particle store. Real particles occupy [0, n_real),
/// boundary (ghost) particles follow. Boundary entries keep their initial
/// position, density and zero stress for the whole run.
struct ParticleSystem {
  std::size_t n_real = 0;

  std::vector<double> x, y;
  std::vector<double> vx, vy;
  std::vector<double> rho;
  std::vector<double> mass;
  std::vector<double> sxx, syy, szz, sxy;
  std::vector<double> energy;
  std::vector<double> eps_p;
  std::vector<double> knot;
  std::vector<DeformedCell> cell;

  /// Wall geometry and, for every boundary particle (index n_real + k), the
  /// wall it belongs to and its perpendicular distance from that wall.
  std::vector<WallLine> walls;
  std::vector<std::uint32_t> ghost_wall;
  std::vector<double> ghost_distance;

  std::size_t size() const { return x.size(); }
  std::size_t n_boundary() const { return size() - n_real; }
  ParticleKind kind(std::size_t i) const { return i < n_real ? ParticleKind::real : ParticleKind::boundary; }

  Vec2 position(std::size_t i) const { return {x[i], y[i]}; }
  Vec2 velocity(std::size_t i) const { return {vx[i], vy[i]}; }
  Stress stress(std::size_t i) const { return {sxx[i], syy[i], szz[i], sxy[i]}; }
  void set_stress(std::size_t i, const Stress& s) {
    sxx[i] = s.xx;
    syy[i] = s.yy;
    szz[i] = s.zz;
    sxy[i] = s.xy;
  }

  Particle particle(std::size_t i) const;

  /// Appends a real particle. Must be called before any boundary particle.
  void add_real(Vec2 pos, Vec2 vel, double density, double particle_mass, double spacing, double knot_value);
  /// Appends a stationary ghost particle.
  void add_boundary(const GhostParticle& ghost, double density, double particle_mass);
};

}  // namespace geosph
