#include "geosph/particles.hpp"

#include <stdexcept>

namespace geosph {

Particle ParticleSystem::particle(std::size_t i) const {
  Particle p;
  p.id = static_cast<std::uint32_t>(i);
  p.kind = kind(i);
  p.x = position(i);
  p.v = velocity(i);
  p.rho = rho[i];
  p.m = mass[i];
  p.sigma = stress(i);
  p.e = energy[i];
  p.eps_bar_p = eps_p[i];
  p.a_knot = knot[i];
  p.cell = cell[i];
  return p;
}

void ParticleSystem::add_real(Vec2 pos, Vec2 vel, double density, double particle_mass, double spacing,
                              double knot_value) {
  if (n_real != size()) throw std::logic_error("real particles must be added before boundary particles");
  if (!(density > 0.0) || !(particle_mass > 0.0)) throw std::invalid_argument("density and mass must be positive");
  x.push_back(pos.x);
  y.push_back(pos.y);
  vx.push_back(vel.x);
  vy.push_back(vel.y);
  rho.push_back(density);
  mass.push_back(particle_mass);
  sxx.push_back(0.0);
  syy.push_back(0.0);
  szz.push_back(0.0);
  sxy.push_back(0.0);
  energy.push_back(0.0);
  eps_p.push_back(0.0);
  knot.push_back(knot_value);
  cell.push_back(DeformedCell::square(spacing));
  ++n_real;
}

void ParticleSystem::add_boundary(const GhostParticle& ghost, double density, double particle_mass) {
  if (ghost.wall >= walls.size()) throw std::invalid_argument("ghost references an unknown wall");
  x.push_back(ghost.position.x);
  y.push_back(ghost.position.y);
  vx.push_back(0.0);
  vy.push_back(0.0);
  rho.push_back(density);
  mass.push_back(particle_mass);
  sxx.push_back(0.0);
  syy.push_back(0.0);
  szz.push_back(0.0);
  sxy.push_back(0.0);
  energy.push_back(0.0);
  eps_p.push_back(0.0);
  knot.push_back(0.0);
  cell.push_back(DeformedCell{});
  ghost_wall.push_back(ghost.wall);
  ghost_distance.push_back(ghost.wall_distance);
}

}  // namespace geosph
