#include "geosph/scenarios.hpp"

#include <cmath>

#include "geosph/boundary.hpp"
#include "geosph/errors.hpp"

namespace geosph {

namespace {

void add_ghosts(ParticleSystem& ps, const BoundarySegment& segment, double rho0, double mass) {
  GhostLayers layers;
  try {
    layers = generate_layers(segment);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("boundary geometry: ") + e.what());
  }
  const auto wall_offset = static_cast<std::uint32_t>(ps.walls.size());
  ps.walls.insert(ps.walls.end(), layers.walls.begin(), layers.walls.end());
  for (GhostParticle g : layers.particles) {
    g.wall += wall_offset;
    ps.add_boundary(g, rho0, mass);
  }
}

}  // namespace

ParticleSystem build_cylinder_drop(const SimConfig& cfg) {
  const double s = cfg.spacing;
  const double radius = 0.5 * cfg.cylinder_diameter;
  if (!(s > 0.0) || s >= cfg.cylinder_diameter) throw ConfigError("spacing must be smaller than cylinder_diameter");

  const Vec2 centre{0.0, cfg.drop_gap + radius};
  const Vec2 velocity{0.0, -cfg.impact_speed};
  const double mass = cfg.rho0 * s * s;
  const double keep = radius + 0.5 * s;
  const int n = static_cast<int>(std::ceil(keep / s));

  ParticleSystem ps;
  for (int j = -n; j <= n; ++j) {
    for (int i = -n; i <= n; ++i) {
      const Vec2 offset{i * s, j * s};
      if (norm(offset) <= keep) ps.add_real(centre + offset, velocity, cfg.rho0, mass, s, cfg.conventional_knot);
    }
  }

  BoundarySegment floor;
  floor.vertices = {{-0.5 * cfg.floor_width, 0.0}, {0.5 * cfg.floor_width, 0.0}};
  floor.layer_count = cfg.boundary_layers;
  floor.spacing = s;
  floor.lattice_origin = floor.vertices.front();
  add_ghosts(ps, floor, cfg.rho0, mass);
  return ps;
}

ParticleSystem build_vertical_cut(const SimConfig& cfg) {
  const double s = cfg.spacing;
  const double nx_real = cfg.block_width / s;
  const double ny_real = cfg.block_height / s;
  if (!(s > 0.0) || std::abs(nx_real - std::round(nx_real)) > 1e-6 ||
      std::abs(ny_real - std::round(ny_real)) > 1e-6)
    throw ConfigError("block dimensions are not multiples of spacing");
  const long nx = std::lround(nx_real) + 1;
  const long ny = std::lround(ny_real) + 1;
  const double mass = cfg.rho0 * s * s;

  ParticleSystem ps;
  for (long j = 0; j < ny; ++j)
    for (long i = 0; i < nx; ++i) ps.add_real({i * s, j * s}, {}, cfg.rho0, mass, s, cfg.conventional_knot);

  const double wall_x = -0.5 * s;
  const double floor_y = -0.5 * s;
  BoundarySegment walls;
  if (cfg.left_wall)
    walls.vertices = {{wall_x, cfg.block_height + 0.5 * s}, {wall_x, floor_y}, {cfg.floor_length, floor_y}};
  else
    walls.vertices = {{-cfg.floor_length, floor_y}, {cfg.floor_length, floor_y}};
  walls.layer_count = cfg.boundary_layers;
  walls.spacing = s;
  walls.lattice_origin = {0.0, 0.0};
  add_ghosts(ps, walls, cfg.rho0, mass);
  return ps;
}

ParticleSystem build_scenario(const SimConfig& cfg) {
  switch (cfg.scenario) {
    case Scenario::cylinder_drop: return build_cylinder_drop(cfg);
    case Scenario::vertical_cut:
    case Scenario::custom: return build_vertical_cut(cfg);
  }
  throw ConfigError("unknown scenario");
}

}  // namespace geosph
