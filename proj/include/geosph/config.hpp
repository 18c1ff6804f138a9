#pragma once

#include <string>
#include <utility>
#include <vector>

#include "geosph/sph.hpp"

namespace geosph {

enum class Scenario { cylinder_drop, vertical_cut, custom };

std::string to_string(Scenario s);
Scenario parse_scenario(const std::string& name);

/// Full run description. Every field has a flat key (see config_keys());
/// defaults reproduce the two reference scenarios at full resolution.
struct SimConfig {
  Scenario scenario = Scenario::vertical_cut;

  // Discretization.
  double spacing = 0.025;
  double h = 0.0375;
  double kernel_b = 2.0;

  // Material (angles in degrees in the file, radians after to_settings()).
  double rho0 = 1850.0;
  double youngs_modulus = 1.5e6;
  double poisson_ratio = 0.2;
  double cohesion = 5.0e3;
  double friction_angle_deg = 20.0;
  double dilatancy_angle_deg = 0.0;

  // Time stepping.
  double dt = 5e-5;
  double gamma1 = 1.0;
  double gamma2 = 0.0;
  double epsilon_visc = 0.01;
  double gravity_x = 0.0;
  double gravity_y = -9.81;
  double cfl_number = 0.1;
  double end_time = 2.0;
  double snapshot_interval = 0.1;

  // Stabilizer.
  StabilizerKind stabilizer = StabilizerKind::adaptive_kernel;
  double eps_as = 0.5;
  double exponent_n = 2.55;
  double conventional_knot = 1.0;
  double compression_knot = 0.2;
  double neighbour_margin = 0.05;
  bool symmetrize_kernel = false;
  double momentum_residual_limit = 0.0;  // 0 disables the abort

  // Boundary.
  double chi_max = 1.5;
  int boundary_layers = 3;

  // Cylinder drop geometry.
  double cylinder_diameter = 0.05;
  double drop_gap = 0.0015;
  double impact_speed = 5.0;
  double floor_width = 0.3335;

  // Vertical cut geometry (also used by the custom block).
  double block_width = 4.0;
  double block_height = 2.0;
  double floor_length = 8.0;
  bool left_wall = true;

  // Output.
  std::string output_dir;
  std::string format = "csv";  // csv, vtk or both
  std::string simd = "auto";   // auto, scalar or avx2
  bool step_log = true;
};

/// Reference parameters of a scenario (custom starts from vertical_cut).
SimConfig scenario_defaults(Scenario s);

/// Sets one key from text. Throws ConfigError for unknown keys or values
/// that do not parse. Setting "scenario" resets every field to that
/// scenario's defaults, so it should come first.
void set_config_value(SimConfig& cfg, const std::string& key, const std::string& value);

/// Parses "key=value" (used by --set).
std::pair<std::string, std::string> split_assignment(const std::string& text);

/// Reads a key = value file. '#' starts a comment. A scenario key, wherever
/// it appears, is applied before the other keys. Throws IoError/ConfigError.
SimConfig load_config(const std::string& path);
SimConfig parse_config(const std::string& text, const std::string& origin = "<string>");

/// Range and consistency checks with a message naming the offending key.
/// Throws ConfigError on the first violation.
void validate_config(const SimConfig& cfg);

/// Key = value dump that load_config reads back to the same config.
std::string dump_config(const SimConfig& cfg);

std::vector<std::string> config_keys();

/// Solver parameters derived from a validated config.
SolverSettings to_settings(const SimConfig& cfg);

}  // namespace geosph
