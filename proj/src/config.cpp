#include "geosph/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>

#include "geosph/errors.hpp"

namespace geosph {

std::string to_string(Scenario s) {
  switch (s) {
    case Scenario::cylinder_drop: return "cylinder_drop";
    case Scenario::vertical_cut: return "vertical_cut";
    case Scenario::custom: return "custom";
  }
  return "custom";
}

Scenario parse_scenario(const std::string& name) {
  if (name == "cylinder_drop" || name == "cylinder-drop") return Scenario::cylinder_drop;
  if (name == "vertical_cut" || name == "vertical-cut") return Scenario::vertical_cut;
  if (name == "custom") return Scenario::custom;
  throw ConfigError("scenario: unknown value '" + name + "' (expected cylinder_drop, vertical_cut or custom)");
}

SimConfig scenario_defaults(Scenario s) {
  SimConfig cfg;
  cfg.scenario = s;
  if (s == Scenario::cylinder_drop) {
    cfg.spacing = 0.0005;
    cfg.h = 0.00075;
    cfg.rho0 = 1850.0;
    cfg.youngs_modulus = 5.0e6;
    cfg.poisson_ratio = 0.2;
    cfg.cohesion = 30.0e3;
    cfg.friction_angle_deg = 22.0;
    cfg.dilatancy_angle_deg = 0.0;
    cfg.dt = 1e-6;
    cfg.gamma1 = 1.0;
    cfg.gamma2 = 1.0;
    cfg.end_time = 0.004;
    cfg.snapshot_interval = 1e-4;
  }
  return cfg;
}

namespace {

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

double parse_double(const std::string& key, const std::string& text) {
  double v = 0.0;
  const char* first = text.data();
  const char* last = first + text.size();
  if (!text.empty() && *first == '+') ++first;
  const auto res = std::from_chars(first, last, v);
  if (res.ec != std::errc{} || res.ptr != last || text.empty())
    throw ConfigError(key + ": expected a number, got '" + text + "'");
  return v;
}

int parse_int(const std::string& key, const std::string& text) {
  int v = 0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc{} || res.ptr != text.data() + text.size() || text.empty())
    throw ConfigError(key + ": expected an integer, got '" + text + "'");
  return v;
}

bool parse_bool(const std::string& key, const std::string& text) {
  if (text == "true" || text == "1" || text == "yes" || text == "on") return true;
  if (text == "false" || text == "0" || text == "no" || text == "off") return false;
  throw ConfigError(key + ": expected true or false, got '" + text + "'");
}

struct Key {
  std::string name;
  std::function<void(SimConfig&, const std::string&)> set;
  std::function<std::string(const SimConfig&)> get;
};

Key real(const char* name, double SimConfig::*field) {
  return {name, [=](SimConfig& c, const std::string& v) { c.*field = parse_double(name, v); },
          [=](const SimConfig& c) { return format_double(c.*field); }};
}

Key integer(const char* name, int SimConfig::*field) {
  return {name, [=](SimConfig& c, const std::string& v) { c.*field = parse_int(name, v); },
          [=](const SimConfig& c) { return std::to_string(c.*field); }};
}

Key flag(const char* name, bool SimConfig::*field) {
  return {name, [=](SimConfig& c, const std::string& v) { c.*field = parse_bool(name, v); },
          [=](const SimConfig& c) { return std::string(c.*field ? "true" : "false"); }};
}

Key text(const char* name, std::string SimConfig::*field) {
  return {name, [=](SimConfig& c, const std::string& v) { c.*field = v; },
          [=](const SimConfig& c) { return c.*field; }};
}

const std::vector<Key>& keys() {
  static const std::vector<Key> table = {
      {"scenario", [](SimConfig& c, const std::string& v) { c = scenario_defaults(parse_scenario(v)); },
       [](const SimConfig& c) { return to_string(c.scenario); }},
      real("spacing", &SimConfig::spacing),
      real("h", &SimConfig::h),
      real("kernel_b", &SimConfig::kernel_b),
      real("rho0", &SimConfig::rho0),
      real("youngs_modulus", &SimConfig::youngs_modulus),
      real("poisson_ratio", &SimConfig::poisson_ratio),
      real("cohesion", &SimConfig::cohesion),
      real("friction_angle_deg", &SimConfig::friction_angle_deg),
      real("dilatancy_angle_deg", &SimConfig::dilatancy_angle_deg),
      real("dt", &SimConfig::dt),
      real("gamma1", &SimConfig::gamma1),
      real("gamma2", &SimConfig::gamma2),
      real("epsilon_visc", &SimConfig::epsilon_visc),
      real("gravity_x", &SimConfig::gravity_x),
      real("gravity_y", &SimConfig::gravity_y),
      real("cfl_number", &SimConfig::cfl_number),
      real("end_time", &SimConfig::end_time),
      real("snapshot_interval", &SimConfig::snapshot_interval),
      {"stabilizer", [](SimConfig& c, const std::string& v) {
         try {
           c.stabilizer = parse_stabilizer_kind(v);
         } catch (const std::invalid_argument& e) {
           throw ConfigError(std::string("stabilizer: ") + e.what());
         }
       },
       [](const SimConfig& c) { return to_string(c.stabilizer); }},
      real("eps_as", &SimConfig::eps_as),
      real("exponent_n", &SimConfig::exponent_n),
      real("conventional_knot", &SimConfig::conventional_knot),
      real("compression_knot", &SimConfig::compression_knot),
      real("neighbour_margin", &SimConfig::neighbour_margin),
      flag("symmetrize_kernel", &SimConfig::symmetrize_kernel),
      real("momentum_residual_limit", &SimConfig::momentum_residual_limit),
      real("chi_max", &SimConfig::chi_max),
      integer("boundary_layers", &SimConfig::boundary_layers),
      real("cylinder_diameter", &SimConfig::cylinder_diameter),
      real("drop_gap", &SimConfig::drop_gap),
      real("impact_speed", &SimConfig::impact_speed),
      real("floor_width", &SimConfig::floor_width),
      real("block_width", &SimConfig::block_width),
      real("block_height", &SimConfig::block_height),
      real("floor_length", &SimConfig::floor_length),
      flag("left_wall", &SimConfig::left_wall),
      text("output_dir", &SimConfig::output_dir),
      text("format", &SimConfig::format),
      text("simd", &SimConfig::simd),
      flag("step_log", &SimConfig::step_log),
  };
  return table;
}

const Key& find_key(const std::string& name) {
  for (const auto& k : keys())
    if (k.name == name) return k;
  throw ConfigError("unknown config key '" + name + "'");
}

void require(bool ok, const std::string& message) {
  if (!ok) throw ConfigError(message);
}

std::string range_msg(const char* key, double v, const char* range) {
  return std::string(key) + " = " + format_double(v) + " out of range " + range;
}

bool multiple_of(double length, double spacing) {
  const double n = length / spacing;
  return std::abs(n - std::round(n)) < 1e-6;
}

}  // namespace

void set_config_value(SimConfig& cfg, const std::string& key, const std::string& value) {
  find_key(trim(key)).set(cfg, trim(value));
}

std::pair<std::string, std::string> split_assignment(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos) throw ConfigError("expected key=value, got '" + text + "'");
  return {trim(text.substr(0, eq)), trim(text.substr(eq + 1))};
}

SimConfig parse_config(const std::string& text, const std::string& origin) {
  std::vector<std::pair<std::string, std::string>> entries;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    try {
      entries.push_back(split_assignment(line));
    } catch (const ConfigError& e) {
      throw ConfigError(origin + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }

  SimConfig cfg;
  for (const auto& [k, v] : entries)
    if (k == "scenario") set_config_value(cfg, k, v);
  for (const auto& [k, v] : entries)
    if (k != "scenario") set_config_value(cfg, k, v);
  return cfg;
}

SimConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), path);
}

void validate_config(const SimConfig& c) {
  require(c.spacing > 0.0, range_msg("spacing", c.spacing, "(0, inf)"));
  require(c.h > 0.0, range_msg("h", c.h, "(0, inf)"));
  require(c.kernel_b > 0.0, range_msg("kernel_b", c.kernel_b, "(0, inf)"));
  require(c.rho0 > 0.0, range_msg("rho0", c.rho0, "(0, inf)"));
  require(c.youngs_modulus > 0.0, range_msg("youngs_modulus", c.youngs_modulus, "(0, inf)"));
  require(c.poisson_ratio >= 0.0 && c.poisson_ratio < 0.5, range_msg("poisson_ratio", c.poisson_ratio, "[0, 0.5)"));
  require(c.cohesion >= 0.0, range_msg("cohesion", c.cohesion, "[0, inf)"));
  require(c.friction_angle_deg >= 0.0 && c.friction_angle_deg < 90.0,
          range_msg("friction_angle_deg", c.friction_angle_deg, "[0, 90)"));
  require(c.dilatancy_angle_deg >= 0.0 && c.dilatancy_angle_deg < 90.0,
          range_msg("dilatancy_angle_deg", c.dilatancy_angle_deg, "[0, 90)"));
  require(c.dt > 0.0, range_msg("dt", c.dt, "(0, inf)"));
  require(c.gamma1 >= 0.0, range_msg("gamma1", c.gamma1, "[0, inf)"));
  require(c.gamma2 >= 0.0, range_msg("gamma2", c.gamma2, "[0, inf)"));
  require(c.epsilon_visc > 0.0, range_msg("epsilon_visc", c.epsilon_visc, "(0, inf)"));
  require(std::isfinite(c.gravity_x) && std::isfinite(c.gravity_y), "gravity must be finite");
  require(c.cfl_number > 0.0, range_msg("cfl_number", c.cfl_number, "(0, inf)"));
  require(c.end_time > 0.0, range_msg("end_time", c.end_time, "(0, inf)"));
  require(c.snapshot_interval > 0.0, range_msg("snapshot_interval", c.snapshot_interval, "(0, inf)"));
  require(c.eps_as >= 0.0 && c.eps_as <= 1.0, range_msg("eps_as", c.eps_as, "[0, 1]"));
  require(c.exponent_n > 0.0, range_msg("exponent_n", c.exponent_n, "(0, inf)"));
  require(c.conventional_knot > 0.0 && c.conventional_knot <= c.kernel_b,
          range_msg("conventional_knot", c.conventional_knot, "(0, kernel_b]"));
  require(c.compression_knot > 0.0 && c.compression_knot <= c.kernel_b,
          range_msg("compression_knot", c.compression_knot, "(0, kernel_b]"));
  require(c.neighbour_margin >= 0.0, range_msg("neighbour_margin", c.neighbour_margin, "[0, inf)"));
  require(c.momentum_residual_limit >= 0.0,
          range_msg("momentum_residual_limit", c.momentum_residual_limit, "[0, inf)"));
  require(c.chi_max >= 1.0, range_msg("chi_max", c.chi_max, "[1, inf)"));
  require(c.boundary_layers >= 1, "boundary_layers must be at least 1");
  require(c.format == "csv" || c.format == "vtk" || c.format == "both",
          "format: unknown value '" + c.format + "' (expected csv, vtk or both)");
  require(c.simd == "auto" || c.simd == "scalar" || c.simd == "avx2",
          "simd: unknown value '" + c.simd + "' (expected auto, scalar or avx2)");

  if (c.scenario == Scenario::cylinder_drop) {
    require(c.cylinder_diameter > 0.0, range_msg("cylinder_diameter", c.cylinder_diameter, "(0, inf)"));
    require(c.spacing < c.cylinder_diameter, "spacing must be smaller than cylinder_diameter");
    require(c.drop_gap >= 0.0, range_msg("drop_gap", c.drop_gap, "[0, inf)"));
    require(c.floor_width > c.cylinder_diameter, "floor_width must exceed cylinder_diameter");
  } else {
    require(c.block_width > 0.0 && multiple_of(c.block_width, c.spacing),
            "block_width = " + format_double(c.block_width) + " is not a positive multiple of spacing");
    require(c.block_height > 0.0 && multiple_of(c.block_height, c.spacing),
            "block_height = " + format_double(c.block_height) + " is not a positive multiple of spacing");
    require(c.floor_length > c.block_width, "floor_length must exceed block_width");
  }
}

std::string dump_config(const SimConfig& cfg) {
  std::string out;
  for (const auto& k : keys()) out += k.name + " = " + k.get(cfg) + "\n";
  return out;
}

std::vector<std::string> config_keys() {
  std::vector<std::string> names;
  for (const auto& k : keys()) names.push_back(k.name);
  return names;
}

SolverSettings to_settings(const SimConfig& c) {
  constexpr double deg = std::numbers::pi / 180.0;
  SolverSettings s;
  try {
    s.material = make_material(c.rho0, c.youngs_modulus, c.poisson_ratio, c.cohesion, c.friction_angle_deg * deg,
                               c.dilatancy_angle_deg * deg);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  s.controls.dt = c.dt;
  s.controls.gamma1 = c.gamma1;
  s.controls.gamma2 = c.gamma2;
  s.controls.epsilon_visc = c.epsilon_visc;
  s.controls.gravity = {c.gravity_x, c.gravity_y};
  s.controls.cfl_number = c.cfl_number;
  s.h = c.h;
  s.kernel_b = c.kernel_b;
  s.spacing = c.spacing;
  s.stabilizer.kind = c.stabilizer;
  s.stabilizer.eps_as = c.eps_as;
  s.stabilizer.exponent_n = c.exponent_n;
  s.stabilizer.conventional_knot = c.conventional_knot;
  s.stabilizer.adaptive.compression_knot = c.compression_knot;
  s.stabilizer.adaptive.neighbour_margin = c.neighbour_margin;
  s.chi_max = c.chi_max;
  s.symmetrize_kernel = c.symmetrize_kernel;
  try {
    s.simd = simd::parse_level(c.simd);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("simd: ") + e.what());
  }
  if (c.momentum_residual_limit > 0.0) s.momentum_residual_limit = c.momentum_residual_limit;
  return s;
}

}  // namespace geosph
