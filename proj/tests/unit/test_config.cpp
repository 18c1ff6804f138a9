#include <doctest.h>

#include <cmath>
#include <numbers>

#include "geosph/config.hpp"
#include "geosph/errors.hpp"

using namespace geosph;

TEST_CASE("scenario defaults carry the reference parameters") {
  const SimConfig cut = scenario_defaults(Scenario::vertical_cut);
  CHECK(cut.rho0 == 1850.0);
  CHECK(cut.youngs_modulus == 1.5e6);
  CHECK(cut.poisson_ratio == 0.2);
  CHECK(cut.cohesion == 5e3);
  CHECK(cut.friction_angle_deg == 20.0);
  CHECK(cut.spacing == 0.025);
  CHECK(cut.h == 0.0375);
  CHECK(cut.dt == 5e-5);
  CHECK(cut.gamma1 == 1.0);
  CHECK(cut.gamma2 == 0.0);
  CHECK(cut.h / cut.spacing == doctest::Approx(1.5));

  const SimConfig drop = scenario_defaults(Scenario::cylinder_drop);
  CHECK(drop.youngs_modulus == 5e6);
  CHECK(drop.cohesion == 30e3);
  CHECK(drop.friction_angle_deg == 22.0);
  CHECK(drop.spacing == 0.0005);
  CHECK(drop.h == 0.00075);
  CHECK(drop.dt == 1e-6);
  CHECK(drop.gamma1 == 1.0);
  CHECK(drop.gamma2 == 1.0);
  CHECK(drop.h / drop.spacing == doctest::Approx(1.5));
  CHECK_NOTHROW(validate_config(cut));
  CHECK_NOTHROW(validate_config(drop));
}

TEST_CASE("parsing and overrides") {
  const SimConfig c = parse_config(
      "# comment\n"
      "spacing = 0.05   # desk scale\n"
      "h=0.075\n"
      "scenario = vertical_cut\n"
      "stabilizer = artificial-stress\n"
      "eps_as = 0.2\n"
      "symmetrize_kernel = true\n");
  CHECK(c.spacing == 0.05);
  CHECK(c.h == 0.075);
  CHECK(c.stabilizer == StabilizerKind::artificial_stress);
  CHECK(c.eps_as == 0.2);
  CHECK(c.symmetrize_kernel);

  SimConfig d = c;
  const auto [k, v] = split_assignment("end_time=0.5");
  set_config_value(d, k, v);
  CHECK(d.end_time == 0.5);
  set_config_value(d, "scenario", "cylinder_drop");
  CHECK(d.spacing == 0.0005);  // scenario resets to its defaults
}

TEST_CASE("bad input is reported precisely") {
  SimConfig c;
  CHECK_THROWS_WITH_AS(set_config_value(c, "spacingg", "1"), "unknown config key 'spacingg'", ConfigError);
  CHECK_THROWS_AS(set_config_value(c, "spacing", "abc"), ConfigError);
  CHECK_THROWS_AS(set_config_value(c, "spacing", "1.0x"), ConfigError);
  CHECK_THROWS_AS(set_config_value(c, "left_wall", "maybe"), ConfigError);
  CHECK_THROWS_AS(set_config_value(c, "stabilizer", "xsph"), ConfigError);
  CHECK_THROWS_AS(parse_config("spacing 0.1\n"), ConfigError);
  CHECK_THROWS_AS(split_assignment("novalue"), ConfigError);
  CHECK_THROWS_AS(load_config("/nonexistent/geosph.cfg"), IoError);

  c.poisson_ratio = 0.6;
  CHECK_THROWS_WITH_AS(validate_config(c), "poisson_ratio = 0.6 out of range [0, 0.5)", ConfigError);
  c = SimConfig{};
  c.block_width = 4.01;
  CHECK_THROWS_AS(validate_config(c), ConfigError);
  c = SimConfig{};
  c.end_time = 0.0;
  CHECK_THROWS_AS(validate_config(c), ConfigError);
  c = scenario_defaults(Scenario::cylinder_drop);
  c.spacing = 0.06;
  CHECK_THROWS_AS(validate_config(c), ConfigError);
  c = SimConfig{};
  c.format = "hdf5";
  CHECK_THROWS_AS(validate_config(c), ConfigError);
}

TEST_CASE("dump round trip") {
  SimConfig c = scenario_defaults(Scenario::cylinder_drop);
  c.spacing = 0.00125;
  c.h = 0.001875;
  c.output_dir = "out/run1";
  c.stabilizer = StabilizerKind::conventional;
  const SimConfig back = parse_config(dump_config(c));
  CHECK(dump_config(back) == dump_config(c));
  CHECK(back.spacing == c.spacing);
  CHECK(back.output_dir == "out/run1");
  CHECK(config_keys().size() > 30);
}

TEST_CASE("settings derivation") {
  const SolverSettings s = to_settings(scenario_defaults(Scenario::vertical_cut));
  CHECK(s.material.phi == doctest::Approx(20.0 * std::numbers::pi / 180.0).epsilon(1e-15));
  CHECK(s.material.alpha_phi == doctest::Approx(0.3355409).epsilon(1e-6));
  CHECK(s.controls.gamma1 == 1.0);
  CHECK(s.h == 0.0375);
  CHECK(std::isinf(s.momentum_residual_limit));
}
