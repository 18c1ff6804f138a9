#include <doctest.h>

#include <cmath>

#include "geosph/config.hpp"
#include "geosph/diagnostics.hpp"
#include "geosph/errors.hpp"
#include "geosph/scenarios.hpp"

using namespace geosph;

TEST_CASE("cylinder drop particle counts and state") {
  SimConfig c = scenario_defaults(Scenario::cylinder_drop);
  const ParticleSystem full = build_cylinder_drop(c);
  CHECK(full.n_real == 8021);
  CHECK(full.n_boundary() == 2004);

  c.spacing = 0.00125;
  c.h = 0.001875;
  const ParticleSystem desk = build_cylinder_drop(c);
  CHECK(desk.n_real == 1313);
  CHECK(max_spread(desk) == doctest::Approx(0.05).epsilon(1e-12));

  double min_y = 1e9;
  for (std::size_t i = 0; i < desk.n_real; ++i) {
    CHECK(desk.vx[i] == 0.0);
    CHECK(desk.vy[i] == -5.0);
    CHECK(desk.mass[i] == doctest::Approx(1850.0 * 0.00125 * 0.00125));
    CHECK(desk.stress(i).pressure() == 0.0);
    min_y = std::min(min_y, desk.y[i]);
  }
  CHECK(min_y == doctest::Approx(0.0015));
  for (std::size_t k = desk.n_real; k < desk.size(); ++k) CHECK(desk.y[k] < 0.0);
}

TEST_CASE("slope block counts") {
  SimConfig c = scenario_defaults(Scenario::vertical_cut);
  const ParticleSystem full = build_vertical_cut(c);
  CHECK(full.n_real == 13041);  // 161 x 81
  c.spacing = 0.05;
  c.h = 0.075;
  const ParticleSystem desk = build_vertical_cut(c);
  CHECK(desk.n_real == 3321);  // 81 x 41
  CHECK(max_spread(desk) == doctest::Approx(4.0));
  CHECK(desk.walls.size() == 2);
  for (std::size_t k = desk.n_real; k < desk.size(); ++k) CHECK((desk.x[k] < 0.0 || desk.y[k] < 0.0));

  c.left_wall = false;
  CHECK(build_vertical_cut(c).walls.size() == 1);
}

TEST_CASE("custom scenario uses the block builder") {
  SimConfig c = scenario_defaults(Scenario::custom);
  c.spacing = 0.1;
  c.h = 0.15;
  c.block_width = 1.0;
  c.block_height = 0.5;
  CHECK(build_scenario(c).n_real == 11 * 6);
  c.block_width = 1.05;
  CHECK_THROWS_AS(build_scenario(c), ConfigError);
}

TEST_CASE("full-support mask is symmetric across lattice ties") {
  SimConfig c = scenario_defaults(Scenario::vertical_cut);
  c.spacing = 0.05;
  c.h = 0.075;
  const ParticleSystem ps = build_vertical_cut(c);
  const std::vector<char> mask = full_support_mask(ps, c.kernel_b * c.h);
  std::size_t n = 0;
  for (char m : mask) n += m ? 1 : 0;
  CHECK(n == (81 - 4) * (41 - 4));  // the strict 3s cutoff reaches two rows out
}
