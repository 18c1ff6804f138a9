#pragma once

#include "geosph/particles.hpp"

namespace testing_support {

/// (2n+1) x (2n+1) square lattice centred on the origin; particle 0 is at
/// the centre, so it has full support for n >= 3 with h = 1.5 s.
inline geosph::ParticleSystem centred_lattice(int n, double s, double rho = 1000.0) {
  geosph::ParticleSystem ps;
  ps.add_real({0.0, 0.0}, {}, rho, rho * s * s, s, 1.0);
  for (int j = -n; j <= n; ++j)
    for (int i = -n; i <= n; ++i)
      if (i != 0 || j != 0) ps.add_real({i * s, j * s}, {}, rho, rho * s * s, s, 1.0);
  return ps;
}

}  // namespace testing_support
