#include "geosph/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace geosph {

double max_spread(const ParticleSystem& st) {
  if (st.n_real < 2) return 0.0;
  const auto [lo, hi] = std::minmax_element(st.x.begin(), st.x.begin() + static_cast<std::ptrdiff_t>(st.n_real));
  return *hi - *lo;
}

std::vector<char> full_support_mask(const ParticleSystem& st, double radius) {
  // Lattice distances that tie with the radius up to round-off count as
  // outside, so equivalent lattice sites get the same count.
  const NeighborTable t = build_neighbors(st.x, st.y, st.n_real, st.n_real, radius);
  const double inner = radius * (1.0 - 1e-9);
  std::vector<std::uint32_t> count(st.n_real, 0);
  for (std::size_t i = 0; i < st.n_real; ++i)
    for (std::size_t k = t.begin(i); k < t.begin(i) + t.real_count[i]; ++k)
      if (t.r[k] < inner) ++count[i];
  const std::uint32_t full = st.n_real > 0 ? *std::max_element(count.begin(), count.end()) : 0;
  std::vector<char> mask(st.n_real, 0);
  for (std::size_t i = 0; i < st.n_real; ++i) mask[i] = count[i] == full ? 1 : 0;
  return mask;
}

std::vector<double> nearest_neighbor_distances(const ParticleSystem& st, const std::vector<char>& mask,
                                               double search_radius) {
  const NeighborTable t = build_neighbors(st.x, st.y, st.n_real, st.n_real, search_radius);
  std::vector<double> nearest(st.n_real, 0.0);
  for (std::size_t i = 0; i < st.n_real; ++i) {
    if (!mask[i]) continue;
    double best = std::numeric_limits<double>::infinity();
    const std::size_t end = t.begin(i) + t.real_count[i];
    for (std::size_t k = t.begin(i); k < end; ++k) best = std::min(best, t.r[k]);
    if (!std::isfinite(best)) {
      for (std::size_t j = 0; j < st.n_real; ++j)
        if (j != i) best = std::min(best, std::hypot(st.x[i] - st.x[j], st.y[i] - st.y[j]));
    }
    nearest[i] = std::isfinite(best) ? best : 0.0;
  }
  return nearest;
}

SpacingStats spacing_stats(const ParticleSystem& st, const std::vector<char>& interior, double search_radius,
                           double bin_width, std::size_t bins) {
  SpacingStats out;
  out.bin_width = bin_width;
  out.histogram.assign(bins, 0);
  const std::vector<double> nearest = nearest_neighbor_distances(st, interior, search_radius);
  double sum = 0.0;
  for (std::size_t i = 0; i < st.n_real; ++i) {
    if (!interior[i]) continue;
    const double d = nearest[i];
    out.min = out.count == 0 ? d : std::min(out.min, d);
    out.max = out.count == 0 ? d : std::max(out.max, d);
    sum += d;
    ++out.count;
    if (bins > 0) {
      const auto b = static_cast<std::size_t>(d / bin_width);
      ++out.histogram[std::min(b, bins - 1)];
    }
  }
  if (out.count > 0) out.mean = sum / static_cast<double>(out.count);
  return out;
}

double fracture_fraction(const std::vector<double>& nearest, const std::vector<char>& mask, double threshold) {
  std::size_t total = 0, broken = 0;
  for (std::size_t i = 0; i < mask.size(); ++i) {
    if (!mask[i]) continue;
    ++total;
    if (nearest[i] > threshold) ++broken;
  }
  return total == 0 ? 0.0 : static_cast<double>(broken) / static_cast<double>(total);
}

Energies energies(const ParticleSystem& st, const MaterialParams& mat, Vec2 gravity) {
  Energies e;
  for (std::size_t i = 0; i < st.n_real; ++i) {
    const double m = st.mass[i];
    e.kinetic += 0.5 * m * (st.vx[i] * st.vx[i] + st.vy[i] * st.vy[i]);
    const Stress s = st.stress(i);
    const double p = s.pressure();
    e.strain += m / st.rho[i] * (s.j2() / (2.0 * mat.shear_modulus) + p * p / (2.0 * mat.bulk_modulus));
    e.potential -= m * (gravity.x * st.x[i] + gravity.y * st.y[i]);
    e.internal += m * st.energy[i];
  }
  return e;
}

Vec2 total_momentum(const ParticleSystem& st) {
  Vec2 p;
  for (std::size_t i = 0; i < st.n_real; ++i) {
    p.x += st.mass[i] * st.vx[i];
    p.y += st.mass[i] * st.vy[i];
  }
  return p;
}

}  // namespace geosph
