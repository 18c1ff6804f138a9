#include "geosph/stabilizer.hpp"

#include <cmath>
#include <stdexcept>

#include "geosph/errors.hpp"
#include "geosph/kernel.hpp"

namespace geosph {

DeformedCell update_cell(const DeformedCell& cell, const StrainRate& eps, double dt) {
  DeformedCell next;
  next.dx = cell.dx * (1.0 + eps.xx * dt);
  next.dy = cell.dy * (1.0 + eps.yy * dt);
  next.sh_xy = cell.sh_xy + eps.xy * cell.dx * dt;
  next.sh_yx = cell.sh_yx + eps.xy * cell.dy * dt;
  if (!(next.dx > 0.0) || !(next.dy > 0.0))
    throw NumericalAbort("deformed cell edge collapsed (dX=" + std::to_string(next.dx) +
                         ", dY=" + std::to_string(next.dy) + ")");
  return next;
}

double farthest_immediate_distance(const DeformedCell& c) {
  // Diagonals of the sheared cell: x-edge (dx, sh_xy) plus y-edge (sh_yx, dy).
  const double s1 = std::hypot(c.dx + c.sh_yx, c.dy + c.sh_xy);
  const double s2 = std::hypot(c.dx - c.sh_yx, c.dy - c.sh_xy);
  return std::max(s1, s2);
}

PressureZone classify_pressure_zone(std::span<const double> neighbour_pressures) {
  for (double p : neighbour_pressures)
    if (p < 0.0) return PressureZone::tension_present;
  return PressureZone::all_compression;
}

double adapt_knot(PressureZone zone, double r_i, double b, double h, const AdaptiveKnotSettings& settings) {
  if (zone == PressureZone::all_compression) return settings.compression_knot;
  return knot_for_peak(r_i, b, h);
}

std::string to_string(StabilizerKind kind) {
  switch (kind) {
    case StabilizerKind::conventional: return "conventional";
    case StabilizerKind::adaptive_kernel: return "adaptive";
    case StabilizerKind::artificial_stress: return "artificial-stress";
  }
  return "unknown";
}

StabilizerKind parse_stabilizer_kind(const std::string& name) {
  if (name == "conventional") return StabilizerKind::conventional;
  if (name == "adaptive" || name == "adaptive_kernel") return StabilizerKind::adaptive_kernel;
  if (name == "artificial-stress" || name == "artificial_stress") return StabilizerKind::artificial_stress;
  throw std::invalid_argument("unknown stabilizer '" + name + "'");
}

ArtificialStress artificial_stress(const Stress& s, double rho, double eps_as) {
  if (eps_as == 0.0) return {};
  const double mean = 0.5 * (s.xx + s.yy);
  const double half_diff = 0.5 * (s.xx - s.yy);
  const double radius = std::hypot(half_diff, s.xy);
  const double s1 = mean + radius;
  const double s2 = mean - radius;
  if (s1 <= 0.0) return {};  // s2 <= s1, both compressive

  const double theta = 0.5 * std::atan2(s.xy, half_diff);
  const double c = std::cos(theta), sn = std::sin(theta);
  const double inv_rho2 = 1.0 / (rho * rho);
  const double r1 = -eps_as * s1 * inv_rho2;
  const double r2 = s2 > 0.0 ? -eps_as * s2 * inv_rho2 : 0.0;
  return {r1 * c * c + r2 * sn * sn, r1 * sn * sn + r2 * c * c, (r1 - r2) * sn * c};
}

ArtificialStress artificial_stress_term(const ArtificialStress& r_i, const ArtificialStress& r_j, double f,
                                        double exponent_n) {
  const double fn = f > 0.0 ? std::pow(f, exponent_n) : 0.0;
  return {fn * (r_i.xx + r_j.xx), fn * (r_i.yy + r_j.yy), fn * (r_i.xy + r_j.xy)};
}

}  // namespace geosph
