#pragma once

#include <cstdint>
#include <span>
#include <string>

#include "geosph/constitutive.hpp"

namespace geosph {

/// Tracks how a particle's initial lattice cell deforms under the local
/// strain rate. The cell diagonals estimate the distance to the farthest
/// immediate neighbour.
struct DeformedCell {
  double dx = 0.0;     // current x-edge length (m)
  double dy = 0.0;     // current y-edge length (m)
  double sh_xy = 0.0;  // accumulated shear displacement of the x-edge (m)
  double sh_yx = 0.0;  // accumulated shear displacement of the y-edge (m)

  static DeformedCell square(double spacing) { return {spacing, spacing, 0.0, 0.0}; }
};

/// Advances the cell by one step. Shear increments use the edge lengths from
/// before the update. Throws NumericalAbort if an edge collapses.
DeformedCell update_cell(const DeformedCell& cell, const StrainRate& strain_rate, double dt);

/// max of the two rhombus diagonals S1, S2.
double farthest_immediate_distance(const DeformedCell& cell);

enum class PressureZone : std::uint8_t { all_compression, tension_present };

/// tension_present iff some immediate neighbour has p < 0 (compression
/// positive). The particle's own pressure is not consulted.
PressureZone classify_pressure_zone(std::span<const double> neighbour_pressures);

struct AdaptiveKnotSettings {
  double compression_knot = 0.2;
  double neighbour_margin = 0.05;  // immediate set: r_ij <= r_i (1 + margin)
};

double adapt_knot(PressureZone zone, double r_i, double b, double h,
                  const AdaptiveKnotSettings& settings = {});

enum class StabilizerKind : std::uint8_t { conventional, adaptive_kernel, artificial_stress };

struct StabilizerMode {
  StabilizerKind kind = StabilizerKind::adaptive_kernel;
  double eps_as = 0.5;        // artificial stress coefficient
  double exponent_n = 2.55;   // artificial stress exponent
  double conventional_knot = 1.0;
  AdaptiveKnotSettings adaptive;
};

std::string to_string(StabilizerKind kind);
/// Accepts "conventional", "adaptive", "adaptive_kernel", "artificial-stress",
/// "artificial_stress". Throws std::invalid_argument otherwise.
StabilizerKind parse_stabilizer_kind(const std::string& name);

/// In-plane artificial stress tensor R of one particle (units of sigma/rho^2).
struct ArtificialStress {
  double xx = 0.0;
  double yy = 0.0;
  double xy = 0.0;
};

/// R = -eps * sigma'/rho^2 on tensile principal components, rotated back to
/// the x-y frame. Compressive principal components contribute nothing.
ArtificialStress artificial_stress(const Stress& sigma, double rho, double eps_as);

/// Pairwise term S_ij = f^n (R_i + R_j), with f = W(r_ij) / W(initial spacing).
ArtificialStress artificial_stress_term(const ArtificialStress& r_i, const ArtificialStress& r_j, double f,
                                        double exponent_n);

}  // namespace geosph
