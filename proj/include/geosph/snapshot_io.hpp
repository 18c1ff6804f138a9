#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "geosph/particles.hpp"

namespace geosph {

/// Global quantities attached to a frame.
struct FrameDiagnostics {
  double max_spread = 0.0;
  Vec2 momentum;
  double kinetic_energy = 0.0;
  double strain_energy = 0.0;
  double potential_energy = 0.0;
  double internal_energy = 0.0;
  double momentum_residual = 0.0;  // relative, last step
  double nn_min = 0.0;
  double nn_max = 0.0;
  double nn_mean = 0.0;
  double fracture_fraction = 0.0;
};

/// Immutable export copy of the particle fields at one instant.
struct SnapshotFrame {
  double time = 0.0;
  std::uint64_t step = 0;
  std::vector<std::uint8_t> kind;
  std::vector<double> x, y, vx, vy, rho, sxx, syy, szz, sxy, p, sqrt_j2, eps_p, knot;
  FrameDiagnostics diagnostics;

  std::size_t size() const { return x.size(); }
};

SnapshotFrame make_frame(const ParticleSystem& state, double time, std::uint64_t step,
                         const FrameDiagnostics& diagnostics = {});

enum class SnapshotFormat { csv, vtk_legacy };

/// Column names of the CSV layout, in order.
const std::vector<std::string>& csv_columns();

/// Writes the frame; throws IoError if the file cannot be written.
void write_snapshot(const SnapshotFrame& frame, const std::string& path, SnapshotFormat format);
std::string format_csv(const SnapshotFrame& frame);
std::string format_vtk(const SnapshotFrame& frame);

/// Parses a CSV written by write_snapshot (per-particle fields only).
SnapshotFrame read_csv(const std::string& path);

}  // namespace geosph
