#pragma once

#include <cstdint>
#include <vector>

#include "geosph/vec2.hpp"

namespace geosph {

/// Straight piece of rigid wall. The wall surface is the segment itself; the
/// material lies on the left of the direction start -> end and ghost layers
/// are laid on the right.
struct WallLine {
  Vec2 start;
  Vec2 end;

  Vec2 tangent() const;
  /// Unit normal pointing into the material (left-hand side).
  Vec2 inward_normal() const;
  /// Signed perpendicular distance, positive on the material side.
  double signed_distance(Vec2 p) const;
};

/// Open polyline of wall surface with the ghost-layer layout.
struct BoundarySegment {
  std::vector<Vec2> vertices;
  int layer_count = 3;
  double spacing = 0.0;
  /// Samples along each edge are placed where the tangential coordinate
  /// relative to this point is a multiple of the spacing.
  Vec2 lattice_origin{};
};

struct GhostParticle {
  Vec2 position;
  std::uint32_t wall = 0;        // index into the generated wall lines
  double wall_distance = 0.0;    // perpendicular distance to that wall (m)
};

struct GhostLayers {
  std::vector<WallLine> walls;
  std::vector<GhostParticle> particles;
};

/// Lays `layer_count` rows at offsets (k + 1/2) * spacing outside every
/// edge, fills convex corners with a layer_count x layer_count block and
/// removes coincident points. Throws std::invalid_argument for fewer than two
/// vertices, zero-length edges or a non-positive spacing.
GhostLayers generate_layers(const BoundarySegment& segment);

/// Appends the layers of several segments, de-duplicating across them.
GhostLayers merge_layers(const std::vector<GhostLayers>& parts, double spacing);

struct FictitiousVelocity {
  double chi = 1.0;
  Vec2 relative;  // v_i - v_j = chi v_i
  Vec2 ghost;     // v_j = -zeta v_i
};

/// No-slip ghost velocity. dist_real <= 0 (particle on or behind the wall)
/// takes the limiting chi = chi_max.
FictitiousVelocity fictitious_velocity(Vec2 v_real, double dist_real, double dist_ghost, double chi_max);

}  // namespace geosph
