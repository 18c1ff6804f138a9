#include "geosph/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

namespace geosph {

Vec2 WallLine::tangent() const {
  const Vec2 d = end - start;
  return (1.0 / norm(d)) * d;
}

Vec2 WallLine::inward_normal() const {
  const Vec2 t = tangent();
  return {-t.y, t.x};
}

double WallLine::signed_distance(Vec2 p) const { return dot(p - start, inward_normal()); }

namespace {

struct KeyHash {
  std::size_t operator()(const std::pair<std::int64_t, std::int64_t>& k) const {
    return std::hash<std::int64_t>()(k.first * 73856093LL ^ k.second * 19349663LL);
  }
};

// Positions are keyed on a grid far finer than the spacing.
std::pair<std::int64_t, std::int64_t> position_key(Vec2 p, double spacing) {
  const double cell = spacing * 1e-6;
  return {std::llround(p.x / cell), std::llround(p.y / cell)};
}

class Deduplicator {
 public:
  explicit Deduplicator(double spacing) : spacing_(spacing) {}
  bool insert(Vec2 p) { return seen_.insert(position_key(p, spacing_)).second; }

 private:
  double spacing_;
  std::unordered_set<std::pair<std::int64_t, std::int64_t>, KeyHash> seen_;
};

}  // namespace

GhostLayers generate_layers(const BoundarySegment& seg) {
  if (seg.vertices.size() < 2) throw std::invalid_argument("boundary polyline needs at least two vertices");
  if (!(seg.spacing > 0.0)) throw std::invalid_argument("boundary spacing must be positive");
  if (seg.layer_count < 1) throw std::invalid_argument("boundary needs at least one layer");

  const double s = seg.spacing;
  GhostLayers out;
  for (std::size_t e = 0; e + 1 < seg.vertices.size(); ++e) {
    const WallLine line{seg.vertices[e], seg.vertices[e + 1]};
    if (norm(line.end - line.start) <= 1e-12 * s) throw std::invalid_argument("boundary polyline has a degenerate edge");
    out.walls.push_back(line);
  }

  Deduplicator dedup(s);
  auto emit = [&](Vec2 p, std::uint32_t wall) {
    if (!dedup.insert(p)) return;
    const double d = -out.walls[wall].signed_distance(p);
    out.particles.push_back({p, wall, d});
  };

  for (std::uint32_t w = 0; w < out.walls.size(); ++w) {
    const WallLine& line = out.walls[w];
    const Vec2 t = line.tangent();
    const Vec2 outward = -line.inward_normal();
    const double length = norm(line.end - line.start);
    // First sample at or after the start that lies on the tangential lattice.
    const double t0 = dot(line.start - seg.lattice_origin, t);
    double first = std::ceil(t0 / s - 1e-9) * s - t0;
    const std::size_t count = static_cast<std::size_t>(std::floor((length - first) / s + 1e-9)) + 1;
    for (int k = 0; k < seg.layer_count; ++k) {
      const Vec2 offset = ((k + 0.5) * s) * outward;
      for (std::size_t i = 0; i < count; ++i) emit(line.start + (first + i * s) * t + offset, w);
    }
  }

  // Convex corners (ghost side on the outside of the turn) leave a wedge
  // that neither edge covers.
  for (std::size_t v = 1; v + 1 < seg.vertices.size(); ++v) {
    const WallLine& in = out.walls[v - 1];
    const WallLine& next = out.walls[v];
    if (cross(in.tangent(), next.tangent()) <= 0.0) continue;
    const Vec2 n1 = -in.inward_normal();
    const Vec2 n2 = -next.inward_normal();
    for (int k = 0; k < seg.layer_count; ++k)
      for (int l = 0; l < seg.layer_count; ++l)
        emit(seg.vertices[v] + ((k + 0.5) * s) * n1 + ((l + 0.5) * s) * n2, static_cast<std::uint32_t>(v));
  }
  return out;
}

GhostLayers merge_layers(const std::vector<GhostLayers>& parts, double spacing) {
  GhostLayers out;
  Deduplicator dedup(spacing);
  for (const auto& part : parts) {
    const auto base = static_cast<std::uint32_t>(out.walls.size());
    out.walls.insert(out.walls.end(), part.walls.begin(), part.walls.end());
    for (const auto& g : part.particles)
      if (dedup.insert(g.position)) out.particles.push_back({g.position, g.wall + base, g.wall_distance});
  }
  return out;
}

FictitiousVelocity fictitious_velocity(Vec2 v_real, double dist_real, double dist_ghost, double chi_max) {
  FictitiousVelocity out;
  if (dist_real <= 0.0) {
    out.chi = chi_max;
    out.relative = chi_max * v_real;
    out.ghost = (1.0 - chi_max) * v_real;
    return out;
  }
  const double zeta = dist_ghost / dist_real;
  out.chi = std::min(chi_max, 1.0 + zeta);
  out.relative = out.chi * v_real;
  out.ghost = -zeta * v_real;
  return out;
}

}  // namespace geosph
