#include "geosph/neighbors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace geosph {

namespace {

void append_sorted(NeighborTable& table, std::vector<std::uint32_t>& scratch, std::size_t i,
                   std::span<const double> x, std::span<const double> y, std::size_t n_real) {
  std::sort(scratch.begin(), scratch.end());
  std::uint32_t reals = 0;
  for (std::uint32_t j : scratch) {
    const double dx = x[i] - x[j];
    const double dy = y[i] - y[j];
    table.index.push_back(j);
    table.dx.push_back(dx);
    table.dy.push_back(dy);
    table.r.push_back(std::sqrt(dx * dx + dy * dy));
    if (j < n_real) ++reals;
  }
  table.real_count.push_back(reals);
  table.offsets.push_back(static_cast<std::uint32_t>(table.index.size()));
}

void check_inputs(std::span<const double> x, std::span<const double> y, std::size_t n_query, double radius) {
  if (!(radius > 0.0)) throw std::invalid_argument("neighbour radius must be positive");
  if (x.size() != y.size()) throw std::invalid_argument("position arrays differ in length");
  if (n_query > x.size()) throw std::invalid_argument("query count exceeds particle count");
}

}  // namespace

NeighborTable build_neighbors(std::span<const double> x, std::span<const double> y, std::size_t n_query,
                              std::size_t n_real, double radius) {
  check_inputs(x, y, n_query, radius);
  NeighborTable table;
  const std::size_t n = x.size();
  if (n == 0 || n_query == 0) return table;

  double xmin = std::numeric_limits<double>::max(), ymin = xmin;
  double xmax = std::numeric_limits<double>::lowest(), ymax = xmax;
  for (std::size_t k = 0; k < n; ++k) {
    xmin = std::min(xmin, x[k]);
    xmax = std::max(xmax, x[k]);
    ymin = std::min(ymin, y[k]);
    ymax = std::max(ymax, y[k]);
  }
  const double inv = 1.0 / radius;
  const auto nx = static_cast<std::int64_t>(std::floor((xmax - xmin) * inv)) + 1;
  const auto ny = static_cast<std::int64_t>(std::floor((ymax - ymin) * inv)) + 1;
  auto cell_of = [&](std::size_t k) {
    const auto cx = std::min<std::int64_t>(nx - 1, static_cast<std::int64_t>((x[k] - xmin) * inv));
    const auto cy = std::min<std::int64_t>(ny - 1, static_cast<std::int64_t>((y[k] - ymin) * inv));
    return std::pair{cx, cy};
  };

  // Particles sorted by linear cell key; a cell's members form one run.
  std::vector<std::pair<std::int64_t, std::uint32_t>> keyed(n);
  for (std::size_t k = 0; k < n; ++k) {
    const auto [cx, cy] = cell_of(k);
    keyed[k] = {cy * nx + cx, static_cast<std::uint32_t>(k)};
  }
  std::sort(keyed.begin(), keyed.end());
  auto cell_range = [&](std::int64_t key) {
    auto lo = std::lower_bound(keyed.begin(), keyed.end(), std::pair{key, std::uint32_t{0}});
    auto hi = lo;
    while (hi != keyed.end() && hi->first == key) ++hi;
    return std::pair{lo, hi};
  };

  const double r2 = radius * radius;
  std::vector<std::uint32_t> scratch;
  table.real_count.reserve(n_query);
  table.offsets.reserve(n_query + 1);
  for (std::size_t i = 0; i < n_query; ++i) {
    scratch.clear();
    const auto [cx, cy] = cell_of(i);
    for (std::int64_t gy = std::max<std::int64_t>(0, cy - 1); gy <= std::min(ny - 1, cy + 1); ++gy) {
      for (std::int64_t gx = std::max<std::int64_t>(0, cx - 1); gx <= std::min(nx - 1, cx + 1); ++gx) {
        const auto [lo, hi] = cell_range(gy * nx + gx);
        for (auto it = lo; it != hi; ++it) {
          const std::uint32_t j = it->second;
          if (j == i) continue;
          const double dx = x[i] - x[j];
          const double dy = y[i] - y[j];
          if (dx * dx + dy * dy < r2) scratch.push_back(j);
        }
      }
    }
    append_sorted(table, scratch, i, x, y, n_real);
  }
  return table;
}

NeighborTable build_neighbors_brute_force(std::span<const double> x, std::span<const double> y,
                                          std::size_t n_query, std::size_t n_real, double radius) {
  check_inputs(x, y, n_query, radius);
  NeighborTable table;
  const double r2 = radius * radius;
  std::vector<std::uint32_t> scratch;
  for (std::size_t i = 0; i < n_query; ++i) {
    scratch.clear();
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (j == i) continue;
      const double dx = x[i] - x[j];
      const double dy = y[i] - y[j];
      if (dx * dx + dy * dy < r2) scratch.push_back(static_cast<std::uint32_t>(j));
    }
    append_sorted(table, scratch, i, x, y, n_real);
  }
  return table;
}

}  // namespace geosph
