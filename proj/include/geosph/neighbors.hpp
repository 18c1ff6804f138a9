#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace geosph {

/// Fixed-radius neighbour lists in CSR layout for the first n_query
/// particles. Each list is sorted by index, so real neighbours (index <
/// n_real) precede boundary ones. Self is excluded and the cutoff is strict.
struct NeighborTable {
  std::vector<std::uint32_t> offsets{0};
  std::vector<std::uint32_t> real_count;
  std::vector<std::uint32_t> index;
  std::vector<double> dx, dy, r;  // x_i - x_j and its length at build time

  std::size_t query_count() const { return offsets.size() - 1; }
  std::size_t begin(std::size_t i) const { return offsets[i]; }
  std::size_t end(std::size_t i) const { return offsets[i + 1]; }
  std::size_t count(std::size_t i) const { return end(i) - begin(i); }
  std::span<const std::uint32_t> neighbors(std::size_t i) const {
    return {index.data() + begin(i), count(i)};
  }
};

/// Cell-list search with cell edge = radius. Lists are built for indices
/// [0, n_query); candidates are all particles. n_real splits each list.
NeighborTable build_neighbors(std::span<const double> x, std::span<const double> y, std::size_t n_query,
                              std::size_t n_real, double radius);

/// O(N^2) reference used by the tests and by sparse fallbacks.
NeighborTable build_neighbors_brute_force(std::span<const double> x, std::span<const double> y,
                                          std::size_t n_query, std::size_t n_real, double radius);

}  // namespace geosph
