#pragma once

// Inner loops of the rate evaluation: per-pair kernel gradients and the
// neighbour sums of the discrete conservation laws. A scalar reference and
// an AVX2 variant share this interface; the variant is chosen at runtime.

#include <cstddef>
#include <string>
#include <vector>

#include "geosph/kernel.hpp"

namespace geosph::simd {

/// Per-pair inputs for one particle i, gathered contiguously.
struct PairBatch {
  std::vector<double> dx, dy, r;   // x_i - x_j
  std::vector<double> dvx, dvy;    // v_i - v_j (fictitious for ghosts)
  std::vector<double> mass;        // m_j
  std::vector<double> volume;      // m_j / rho_j
  std::vector<double> rho;         // rho_j
  std::vector<double> txx, tyy, txy;  // sigma_j / rho_j^2
  std::vector<double> axx, ayy, axy;  // artificial stress S_ij (zero if unused)
  std::vector<double> grad;        // grad W_ij = grad[k] * (dx, dy)

  std::size_t size() const { return dx.size(); }
  void resize(std::size_t n);
};

/// Quantities of particle i entering every pair term.
struct PairSelf {
  double txx = 0.0, tyy = 0.0, txy = 0.0;  // sigma_i / rho_i^2
  double rho = 1.0;
};

struct ViscosityParams {
  double gamma1 = 0.0;
  double gamma2 = 0.0;
  double sound_speed = 0.0;  // mean of c_i and c_j (single material)
  double h = 1.0;
  double epsilon = 0.01;
};

struct RateSums {
  double drho = 0.0;
  double ax = 0.0, ay = 0.0;
  double de = 0.0;
  double exx = 0.0, eyy = 0.0, exy = 0.0;
  double wxy = 0.0;

  RateSums& operator+=(const RateSums& o);
};

/// Pi_ij; zero for receding or non-approaching pairs.
double artificial_viscosity(double vdotx, double r2, double rho_mean, const ViscosityParams& visc);

/// Fills batch.grad[begin, end) from batch.r for one kernel shape.
using GradFn = void (*)(const KernelShape& shape, PairBatch& batch, std::size_t begin, std::size_t end);
/// Sums the pair terms over [begin, end).
using AccumulateFn = RateSums (*)(const PairSelf& self, const ViscosityParams& visc, const PairBatch& batch,
                                  std::size_t begin, std::size_t end);

enum class Level { scalar, avx2 };

struct PairKernels {
  Level level = Level::scalar;
  GradFn grad = nullptr;
  AccumulateFn accumulate = nullptr;
};

/// Best level supported by both the build and the running CPU.
Level detect();
/// "auto", "scalar" or "avx2". Throws std::invalid_argument for unknown names
/// and for "avx2" when the build or CPU lacks it.
Level parse_level(const std::string& name);
std::string to_string(Level level);
const PairKernels& kernels(Level level);

namespace scalar {
void grad(const KernelShape& shape, PairBatch& batch, std::size_t begin, std::size_t end);
RateSums accumulate(const PairSelf& self, const ViscosityParams& visc, const PairBatch& batch, std::size_t begin,
                    std::size_t end);
}  // namespace scalar

#if defined(GEOSPH_HAVE_AVX2)
namespace avx2 {
void grad(const KernelShape& shape, PairBatch& batch, std::size_t begin, std::size_t end);
RateSums accumulate(const PairSelf& self, const ViscosityParams& visc, const PairBatch& batch, std::size_t begin,
                    std::size_t end);
}  // namespace avx2
#endif

}  // namespace geosph::simd
