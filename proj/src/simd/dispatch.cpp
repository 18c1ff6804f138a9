#include <stdexcept>

#include "geosph/simd/pair_rates.hpp"

namespace geosph::simd {

namespace {

bool cpu_has_avx2() {
#if defined(GEOSPH_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

}  // namespace

Level detect() { return cpu_has_avx2() ? Level::avx2 : Level::scalar; }

Level parse_level(const std::string& name) {
  if (name == "auto") return detect();
  if (name == "scalar") return Level::scalar;
  if (name == "avx2") {
    if (!cpu_has_avx2()) throw std::invalid_argument("avx2 kernels unavailable on this build or CPU");
    return Level::avx2;
  }
  throw std::invalid_argument("unknown simd level '" + name + "' (expected auto, scalar or avx2)");
}

std::string to_string(Level level) { return level == Level::avx2 ? "avx2" : "scalar"; }

const PairKernels& kernels(Level level) {
  static const PairKernels scalar_set{Level::scalar, &scalar::grad, &scalar::accumulate};
#if defined(GEOSPH_HAVE_AVX2)
  static const PairKernels avx2_set{Level::avx2, &avx2::grad, &avx2::accumulate};
  if (level == Level::avx2 && cpu_has_avx2()) return avx2_set;
#endif
  (void)level;
  return scalar_set;
}

}  // namespace geosph::simd
