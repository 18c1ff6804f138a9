// Compiled with -mavx2; only reached through kernels(Level::avx2) after a
// CPU check.
#include <immintrin.h>

#include "geosph/simd/pair_rates.hpp"

namespace geosph::simd::avx2 {

namespace {

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d pair = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(pair, _mm_unpackhi_pd(pair, pair)));
}

}  // namespace

void grad(const KernelShape& shape, PairBatch& batch, std::size_t begin, std::size_t end) {
  const __m256d inv_h = _mm256_set1_pd(shape.inv_h);
  const __m256d a = _mm256_set1_pd(shape.a);
  const __m256d b = _mm256_set1_pd(shape.b);
  const __m256d scale = _mm256_set1_pd(shape.scale);
  const __m256d c1 = _mm256_set1_pd(shape.inner_c1);
  const __m256d c2 = _mm256_set1_pd(shape.inner_c2);
  const __m256d neg_outer = _mm256_set1_pd(-shape.scale * shape.outer_c);
  const __m256d zero = _mm256_setzero_pd();

  std::size_t k = begin;
  for (; k + 4 <= end; k += 4) {
    const __m256d q = _mm256_mul_pd(_mm256_loadu_pd(&batch.r[k]), inv_h);
    const __m256d inner = _mm256_mul_pd(scale, _mm256_sub_pd(_mm256_mul_pd(c1, q), c2));
    const __m256d t = _mm256_sub_pd(b, q);
    // Lanes with q = 0 divide by zero here; they always take the inner branch.
    const __m256d outer = _mm256_div_pd(_mm256_mul_pd(_mm256_mul_pd(neg_outer, t), t), q);
    const __m256d in_a = _mm256_cmp_pd(q, a, _CMP_LT_OQ);
    const __m256d in_b = _mm256_cmp_pd(q, b, _CMP_LT_OQ);
    __m256d g = _mm256_blendv_pd(zero, outer, in_b);
    g = _mm256_blendv_pd(g, inner, in_a);
    _mm256_storeu_pd(&batch.grad[k], g);
  }
  scalar::grad(shape, batch, k, end);
}

RateSums accumulate(const PairSelf& self, const ViscosityParams& visc, const PairBatch& bt, std::size_t begin,
                    std::size_t end) {
  const __m256d zero = _mm256_setzero_pd();
  const __m256d half = _mm256_set1_pd(0.5);
  const __m256d neg_half = _mm256_set1_pd(-0.5);
  const __m256d self_txx = _mm256_set1_pd(self.txx);
  const __m256d self_tyy = _mm256_set1_pd(self.tyy);
  const __m256d self_txy = _mm256_set1_pd(self.txy);
  const __m256d self_rho = _mm256_set1_pd(self.rho);
  const __m256d h = _mm256_set1_pd(visc.h);
  const __m256d eps_h2 = _mm256_set1_pd(visc.epsilon * visc.h * visc.h);
  const __m256d g1c = _mm256_set1_pd(-visc.gamma1 * visc.sound_speed);
  const __m256d g2 = _mm256_set1_pd(visc.gamma2);

  __m256d drho = zero, ax = zero, ay = zero, de = zero, exx = zero, eyy = zero, exy = zero, wxy = zero;

  std::size_t k = begin;
  for (; k + 4 <= end; k += 4) {
    const __m256d dx = _mm256_loadu_pd(&bt.dx[k]);
    const __m256d dy = _mm256_loadu_pd(&bt.dy[k]);
    const __m256d r = _mm256_loadu_pd(&bt.r[k]);
    const __m256d gr = _mm256_loadu_pd(&bt.grad[k]);
    const __m256d dvx = _mm256_loadu_pd(&bt.dvx[k]);
    const __m256d dvy = _mm256_loadu_pd(&bt.dvy[k]);
    const __m256d m = _mm256_loadu_pd(&bt.mass[k]);
    const __m256d vol = _mm256_loadu_pd(&bt.volume[k]);
    const __m256d rho_j = _mm256_loadu_pd(&bt.rho[k]);

    const __m256d gx = _mm256_mul_pd(gr, dx);
    const __m256d gy = _mm256_mul_pd(gr, dy);

    // Artificial viscosity, active only where v_ij . x_ij < 0.
    const __m256d vdotx = _mm256_add_pd(_mm256_mul_pd(dvx, dx), _mm256_mul_pd(dvy, dy));
    const __m256d r2 = _mm256_mul_pd(r, r);
    const __m256d mu = _mm256_div_pd(_mm256_mul_pd(h, vdotx), _mm256_add_pd(r2, eps_h2));
    const __m256d rho_mean = _mm256_mul_pd(half, _mm256_add_pd(self_rho, rho_j));
    const __m256d pi_raw =
        _mm256_div_pd(_mm256_add_pd(_mm256_mul_pd(g1c, mu), _mm256_mul_pd(_mm256_mul_pd(g2, mu), mu)), rho_mean);
    const __m256d pi = _mm256_blendv_pd(zero, pi_raw, _mm256_cmp_pd(vdotx, zero, _CMP_LT_OQ));

    drho = _mm256_add_pd(drho, _mm256_mul_pd(m, _mm256_add_pd(_mm256_mul_pd(dvx, gx), _mm256_mul_pd(dvy, gy))));

    const __m256d exx_t = _mm256_sub_pd(_mm256_add_pd(self_txx, _mm256_loadu_pd(&bt.txx[k])), pi);
    const __m256d eyy_t = _mm256_sub_pd(_mm256_add_pd(self_tyy, _mm256_loadu_pd(&bt.tyy[k])), pi);
    const __m256d exy_t = _mm256_add_pd(self_txy, _mm256_loadu_pd(&bt.txy[k]));
    const __m256d mxx = _mm256_add_pd(exx_t, _mm256_loadu_pd(&bt.axx[k]));
    const __m256d myy = _mm256_add_pd(eyy_t, _mm256_loadu_pd(&bt.ayy[k]));
    const __m256d mxy = _mm256_add_pd(exy_t, _mm256_loadu_pd(&bt.axy[k]));

    ax = _mm256_add_pd(ax, _mm256_mul_pd(m, _mm256_add_pd(_mm256_mul_pd(mxx, gx), _mm256_mul_pd(mxy, gy))));
    ay = _mm256_add_pd(ay, _mm256_mul_pd(m, _mm256_add_pd(_mm256_mul_pd(mxy, gx), _mm256_mul_pd(myy, gy))));

    const __m256d work_x = _mm256_mul_pd(dvx, _mm256_add_pd(_mm256_mul_pd(exx_t, gx), _mm256_mul_pd(exy_t, gy)));
    const __m256d work_y = _mm256_mul_pd(dvy, _mm256_add_pd(_mm256_mul_pd(exy_t, gx), _mm256_mul_pd(eyy_t, gy)));
    de = _mm256_add_pd(de, _mm256_mul_pd(_mm256_mul_pd(neg_half, m), _mm256_add_pd(work_x, work_y)));

    exx = _mm256_sub_pd(exx, _mm256_mul_pd(_mm256_mul_pd(vol, dvx), gx));
    eyy = _mm256_sub_pd(eyy, _mm256_mul_pd(_mm256_mul_pd(vol, dvy), gy));
    const __m256d half_vol = _mm256_mul_pd(half, vol);
    const __m256d cross_a = _mm256_mul_pd(dvx, gy);
    const __m256d cross_b = _mm256_mul_pd(dvy, gx);
    exy = _mm256_sub_pd(exy, _mm256_mul_pd(half_vol, _mm256_add_pd(cross_a, cross_b)));
    wxy = _mm256_sub_pd(wxy, _mm256_mul_pd(half_vol, _mm256_sub_pd(cross_a, cross_b)));
  }

  RateSums s;
  s.drho = hsum(drho);
  s.ax = hsum(ax);
  s.ay = hsum(ay);
  s.de = hsum(de);
  s.exx = hsum(exx);
  s.eyy = hsum(eyy);
  s.exy = hsum(exy);
  s.wxy = hsum(wxy);
  s += scalar::accumulate(self, visc, bt, k, end);
  return s;
}

}  // namespace geosph::simd::avx2
