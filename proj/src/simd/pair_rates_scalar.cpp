#include "geosph/simd/pair_rates.hpp"

namespace geosph::simd {

void PairBatch::resize(std::size_t n) {
  for (auto* v : {&dx, &dy, &r, &dvx, &dvy, &mass, &volume, &rho, &txx, &tyy, &txy, &axx, &ayy, &axy, &grad})
    v->resize(n);
}

RateSums& RateSums::operator+=(const RateSums& o) {
  drho += o.drho;
  ax += o.ax;
  ay += o.ay;
  de += o.de;
  exx += o.exx;
  eyy += o.eyy;
  exy += o.exy;
  wxy += o.wxy;
  return *this;
}

double artificial_viscosity(double vdotx, double r2, double rho_mean, const ViscosityParams& visc) {
  if (!(vdotx < 0.0)) return 0.0;
  const double mu = visc.h * vdotx / (r2 + visc.epsilon * visc.h * visc.h);
  return (-visc.gamma1 * visc.sound_speed * mu + visc.gamma2 * mu * mu) / rho_mean;
}

namespace scalar {

void grad(const KernelShape& shape, PairBatch& batch, std::size_t begin, std::size_t end) {
  for (std::size_t k = begin; k < end; ++k) batch.grad[k] = shape.grad_factor(batch.r[k]);
}

RateSums accumulate(const PairSelf& self, const ViscosityParams& visc, const PairBatch& b, std::size_t begin,
                    std::size_t end) {
  RateSums s;
  for (std::size_t k = begin; k < end; ++k) {
    const double gx = b.grad[k] * b.dx[k];
    const double gy = b.grad[k] * b.dy[k];
    const double dvx = b.dvx[k], dvy = b.dvy[k];
    const double r2 = b.r[k] * b.r[k];
    const double vdotx = dvx * b.dx[k] + dvy * b.dy[k];
    const double pi = artificial_viscosity(vdotx, r2, 0.5 * (self.rho + b.rho[k]), visc);
    const double m = b.mass[k];
    const double vol = b.volume[k];

    s.drho += m * (dvx * gx + dvy * gy);

    // sigma_i/rho_i^2 + sigma_j/rho_j^2 - Pi delta
    const double exx_t = self.txx + b.txx[k] - pi;
    const double eyy_t = self.tyy + b.tyy[k] - pi;
    const double exy_t = self.txy + b.txy[k];
    const double mxx = exx_t + b.axx[k];
    const double myy = eyy_t + b.ayy[k];
    const double mxy = exy_t + b.axy[k];
    s.ax += m * (mxx * gx + mxy * gy);
    s.ay += m * (mxy * gx + myy * gy);
    s.de += -0.5 * m * (dvx * (exx_t * gx + exy_t * gy) + dvy * (exy_t * gx + eyy_t * gy));

    s.exx -= vol * dvx * gx;
    s.eyy -= vol * dvy * gy;
    s.exy -= 0.5 * vol * (dvx * gy + dvy * gx);
    s.wxy -= 0.5 * vol * (dvx * gy - dvy * gx);
  }
  return s;
}

}  // namespace scalar

}  // namespace geosph::simd
