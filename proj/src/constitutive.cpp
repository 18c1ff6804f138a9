#include "geosph/constitutive.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace geosph {

namespace {

double cone_slope(double angle) {
  const double t = std::tan(angle);
  return 3.0 * t / std::sqrt(9.0 + 12.0 * t * t);
}

// States within this band of the surface count as on it; scale-back leaves
// F at rounding level, never exactly zero.
double surface_tolerance(const MaterialParams& mat) { return 1e-9 * std::max(mat.k_c, 1.0); }

}  // namespace

DruckerPragerCoefficients dp_coefficients(double cohesion, double phi, double psi) {
  const double half_pi = 0.5 * std::numbers::pi;
  if (!(phi >= 0.0 && phi < half_pi)) throw std::invalid_argument("friction angle must lie in [0, pi/2)");
  if (!(psi >= 0.0 && psi < half_pi)) throw std::invalid_argument("dilatancy angle must lie in [0, pi/2)");
  const double t = std::tan(phi);
  DruckerPragerCoefficients c;
  c.alpha_phi = cone_slope(phi);
  c.k_c = 3.0 * cohesion / std::sqrt(9.0 + 12.0 * t * t);
  c.alpha_psi = cone_slope(psi);
  return c;
}

double MaterialParams::sound_speed() const {
  return std::sqrt((bulk_modulus + 4.0 * shear_modulus / 3.0) / rho0);
}

double MaterialParams::tension_cutoff() const {
  if (alpha_phi == 0.0) return -std::numeric_limits<double>::infinity();
  return -k_c / alpha_phi;
}

MaterialParams make_material(double rho0, double youngs_modulus, double poisson_ratio, double cohesion,
                             double phi, double psi) {
  if (!(rho0 > 0.0)) throw std::invalid_argument("reference density must be positive");
  if (!(youngs_modulus > 0.0)) throw std::invalid_argument("Young's modulus must be positive");
  if (!(poisson_ratio >= 0.0 && poisson_ratio < 0.5))
    throw std::invalid_argument("Poisson's ratio must lie in [0, 0.5)");
  if (!(cohesion >= 0.0)) throw std::invalid_argument("cohesion must be non-negative");

  MaterialParams m;
  m.rho0 = rho0;
  m.youngs_modulus = youngs_modulus;
  m.poisson_ratio = poisson_ratio;
  m.cohesion = cohesion;
  m.phi = phi;
  m.psi = psi;
  m.shear_modulus = youngs_modulus / (2.0 * (1.0 + poisson_ratio));
  m.bulk_modulus = youngs_modulus / (3.0 * (1.0 - 2.0 * poisson_ratio));
  const auto dp = dp_coefficients(cohesion, phi, psi);
  m.alpha_phi = dp.alpha_phi;
  m.k_c = dp.k_c;
  m.alpha_psi = dp.alpha_psi;
  return m;
}

double yield_function(double p, double j2, const MaterialParams& mat) {
  return std::sqrt(j2) - mat.alpha_phi * p - mat.k_c;
}

double plastic_multiplier_rate(const Stress& sigma, const StrainRate& eps, const MaterialParams& mat) {
  const double j2 = sigma.j2();
  if (yield_function(sigma.pressure(), j2, mat) < -surface_tolerance(mat)) return 0.0;
  if (j2 <= 0.0) return 0.0;  // apex: handled by the pressure correction

  const Stress tau = sigma.deviator();
  const double tau_eps = tau.xx * eps.xx + tau.yy * eps.yy + 2.0 * tau.xy * eps.xy;
  const double G = mat.shear_modulus;
  const double K = mat.bulk_modulus;
  const double numerator = G / std::sqrt(j2) * tau_eps + mat.alpha_phi * K * eps.trace();
  const double lambda_dot = numerator / (G + K * mat.alpha_phi * mat.alpha_psi);
  return lambda_dot > 0.0 ? lambda_dot : 0.0;
}

StressRateResult stress_rate(const Stress& s, const StrainRate& eps, const Spin& spin, const MaterialParams& mat) {
  const double G = mat.shear_modulus;
  const double K = mat.bulk_modulus;
  const double tr = eps.trace();
  const double w = spin.xy;

  StressRateResult out;
  // sigma^{ak} w^{bk} + sigma^{kb} w^{ak} with w_xy = w, w_yx = -w.
  out.rate.xx = 2.0 * s.xy * w;
  out.rate.yy = -2.0 * s.xy * w;
  out.rate.zz = 0.0;
  out.rate.xy = (s.yy - s.xx) * w;

  const double third = tr / 3.0;
  out.rate.xx += 2.0 * G * (eps.xx - third) + K * tr;
  out.rate.yy += 2.0 * G * (eps.yy - third) + K * tr;
  out.rate.zz += 2.0 * G * (-third) + K * tr;
  out.rate.xy += 2.0 * G * eps.xy;

  const double lambda_dot = plastic_multiplier_rate(s, eps, mat);
  if (lambda_dot > 0.0) {
    const Stress tau = s.deviator();
    const double dev = lambda_dot * G / std::sqrt(s.j2());
    const double vol = lambda_dot * K * mat.alpha_psi;
    out.rate.xx -= vol + dev * tau.xx;
    out.rate.yy -= vol + dev * tau.yy;
    out.rate.zz -= vol + dev * tau.zz;
    out.rate.xy -= dev * tau.xy;
  }
  out.lambda_dot = lambda_dot;
  return out;
}

Stress apex_pressure_correction(const Stress& sigma, const MaterialParams& mat) {
  if (mat.alpha_phi == 0.0) return sigma;
  const double cutoff = mat.k_c / mat.alpha_phi;
  const double p = sigma.pressure();
  if (p >= -cutoff) return sigma;
  // Rebuild from the deviator so that the corrected pressure is exactly the cutoff.
  const Stress tau = sigma.deviator();
  return {tau.xx + cutoff, tau.yy + cutoff, tau.zz + cutoff, tau.xy};
}

Stress deviatoric_scaleback(const Stress& sigma, const MaterialParams& mat) {
  const double p = sigma.pressure();
  const double j2 = sigma.j2();
  const double limit = mat.alpha_phi * p + mat.k_c;
  const double root = std::sqrt(j2);
  if (!(root > limit)) return sigma;
  const double xi = limit > 0.0 ? limit / root : 0.0;
  const Stress tau = sigma.deviator();
  return {-p + xi * tau.xx, -p + xi * tau.yy, -p + xi * tau.zz, xi * tau.xy};
}

double effective_plastic_strain_increment(double lambda_dot, const Stress& sigma, const MaterialParams& mat,
                                          double dt) {
  if (lambda_dot <= 0.0) return 0.0;
  const double j2 = sigma.j2();
  if (j2 <= 0.0) return 0.0;
  // dQ/dsigma = tau / (2 sqrt(J2)) + alpha_psi I / 3
  const Stress tau = sigma.deviator();
  const double d = 0.5 / std::sqrt(j2);
  const double v = mat.alpha_psi / 3.0;
  const double gxx = d * tau.xx + v;
  const double gyy = d * tau.yy + v;
  const double gzz = d * tau.zz + v;
  const double gxy = d * tau.xy;
  const double contraction = gxx * gxx + gyy * gyy + gzz * gzz + 2.0 * gxy * gxy;
  return dt * lambda_dot * std::sqrt(2.0 / 3.0 * contraction);
}

}  // namespace geosph
