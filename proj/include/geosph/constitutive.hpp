#pragma once

// Drucker-Prager elastoplasticity for plane strain. Stress is tension
// positive; pressure p = -tr(sigma)/3 is compression positive.

namespace geosph {

/// Plane-strain stress tensor: in-plane components plus the out-of-plane
/// normal component. sigma_xz = sigma_yz = 0.
struct Stress {
  double xx = 0.0;
  double yy = 0.0;
  double zz = 0.0;
  double xy = 0.0;

  double pressure() const { return -(xx + yy + zz) / 3.0; }
  /// Deviatoric part tau = sigma + p I.
  Stress deviator() const {
    const double p = pressure();
    return {xx + p, yy + p, zz + p, xy};
  }
  /// J2 = tau:tau / 2 with the xy term counted twice.
  double j2() const {
    const Stress t = deviator();
    return 0.5 * (t.xx * t.xx + t.yy * t.yy + t.zz * t.zz) + t.xy * t.xy;
  }

  Stress& operator+=(const Stress& o) {
    xx += o.xx;
    yy += o.yy;
    zz += o.zz;
    xy += o.xy;
    return *this;
  }
  friend Stress operator+(Stress a, const Stress& b) { return a += b; }
  friend Stress operator*(double s, const Stress& a) { return {s * a.xx, s * a.yy, s * a.zz, s * a.xy}; }
  friend bool operator==(const Stress&, const Stress&) = default;
};

/// In-plane strain rate; the zz component is zero under plane strain.
struct StrainRate {
  double xx = 0.0;
  double yy = 0.0;
  double xy = 0.0;

  double trace() const { return xx + yy; }
};

/// Spin tensor is antisymmetric; only omega_xy = -omega_yx is stored.
struct Spin {
  double xy = 0.0;
};

struct DruckerPragerCoefficients {
  double alpha_phi = 0.0;
  double k_c = 0.0;
  double alpha_psi = 0.0;
};

/// Friction/cohesion coefficients of the yield cone and plastic potential.
/// Angles in radians; throws std::invalid_argument for phi or psi >= pi/2.
DruckerPragerCoefficients dp_coefficients(double cohesion, double phi, double psi);

struct MaterialParams {
  double rho0 = 1850.0;
  double youngs_modulus = 1.5e6;
  double poisson_ratio = 0.2;
  double cohesion = 5.0e3;
  double phi = 0.0;  // internal friction angle (rad)
  double psi = 0.0;  // dilatancy angle (rad)

  // Derived, filled by make_material().
  double shear_modulus = 0.0;
  double bulk_modulus = 0.0;
  double alpha_phi = 0.0;
  double k_c = 0.0;
  double alpha_psi = 0.0;

  /// P-wave speed sqrt((K + 4G/3) / rho0).
  double sound_speed() const;
  /// Most tensile admissible pressure, -k_c/alpha_phi; -inf when alpha_phi = 0.
  double tension_cutoff() const;
};

/// Validates the elastic and strength ranges and fills the derived fields.
MaterialParams make_material(double rho0, double youngs_modulus, double poisson_ratio, double cohesion,
                             double phi, double psi);

double yield_function(double p, double j2, const MaterialParams& mat);
inline double yield_function(const Stress& s, const MaterialParams& mat) {
  return yield_function(s.pressure(), s.j2(), mat);
}

/// Non-negative plastic multiplier rate. Zero when the state is inside the
/// cone, at the apex (J2 = 0), or when the consistency value is unloading.
double plastic_multiplier_rate(const Stress& sigma, const StrainRate& strain_rate, const MaterialParams& mat);

struct StressRateResult {
  Stress rate;
  double lambda_dot = 0.0;
};

/// Jaumann stress rate including the plastic corrector term.
StressRateResult stress_rate(const Stress& sigma, const StrainRate& strain_rate, const Spin& spin,
                             const MaterialParams& mat);

/// Shifts the hydrostatic part so that p >= -k_c/alpha_phi. Identity when
/// alpha_phi = 0 (no tension cutoff for a purely cohesive material).
Stress apex_pressure_correction(const Stress& sigma, const MaterialParams& mat);

/// Scales the deviator back onto the cone keeping p fixed.
Stress deviatoric_scaleback(const Stress& sigma, const MaterialParams& mat);

/// Pressure correction followed by deviatoric scale-back.
inline Stress return_to_cone(const Stress& sigma, const MaterialParams& mat) {
  return deviatoric_scaleback(apex_pressure_correction(sigma, mat), mat);
}

/// von Mises equivalent plastic strain increment dt*sqrt(2/3 ep:ep), with
/// ep = lambda_dot dQ/dsigma.
double effective_plastic_strain_increment(double lambda_dot, const Stress& sigma, const MaterialParams& mat,
                                          double dt);

}  // namespace geosph
