#pragma once

#include "geosph/vec2.hpp"

namespace geosph {

/// Shape of the symmetric cubic B-spline kernel built over the knot vector
/// {-b, -a, 0, a, b}. Knots live in the normalized distance q = r / h.
struct KernelParams {
  double a = 1.0;  // intermediate knot
  double b = 2.0;  // support cutoff, support radius is b*h
  double h = 1.0;  // smoothing length (m)
  int dim = 2;

  double support_radius() const { return b * h; }
};

/// Throws std::invalid_argument unless 0 < a <= b, h > 0 and dim is 1 or 2.
void validate(const KernelParams& params);

/// alpha_c such that the kernel integrates to one over its support.
double normalization_constant(const KernelParams& params);

/// W(q). q must be non-negative.
double eval_w(const KernelParams& params, double q);

/// dW/dq (includes alpha_c, excludes the 1/h chain factor).
double eval_dw(const KernelParams& params, double q);

/// d2W/dq2, only used for stability diagnostics.
double eval_w2(const KernelParams& params, double q);

/// Gradient of W(x_i - x_j) with respect to x_i; r_vec = x_i - x_j.
Vec2 eval_grad_w(const KernelParams& params, Vec2 r_vec);

/// Distance (m) from the kernel centre where |W'| peaks: ab/(a+b) h.
double peak_gradient_location(const KernelParams& params);

/// Knot that moves the |W'| peak to distance r (m). Saturates at a = b once
/// r reaches b h / 2.
double knot_for_peak(double r, double b, double h);

/// Precomputed piecewise coefficients for fast evaluation in the pair loops.
/// grad W = grad_factor(r) * r_vec, with grad_factor = alpha_c f'(q) / (h^2 q).
struct KernelShape {
  double a = 1.0;
  double b = 2.0;
  double h = 1.0;
  double inv_h = 1.0;
  double scale = 1.0;   // alpha_c / h^2
  double inner_c1 = 0;  // f'(q)/q = inner_c1 * q - inner_c2 on [0, a)
  double inner_c2 = 0;
  double outer_c = 0;   // f'(q) = -outer_c (b - q)^2 on [a, b)

  static KernelShape from(const KernelParams& params);

  double grad_factor(double r) const {
    const double q = r * inv_h;
    if (q < a) return scale * (inner_c1 * q - inner_c2);
    if (q < b) {
      const double t = b - q;
      return -scale * outer_c * t * t / q;
    }
    return 0.0;
  }
};

}  // namespace geosph
