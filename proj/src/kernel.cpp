#include "geosph/kernel.hpp"

#include <numbers>
#include <stdexcept>
#include <string>

namespace geosph {

void validate(const KernelParams& p) {
  if (p.dim != 1 && p.dim != 2)
    throw std::invalid_argument("kernel: dim must be 1 or 2, got " + std::to_string(p.dim));
  if (!(p.a > 0.0) || !(p.a <= p.b))
    throw std::invalid_argument("kernel: knots must satisfy 0 < a <= b");
  if (!(p.h > 0.0)) throw std::invalid_argument("kernel: smoothing length must be positive");
}

double normalization_constant(const KernelParams& p) {
  validate(p);
  const double a = p.a, b = p.b, h = p.h;
  if (p.dim == 1) return 2.0 / (b * h);
  return 10.0 * (a + b) / (std::numbers::pi * b * (a * a + a * b + b * b) * h * h);
}

namespace {

void require_nonnegative(double q) {
  if (!(q >= 0.0)) throw std::invalid_argument("kernel: q must be non-negative");
}

}  // namespace

// Piecewise forms of the unnormalized B-spline f(q):
//   [0, a):  ((a+b) q^3 - 3ab q^2 + a^2 b^2) / (a^2 b (a+b))
//   [a, b):  (b-q)^3 / (b (b^2 - a^2))
// With a == b the second piece has zero width and is never entered.

double eval_w(const KernelParams& p, double q) {
  require_nonnegative(q);
  const double alpha = normalization_constant(p);
  const double a = p.a, b = p.b;
  if (q < a) return alpha * ((a + b) * q * q * q - 3.0 * a * b * q * q + a * a * b * b) / (a * a * b * (a + b));
  if (q < b) {
    const double t = b - q;
    return alpha * t * t * t / (b * (b * b - a * a));
  }
  return 0.0;
}

double eval_dw(const KernelParams& p, double q) {
  require_nonnegative(q);
  const double alpha = normalization_constant(p);
  const double a = p.a, b = p.b;
  if (q < a) return alpha * (3.0 * (a + b) * q * q - 6.0 * a * b * q) / (a * a * b * (a + b));
  if (q < b) {
    const double t = b - q;
    return -alpha * 3.0 * t * t / (b * (b * b - a * a));
  }
  return 0.0;
}

double eval_w2(const KernelParams& p, double q) {
  require_nonnegative(q);
  const double alpha = normalization_constant(p);
  const double a = p.a, b = p.b;
  if (q < a) return alpha * (6.0 * (a + b) * q - 6.0 * a * b) / (a * a * b * (a + b));
  if (q < b) return alpha * 6.0 * (b - q) / (b * (b * b - a * a));
  return 0.0;
}

Vec2 eval_grad_w(const KernelParams& p, Vec2 r_vec) {
  const double r = norm(r_vec);
  if (r == 0.0) return {};
  const double q = r / p.h;
  if (q >= p.b) return {};
  return (eval_dw(p, q) / (p.h * r)) * r_vec;
}

double peak_gradient_location(const KernelParams& p) {
  return p.a * p.b / (p.a + p.b) * p.h;
}

double knot_for_peak(double r, double b, double h) {
  if (!(r > 0.0)) throw std::invalid_argument("knot_for_peak: r must be positive");
  if (r >= 0.5 * b * h) return b;
  return b * r / (b * h - r);
}

KernelShape KernelShape::from(const KernelParams& p) {
  KernelShape s;
  s.a = p.a;
  s.b = p.b;
  s.h = p.h;
  s.inv_h = 1.0 / p.h;
  s.scale = normalization_constant(p) / (p.h * p.h);
  const double a = p.a, b = p.b;
  s.inner_c1 = 3.0 / (a * a * b);
  s.inner_c2 = 6.0 / (a * (a + b));
  s.outer_c = a < b ? 3.0 / (b * (b * b - a * a)) : 0.0;
  return s;
}

}  // namespace geosph
