#pragma once

#include "composig/polynomial.hpp"

namespace composig {

/// Parametric complex-frequency path omega(s), s in [0,1], given by polynomial
/// coefficients in s.
///
/// Endpoints must lie on the closed positive imaginary or positive real axis,
/// and the whole path must stay in the closed quadrant Re >= 0, Im >= 0; both
/// are checked at construction over the sample hint.
class Trajectory {
 public:
  explicit Trajectory(ComplexPolynomial omega_coeffs, int sample_hint = 2048);

  Complex omega(double s) const { return omega_(Complex(s)); }
  Complex omega_derivative(double s) const { return domega_(Complex(s)); }

  /// zeta(s) = i * omega(s), the path D.
  Complex zeta(double s) const { return Complex(0.0, 1.0) * omega(s); }

  int sample_hint() const { return sample_hint_; }

  /// True when both endpoints are on the imaginary axis, so that D and its
  /// conjugate close into a Jordan curve and the all-time analysis applies.
  bool endpoints_imaginary() const { return endpoints_imaginary_; }

  const ComplexPolynomial& coefficients() const { return omega_; }

 private:
  ComplexPolynomial omega_;
  ComplexPolynomial domega_;
  int sample_hint_;
  bool endpoints_imaginary_;
};

}  // namespace composig
