#include "composig/trajectory.hpp"

#include <cmath>

namespace composig {

namespace {

constexpr double kAxisTol = 1e-9;

bool on_positive_axes(Complex w) {
  const double scale = 1.0 + std::abs(w);
  const bool on_imag = std::abs(w.real()) <= kAxisTol * scale && w.imag() >= -kAxisTol * scale;
  const bool on_real = std::abs(w.imag()) <= kAxisTol * scale && w.real() >= -kAxisTol * scale;
  return on_imag || on_real;
}

}  // namespace

Trajectory::Trajectory(ComplexPolynomial omega_coeffs, int sample_hint)
    : omega_(std::move(omega_coeffs)), domega_(omega_.derivative()), sample_hint_(sample_hint) {
  if (sample_hint_ < 2) throw InvalidTrajectory("sample hint must be at least 2");

  const Complex w0 = omega(0.0);
  const Complex w1 = omega(1.0);
  if (!on_positive_axes(w0) || !on_positive_axes(w1))
    throw InvalidTrajectory("trajectory endpoints must lie on the positive imaginary or real axis");

  for (int i = 0; i <= sample_hint_; ++i) {
    const Complex w = omega(static_cast<double>(i) / sample_hint_);
    const double scale = 1.0 + std::abs(w);
    if (w.real() < -kAxisTol * scale || w.imag() < -kAxisTol * scale)
      throw InvalidTrajectory("trajectory leaves the closed quadrant Re >= 0, Im >= 0");
  }

  const double s0 = 1.0 + std::abs(w0);
  const double s1 = 1.0 + std::abs(w1);
  endpoints_imaginary_ =
      std::abs(w0.real()) <= kAxisTol * s0 && std::abs(w1.real()) <= kAxisTol * s1;
}

}  // namespace composig
