#include "composig/design.hpp"

#include <cmath>

namespace composig {

SignalDesign::SignalDesign(MaterialSystem system, Trajectory trajectory, Recipe recipe, int sign,
                           double t0)
    : system_(std::move(system)),
      trajectory_(std::move(trajectory)),
      recipe_(std::move(recipe)),
      sign_(sign),
      t0_(t0) {
  if (sign_ != 1 && sign_ != -1) throw ValidationError("design sign must be +1 or -1");
}

Complex SignalDesign::eval_r(Complex z) const {
  const double s = static_cast<double>(sign_);
  if (const auto* vf = std::get_if<VolumeFractionRecipe>(&recipe_)) {
    return s * Complex(0.0, -1.0) * (1.0 + vf->k * z) / (2.0 * M_PI);
  }
  const auto& probe = std::get<FrequencyProbeRecipe>(recipe_);
  const Complex d1 = z - probe.z0;
  const Complex d2 = z - std::conj(probe.z0);
  if (std::abs(d1) < 1e-12 || std::abs(d2) < 1e-12)
    throw ProbePole("r(z) evaluated at the probe pole z0 or conj(z0)");
  return s * Complex(0.0, 1.0) / (4.0 * M_PI) * (1.0 / d1 + 1.0 / d2);
}

Complex SignalDesign::alpha(double s) const {
  const Complex w = trajectory_.omega(s);
  return 2.0 * eval_r(system_.eval_z(w)) * system_.eval_z_derivative(w) *
         trajectory_.omega_derivative(s);
}

Complex SignalDesign::beta(double s) const {
  const Complex c = system_.coupling(trajectory_.omega(s));
  if (std::abs(c) < 1e-12) throw CouplingZero("coupling factor c(omega(s)) vanished");
  return alpha(s) / c;
}

std::vector<double> SignalDesign::synthesize_input(std::span<const double> times,
                                                   const QuadratureOptions& quad) const {
  std::vector<double> out(times.size());
  for (size_t i = 0; i < times.size(); ++i) {
    const double t = times[i];
    out[i] = integrate_adaptive(
                 [&](double s) {
                   return beta(s) * std::exp(Complex(0.0, -1.0) * trajectory_.omega(s) * (t - t0_));
                 },
                 0.0, 1.0, quad)
                 .real();
  }
  return out;
}

SignalDesign make_volume_fraction_design(const MaterialSystem& system,
                                         const Trajectory& trajectory, double k,
                                         const CurveClassification& cls, double t0) {
  return SignalDesign(system, trajectory, VolumeFractionRecipe{k}, cls.curve_sign(), t0);
}

SignalDesign make_frequency_probe_design(const MaterialSystem& system,
                                         const Trajectory& trajectory, Complex z0,
                                         const CurveClassification& cls, double t0) {
  if (winding_number(cls.samples.closed_c(), z0) != 0)
    throw ProbeInsideCurve("probe value z0 lies inside C u C-bar");
  return SignalDesign(system, trajectory, FrequencyProbeRecipe{z0}, cls.curve_sign(), t0);
}

}  // namespace composig
