#pragma once

#include <variant>

#include "composig/classification.hpp"
#include "composig/quadrature.hpp"

namespace composig {

/// r(z) = -i (1 + k z) / (2 pi): volume fraction (k = 0) and first-moment
/// (k = 1) family.
struct VolumeFractionRecipe {
  double k = 0.0;
};

/// r(z) = i/(4 pi) [1/(z - z0) + 1/(z - conj z0)]: reproduces the response at
/// the probe frequency with z0 = z(omega0).
struct FrequencyProbeRecipe {
  Complex z0;
};

using Recipe = std::variant<VolumeFractionRecipe, FrequencyProbeRecipe>;

/// A designed input signal: an r(z) recipe pulled back to alpha(s), beta(s)
/// along the trajectory, from which the physical input Re u(t) is synthesized.
///
/// The sign flips the recipe when C u C-bar is traced clockwise, so that the
/// response at t0 keeps its meaning regardless of orientation.
class SignalDesign {
 public:
  SignalDesign(MaterialSystem system, Trajectory trajectory, Recipe recipe, int sign,
               double t0 = 0.0);

  const Recipe& recipe() const { return recipe_; }
  int sign() const { return sign_; }
  double t0() const { return t0_; }
  const MaterialSystem& system() const { return system_; }
  const Trajectory& trajectory() const { return trajectory_; }

  Complex eval_r(Complex z) const;

  /// alpha(s) = 2 r(z(omega(s))) z'(omega(s)) omega'(s).
  Complex alpha(double s) const;

  /// beta(s) = alpha(s) / c(omega(s)).
  Complex beta(double s) const;

  /// Re u(t) with u(t) the quadrature of beta(s) e^{-i omega(s)(t - t0)}.
  std::vector<double> synthesize_input(std::span<const double> times,
                                       const QuadratureOptions& quad = {}) const;

 private:
  MaterialSystem system_;
  Trajectory trajectory_;
  Recipe recipe_;
  int sign_;
  double t0_;
};

/// Factory taking the sign from the classification orientation.
SignalDesign make_volume_fraction_design(const MaterialSystem& system,
                                         const Trajectory& trajectory, double k,
                                         const CurveClassification& cls, double t0 = 0.0);

/// Additionally requires z0 outside C u C-bar (winding zero).
SignalDesign make_frequency_probe_design(const MaterialSystem& system,
                                         const Trajectory& trajectory, Complex z0,
                                         const CurveClassification& cls, double t0 = 0.0);

}  // namespace composig
