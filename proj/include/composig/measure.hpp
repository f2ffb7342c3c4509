#pragma once

#include <vector>

#include "composig/polynomial.hpp"

namespace composig {

/// One point mass of a discrete spectral measure.
struct PointMass {
  double lambda;  ///< location in [-1, 1]
  double weight;  ///< nonnegative
};

/// Discrete nonnegative measure on [-1, 1], the scalar spectral measure of a
/// two-phase composite. Normalized measures carry unit mass.
class SpectralMeasure {
 public:
  SpectralMeasure() = default;
  explicit SpectralMeasure(std::vector<PointMass> masses);

  static SpectralMeasure point(double lambda, double weight = 1.0) {
    return SpectralMeasure({{lambda, weight}});
  }

  const std::vector<PointMass>& masses() const { return masses_; }
  bool empty() const { return masses_.empty(); }

  /// The Markov function  sum_j w_j / (lambda_j - z).
  /// Throws EvalAtMass when z is within 1e-12 of a mass location.
  Complex markov_eval(Complex z) const;

  /// Moment of order 0 (total mass) or 1 (first moment).
  double moment(int order) const;

 private:
  std::vector<PointMass> masses_;
};

/// Two-point measure w0*delta(lambda0) + w1*delta(lambda1) with the weights
/// solved from prescribed mass and first moment. Weights down to -1e-12 are
/// clamped to zero; anything more negative is infeasible.
SpectralMeasure constrained_pair(double lambda0, double lambda1, double mass, double m1);

}  // namespace composig
