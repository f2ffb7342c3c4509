#include "composig/measure.hpp"

#include <cmath>

namespace composig {

namespace {
constexpr double kWeightTol = 1e-12;
constexpr double kMassDistance = 1e-12;
}  // namespace

SpectralMeasure::SpectralMeasure(std::vector<PointMass> masses) : masses_(std::move(masses)) {
  for (auto& m : masses_) {
    if (m.lambda < -1.0 - kWeightTol || m.lambda > 1.0 + kWeightTol)
      throw ValidationError("mass location outside [-1, 1]");
    if (m.weight < -kWeightTol) throw ValidationError("negative mass weight");
    if (m.weight < 0.0) m.weight = 0.0;
  }
}

Complex SpectralMeasure::markov_eval(Complex z) const {
  Complex sum(0.0);
  for (const auto& m : masses_) {
    const Complex d = Complex(m.lambda) - z;
    if (std::abs(d) < kMassDistance) throw EvalAtMass("Markov function evaluated at a mass");
    sum += m.weight / d;
  }
  return sum;
}

double SpectralMeasure::moment(int order) const {
  if (order != 0 && order != 1) throw ValidationError("moment order must be 0 or 1");
  double sum = 0.0;
  for (const auto& m : masses_) sum += (order == 0) ? m.weight : m.weight * m.lambda;
  return sum;
}

SpectralMeasure constrained_pair(double lambda0, double lambda1, double mass, double m1) {
  if (lambda0 == lambda1) throw DegeneratePair("constrained pair needs distinct locations");
  // w0 + w1 = mass, w0*lambda0 + w1*lambda1 = m1.
  const double w0 = (mass * lambda1 - m1) / (lambda1 - lambda0);
  const double w1 = mass - w0;
  if (w0 < -kWeightTol || w1 < -kWeightTol)
    throw Infeasible("moment constraints give a negative weight");
  return SpectralMeasure({{lambda0, std::max(w0, 0.0)}, {lambda1, std::max(w1, 0.0)}});
}

}  // namespace composig
