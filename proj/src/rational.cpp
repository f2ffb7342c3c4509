#include "composig/rational.hpp"

namespace composig {

RationalFunction::RationalFunction() : num_(), den_({1.0}) {}

RationalFunction::RationalFunction(Polynomial numerator, Polynomial denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.is_zero()) throw ValidationError("rational function with zero denominator");
}

Complex RationalFunction::operator()(Complex x) const {
  const Complex n = num_(x);
  const Complex d = den_(x);
  if (std::abs(d) < kPoleTolerance * (1.0 + std::abs(n)))
    throw PoleHit("rational function evaluated at a pole");
  return n / d;
}

bool RationalFunction::near_pole(Complex x) const {
  return std::abs(den_(x)) < kPoleTolerance * (1.0 + std::abs(num_(x)));
}

RationalFunction RationalFunction::derivative() const {
  return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RationalFunction RationalFunction::with_negated_argument() const {
  return RationalFunction(num_.with_negated_argument(), den_.with_negated_argument());
}

}  // namespace composig
