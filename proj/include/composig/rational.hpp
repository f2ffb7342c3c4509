#pragma once

#include "composig/polynomial.hpp"

namespace composig {

/// Ratio of two real-coefficient polynomials.
///
/// Material responses are stored as rationals in the Laplace variable
/// s = -i*omega; real coefficients make the physical symmetry
/// f(conj(s)) = conj(f(s)) structural rather than checked.
class RationalFunction {
 public:
  RationalFunction();  // identically zero
  RationalFunction(Polynomial numerator, Polynomial denominator);

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }

  /// Evaluate at a complex point. Throws PoleHit when the denominator value
  /// is below 1e-12 * (1 + |numerator value|).
  Complex operator()(Complex x) const;

  /// True when the denominator is small enough at x that evaluation would throw.
  bool near_pole(Complex x) const;

  RationalFunction derivative() const;

  /// The rational r(-x), used for the substitution h(zeta) = z(-i*zeta).
  RationalFunction with_negated_argument() const;

  bool is_zero() const { return num_.is_zero(); }

  static constexpr double kPoleTolerance = 1e-12;

 private:
  Polynomial num_;
  Polynomial den_;
};

}  // namespace composig
