#pragma once

#include <optional>

#include "composig/rational.hpp"

namespace composig {

/// Which constitutive formulation drives the experiment. The dual problem
/// swaps the coupling factor c(omega) from mu2(omega) to 1/mu2(omega).
enum class Duality { Direct, Dual };

/// A two-phase material system: either the pair of phase responses
/// mu1(omega), mu2(omega), or the contrast map z(omega) given directly.
///
/// All responses are real-coefficient rationals in s = -i*omega, so the
/// symmetry mu(conj(-omega)) = conj(mu(omega)) holds by construction and
/// the rotated map h(zeta) = z(-i*zeta) is exactly rational.
class MaterialSystem {
 public:
  static MaterialSystem phase_pair(RationalFunction mu1, RationalFunction mu2,
                                   Duality duality = Duality::Direct);
  static MaterialSystem direct_z(RationalFunction z, Duality duality = Duality::Direct);

  bool has_phases() const { return mu1_.has_value(); }
  Duality duality() const { return duality_; }

  MaterialSystem with_duality(Duality d) const {
    MaterialSystem copy = *this;
    copy.duality_ = d;
    return copy;
  }

  /// Phase response at a complex frequency; which is 1 or 2. PhasePair only.
  Complex eval_mu(int which, Complex omega) const;

  /// The contrast variable z(omega) = (mu1 + mu2) / (mu2 - mu1).
  /// Throws PoleHit where mu1(omega) = mu2(omega).
  Complex eval_z(Complex omega) const;

  /// dz/domega, from the exact rational derivative in s.
  Complex eval_z_derivative(Complex omega) const;

  /// Coupling factor c(omega): mu2(omega) (direct) or 1/mu2(omega) (dual).
  /// Systems given as a direct z have no mu2; c is taken as 1.
  Complex coupling(Complex omega) const;

  /// h(zeta) = z(-i*zeta), a real-coefficient rational in zeta.
  RationalFunction as_h() const;

  /// z as a rational in s = -i*omega.
  const RationalFunction& z_in_s() const { return z_; }

  bool near_z_pole(Complex omega) const;

 private:
  MaterialSystem(std::optional<RationalFunction> mu1, std::optional<RationalFunction> mu2,
                 RationalFunction z, Duality duality);

  std::optional<RationalFunction> mu1_;
  std::optional<RationalFunction> mu2_;
  RationalFunction z_;    // in s
  RationalFunction dz_;   // dz/ds
  Duality duality_;
};

/// s = -i*omega.
inline Complex laplace_variable(Complex omega) { return Complex(0.0, -1.0) * omega; }

}  // namespace composig
