#include "composig/material.hpp"

namespace composig {

MaterialSystem::MaterialSystem(std::optional<RationalFunction> mu1,
                               std::optional<RationalFunction> mu2, RationalFunction z,
                               Duality duality)
    : mu1_(std::move(mu1)),
      mu2_(std::move(mu2)),
      z_(std::move(z)),
      dz_(z_.derivative()),
      duality_(duality) {}

MaterialSystem MaterialSystem::phase_pair(RationalFunction mu1, RationalFunction mu2,
                                          Duality duality) {
  // z = (N1 D2 + N2 D1) / (N2 D1 - N1 D2); the common factor D1 D2 cancels exactly.
  Polynomial num = mu1.numerator() * mu2.denominator() + mu2.numerator() * mu1.denominator();
  Polynomial den = mu2.numerator() * mu1.denominator() - mu1.numerator() * mu2.denominator();
  if (den.is_zero())
    throw ValidationError("phase responses are identical; z(omega) is identically infinite");
  return MaterialSystem(std::move(mu1), std::move(mu2),
                        RationalFunction(std::move(num), std::move(den)), duality);
}

MaterialSystem MaterialSystem::direct_z(RationalFunction z, Duality duality) {
  return MaterialSystem(std::nullopt, std::nullopt, std::move(z), duality);
}

Complex MaterialSystem::eval_mu(int which, Complex omega) const {
  if (!has_phases()) throw ValidationError("eval_mu requires a phase-pair system");
  if (which != 1 && which != 2) throw ValidationError("phase index must be 1 or 2");
  const RationalFunction& mu = (which == 1) ? *mu1_ : *mu2_;
  return mu(laplace_variable(omega));
}

Complex MaterialSystem::eval_z(Complex omega) const { return z_(laplace_variable(omega)); }

Complex MaterialSystem::eval_z_derivative(Complex omega) const {
  // dz/domega = (dz/ds) * (ds/domega) with ds/domega = -i.
  return Complex(0.0, -1.0) * dz_(laplace_variable(omega));
}

Complex MaterialSystem::coupling(Complex omega) const {
  if (!mu2_) return Complex(1.0);
  const Complex m2 = (*mu2_)(laplace_variable(omega));
  if (duality_ == Duality::Direct) return m2;
  if (std::abs(m2) < 1e-300) throw CouplingZero("1/mu2 coupling at a zero of mu2");
  return 1.0 / m2;
}

RationalFunction MaterialSystem::as_h() const {
  // zeta = i*omega gives s = -i*omega = -zeta.
  return z_.with_negated_argument();
}

bool MaterialSystem::near_z_pole(Complex omega) const {
  return z_.near_pole(laplace_variable(omega));
}

}  // namespace composig
