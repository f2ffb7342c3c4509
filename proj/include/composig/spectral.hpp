#pragma once

#include <optional>
#include <span>
#include <vector>

#include "composig/curves.hpp"
#include "composig/rational.hpp"

namespace composig {

/// A pole beta_k of h inside Omega. The residue is present for simple poles
/// only; winding is the (signed) winding number of D u D-bar about the pole,
/// which weights its contribution to every closed form.
struct PolePoint {
  Complex location;
  int multiplicity = 1;
  std::optional<Complex> residue;
  int winding = 0;
};

/// A preimage of a target value under h inside Omega.
struct Preimage {
  Complex location;
  int multiplicity = 1;
  int winding = 0;
};

/// Poles of h inside the region bounded by the closed curve D u D-bar,
/// with multiplicities (roots clustered within 1e-7 are merged) and residues
/// num(beta)/den'(beta) for the simple ones.
std::vector<PolePoint> poles_in_omega(const RationalFunction& h,
                                      std::span<const Complex> closed_d);

/// Solutions of h(zeta) = target inside Omega, i.e. Omega-filtered roots of
/// numerator - target * denominator.
std::vector<Preimage> preimages_in_omega(const RationalFunction& h, Complex target,
                                         std::span<const Complex> closed_d);

/// All roots of the global pole/zero structure, unfiltered. Used for reports.
std::vector<std::pair<Complex, int>> clustered_roots(const Polynomial& p);

/// Poles plus a cache of preimage solves keyed by target value.
struct OmegaSpectrum {
  std::vector<PolePoint> poles;
  std::vector<std::pair<Complex, std::vector<Preimage>>> preimages;

  const std::vector<Preimage>* find(Complex target, double tol = 1e-12) const;
};

OmegaSpectrum analyze_spectrum(const RationalFunction& h, std::span<const Complex> closed_d,
                               std::span<const Complex> targets);

}  // namespace composig
