#include "composig/spectral.hpp"

#include <algorithm>
#include <cmath>

namespace composig {

namespace {

constexpr double kClusterDistance = 1e-7;

std::vector<std::pair<Complex, int>> cluster(std::vector<Complex> pts) {
  std::vector<std::pair<Complex, int>> out;
  std::vector<bool> used(pts.size(), false);
  for (size_t i = 0; i < pts.size(); ++i) {
    if (used[i]) continue;
    Complex sum = pts[i];
    int count = 1;
    used[i] = true;
    for (size_t j = i + 1; j < pts.size(); ++j) {
      if (!used[j] && std::abs(pts[j] - pts[i]) < kClusterDistance) {
        sum += pts[j];
        ++count;
        used[j] = true;
      }
    }
    out.emplace_back(sum / static_cast<double>(count), count);
  }
  return out;
}

/// Membership winding with the ambiguity guard band.
int membership_winding(std::span<const Complex> closed_d, Complex p) {
  if (distance_to_curve(closed_d, p) <= kWindingGuard)
    throw AmbiguousMembership("root lies within the guard band of D u D-bar");
  return winding_number(closed_d, p);
}

}  // namespace

std::vector<std::pair<Complex, int>> clustered_roots(const Polynomial& p) {
  if (p.degree() < 1) return {};
  return cluster(roots(p));
}

std::vector<PolePoint> poles_in_omega(const RationalFunction& h,
                                      std::span<const Complex> closed_d) {
  std::vector<PolePoint> out;
  const Polynomial& den = h.denominator();
  if (den.degree() < 1) return out;
  const Polynomial dden = den.derivative();
  for (const auto& [root, mult] : cluster(roots(den))) {
    const int w = membership_winding(closed_d, root);
    if (w == 0) continue;
    PolePoint pole;
    pole.location = root;
    pole.multiplicity = mult;
    pole.winding = w;
    if (mult == 1) pole.residue = h.numerator()(root) / dden(root);
    out.push_back(pole);
  }
  return out;
}

std::vector<Preimage> preimages_in_omega(const RationalFunction& h, Complex target,
                                         std::span<const Complex> closed_d) {
  if (!std::isfinite(target.real()) || !std::isfinite(target.imag()))
    throw ValidationError("preimage target must be finite");

  std::vector<Complex> raw;
  if (target.imag() == 0.0) {
    const Polynomial shifted = h.numerator() - target.real() * h.denominator();
    if (shifted.is_zero()) throw DegenerateTarget("h is identically equal to the target");
    raw = roots(shifted);
  } else {
    const ComplexPolynomial shifted = to_complex(h.numerator()) - target * to_complex(h.denominator());
    if (shifted.is_zero()) throw DegenerateTarget("h is identically equal to the target");
    raw = roots(shifted);
  }

  std::vector<Preimage> out;
  for (const auto& [root, mult] : cluster(std::move(raw))) {
    const int w = membership_winding(closed_d, root);
    if (w == 0) continue;
    out.push_back({root, mult, w});
  }
  return out;
}

const std::vector<Preimage>* OmegaSpectrum::find(Complex target, double tol) const {
  for (const auto& [key, value] : preimages)
    if (std::abs(key - target) <= tol) return &value;
  return nullptr;
}

OmegaSpectrum analyze_spectrum(const RationalFunction& h, std::span<const Complex> closed_d,
                               std::span<const Complex> targets) {
  OmegaSpectrum spectrum;
  spectrum.poles = poles_in_omega(h, closed_d);
  spectrum.preimages.reserve(targets.size());
  for (const Complex& t : targets)
    spectrum.preimages.emplace_back(t, preimages_in_omega(h, t, closed_d));
  return spectrum;
}

}  // namespace composig
