#include "composig/recovery.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace composig {

namespace {

/// sign * sum_k w_k n_k e^{-beta_k t}: the measure-free k = 0 response per
/// unit a0.
double pole_sum(const CurveClassification& cls, int sign, double t) {
  Complex s(0.0);
  for (const auto& p : cls.h_poles)
    s += static_cast<double>(p.winding * p.multiplicity) * std::exp(-p.location * t);
  return sign * s.real();
}

double residue_sum(const CurveClassification& cls, int sign, double t) {
  Complex b(0.0);
  for (const auto& p : cls.h_poles) {
    if (p.multiplicity != 1 || !p.residue)
      throw NonSimplePole("first-moment recovery requires simple poles of h");
    b += static_cast<double>(p.winding) * (*p.residue) * std::exp(-p.location * t);
  }
  return sign * b.real();
}

void require_measure_independent(const CurveClassification& cls) {
  if (!cls.omega_domain_closed || !cls.all_time_independent)
    throw NotMeasureIndependent("scenario response depends on the measure away from t0");
}

}  // namespace

RecoveryResult recover_volume_fraction(const CurveClassification& cls, const SignalDesign& design,
                                       std::span<const Measurement> measurements, double epsilon) {
  require_measure_independent(cls);
  const auto* vf = std::get_if<VolumeFractionRecipe>(&design.recipe());
  if (!vf || vf->k != 0.0)
    throw ValidationError("volume-fraction recovery needs the k = 0 design");
  if (measurements.empty()) throw ValidationError("no measurements supplied");
  if (epsilon < 0.0) throw ValidationError("epsilon must be nonnegative");

  // Re v(t) = a0 * d(t) with d(t) = sign * sum w n e^{-beta t}.
  double dd = 0.0, dv = 0.0;
  std::vector<double> dens(measurements.size());
  for (size_t i = 0; i < measurements.size(); ++i) {
    dens[i] = pole_sum(cls, design.sign(), measurements[i].time);
    if (std::abs(dens[i]) < 1e-12)
      throw ZeroDenominator("closed-form denominator vanishes at a measurement time");
    dd += dens[i] * dens[i];
    dv += dens[i] * measurements[i].value;
  }
  const double a0 = dv / dd;

  double lo = 0.0, hi = 1.0;
  for (size_t i = 0; i < measurements.size(); ++i) {
    double f_lo = 0.5 * (measurements[i].value - epsilon) / dens[i];
    double f_hi = 0.5 * (measurements[i].value + epsilon) / dens[i];
    if (f_lo > f_hi) std::swap(f_lo, f_hi);
    lo = std::max(lo, f_lo);
    hi = std::min(hi, f_hi);
  }
  if (lo > hi) {
    // Noiseless multi-time intervals are points; tolerate rounding-level gaps.
    if (lo - hi > 1e-9 * (1.0 + std::abs(lo)))
      throw Infeasible("measurements are mutually inconsistent beyond epsilon");
    lo = hi = 0.5 * (lo + hi);
  }

  RecoveryResult result;
  result.f1 = std::clamp(0.5 * a0, lo, hi);
  result.interval_lo = lo;
  result.interval_hi = hi;
  double residual = 0.0;
  for (size_t i = 0; i < measurements.size(); ++i) {
    const double r = measurements[i].value - a0 * dens[i];
    residual += r * r;
  }
  std::ostringstream diag;
  diag << "inverted k=0 closed form at " << measurements.size()
       << " time(s); least-squares residual " << std::sqrt(residual);
  result.diagnostics = diag.str();
  return result;
}

double recover_first_moment(const CurveClassification& cls, const SignalDesign& design, double a0,
                            const Measurement& measurement) {
  require_measure_independent(cls);
  const auto* vf = std::get_if<VolumeFractionRecipe>(&design.recipe());
  if (!vf || vf->k != 1.0) throw ValidationError("first-moment recovery needs the k = 1 design");

  // Re v(t) = a0 [ (1 + M1) d(t) - t b(t) ], linear in M1 with coefficient a0 d(t).
  const double d = pole_sum(cls, design.sign(), measurement.time);
  if (std::abs(a0 * d) < 1e-12)
    throw ZeroCoefficient("coefficient of the first moment vanishes; cannot invert");
  const double b = residue_sum(cls, design.sign(), measurement.time);
  return (measurement.value / a0 + measurement.time * b) / d - 1.0;
}

Complex solve_two_time_system(double a0, double prefactor, Complex kappa, const Measurement& m1,
                              const Measurement& m2) {
  const Complex e1 = std::exp(-kappa * m1.time);
  const Complex e2 = std::exp(-kappa * m2.time);
  // v_i = -2 prefactor a0 [Re xi Re e_i - Im xi Im e_i]
  const double c = -2.0 * prefactor * a0;
  if (std::abs(c) < 1e-300) throw ZeroCoefficient("a0 must be nonzero for the two-time solve");
  const double det = e1.real() * (-e2.imag()) - (-e1.imag()) * e2.real();
  if (std::abs(det) < 1e-12 * std::abs(e1) * std::abs(e2))
    throw SingularSystem("two-time system is singular (equal times or real kappa)");
  const double r1 = m1.value / c;
  const double r2 = m2.value / c;
  const double re_xi = (r1 * (-e2.imag()) - (-e1.imag()) * r2) / det;
  const double im_xi = (e1.real() * r2 - r1 * e2.real()) / det;
  return Complex(re_xi, im_xi);
}

FrequencyRecovery recover_frequency_response(const CurveClassification& cls,
                                             const SignalDesign& design, double a0,
                                             std::span<const Measurement> measurements) {
  const auto* probe = std::get_if<FrequencyProbeRecipe>(&design.recipe());
  if (!probe) throw ValidationError("frequency recovery needs a frequency-probe design");
  if (!cls.omega_domain_closed || !cls.all_time_independent)
    throw PreconditionM("h takes values in [-1, 1] inside Omega; recovery only works at t = t0");

  const auto kappas = preimages_in_omega(cls.h, probe->z0, cls.samples.closed_d());
  int total = 0;
  for (const auto& q : kappas) total += std::abs(q.winding) * q.multiplicity;
  if (kappas.size() != 1 || total != 1)
    throw ValidationError("expected a single simple preimage of z0 in Omega (p = 1)");
  const Preimage& kappa = kappas.front();
  const double prefactor = design.sign() * kappa.winding;

  FrequencyRecovery result;
  if (std::abs(kappa.location.imag()) < 1e-9) {
    // Real kappa: Re v(t) = -prefactor a0 X e^{-kappa t}; one measurement suffices.
    if (measurements.empty()) throw ValidationError("no measurements supplied");
    const Measurement& m = measurements.front();
    const double den = -prefactor * a0 * std::exp(-kappa.location.real() * m.time);
    if (std::abs(den) < 1e-300) throw ZeroDenominator("zero denominator in single-time recovery");
    const double integral = m.value / den;
    result.xi = Complex(0.5 * integral);
    result.real_branch = true;
    std::ostringstream diag;
    diag << "real kappa = " << kappa.location.real() << "; single measurement at t = " << m.time;
    result.diagnostics = diag.str();
    return result;
  }

  if (measurements.size() < 2)
    throw ValidationError("complex kappa requires measurements at two distinct times");
  result.xi = solve_two_time_system(a0, prefactor, kappa.location, measurements[0],
                                    measurements[1]);
  result.real_branch = false;
  std::ostringstream diag;
  diag << "complex kappa = (" << kappa.location.real() << ", " << kappa.location.imag()
       << "); two-time solve at t = " << measurements[0].time << ", " << measurements[1].time;
  result.diagnostics = diag.str();
  return result;
}

}  // namespace composig
