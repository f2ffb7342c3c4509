#pragma once

#include <string>

#include "composig/response.hpp"

namespace composig {

struct Measurement {
  double time;
  double value;
};

struct RecoveryResult {
  double f1 = 0.0;
  double interval_lo = 0.0;
  double interval_hi = 0.0;
  std::string diagnostics;
};

/// Invert the measure-independent k = 0 closed form for the volume fraction.
/// Several measurements are combined by least squares; the uncertainty
/// interval maps value +/- epsilon through the same linear inverse and is
/// intersected with [0, 1].
RecoveryResult recover_volume_fraction(const CurveClassification& cls, const SignalDesign& design,
                                       std::span<const Measurement> measurements, double epsilon);

/// Invert the k = 1 closed form for the first moment of the measure, with a0
/// known.
double recover_first_moment(const CurveClassification& cls, const SignalDesign& design, double a0,
                            const Measurement& measurement);

struct FrequencyRecovery {
  Complex xi;         ///< integral of d gamma / (2 (lambda - z0))
  bool real_branch = false;
  std::string diagnostics;

  /// integral of d gamma / (lambda - z0)
  Complex stieltjes() const { return 2.0 * xi; }
};

/// Recover the response at the probe frequency: one measurement when the
/// preimage kappa is real, a two-time 2x2 solve when it is complex.
FrequencyRecovery recover_frequency_response(const CurveClassification& cls,
                                             const SignalDesign& design, double a0,
                                             std::span<const Measurement> measurements);

/// The two-time linear system Re v(t_i) = -prefactor * a0 * 2 Re(xi e^{-kappa t_i}),
/// solved for xi. Exposed for synthetic round trips.
Complex solve_two_time_system(double a0, double prefactor, Complex kappa, const Measurement& m1,
                              const Measurement& m2);

}  // namespace composig
