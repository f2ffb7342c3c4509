#pragma once

#include <optional>

#include "composig/design.hpp"
#include "composig/measure.hpp"

namespace composig {

struct TimeSeries {
  std::vector<double> times;
  std::vector<double> values;
};

/// Everything a forward response evaluation needs. a0 = 2 f1 with f1 the
/// phase-1 volume fraction, so a0 must lie in [0, 2].
struct ResponseContext {
  ResponseContext(double a0_, MaterialSystem system_, Trajectory trajectory_,
                  CurveClassification classification_, SignalDesign design_,
                  std::optional<SpectralMeasure> measure_ = std::nullopt,
                  std::optional<double> m1_ = std::nullopt);

  double a0;
  MaterialSystem system;
  Trajectory trajectory;
  CurveClassification classification;
  SignalDesign design;
  std::optional<SpectralMeasure> measure;
  std::optional<double> m1;  ///< first-moment constraint when no measure is pinned
};

/// Forward simulation by quadrature of the response integral. Requires a measure.
TimeSeries simulate_response(const ResponseContext& ctx, std::span<const double> times,
                             const QuadratureOptions& quad = {});

/// Closed-form response for the volume-fraction family (k = 0 or 1), built
/// from the poles of h in Omega and, when the scenario is not measure
/// independent, the per-mass preimage sums.
TimeSeries predict_volume_fraction_response(const ResponseContext& ctx, double k,
                                            std::span<const double> times);

/// Closed-form response for the frequency-probe design.
TimeSeries predict_frequency_probe_response(const ResponseContext& ctx, Complex z0,
                                            std::span<const double> times);

/// The single-frequency target v0(t) the probe design reproduces.
TimeSeries reference_response(double a0, const SpectralMeasure& measure, Complex z0,
                              Complex omega0, std::span<const double> times, double t0 = 0.0);

/// Per-unit-mass closed-form response of a point mass, precomputed over a time
/// grid so bound scans can evaluate many mass locations cheaply.
class ResponseKernel {
 public:
  ResponseKernel(const ResponseContext& ctx, std::span<const double> times);

  /// Kernel column over the time grid for a unit mass at lambda.
  std::vector<double> at(double lambda) const;

  std::span<const double> times() const { return times_; }

 private:
  const ResponseContext& ctx_;
  std::vector<double> times_;
  std::vector<Complex> closed_d_;
  std::vector<double> pole_term_;      // sign * a0 * S(t)
  std::vector<double> residue_term_;   // sign * a0 * t * B(t)
  std::vector<Complex> probe_esum_;    // sum over kappa of w p e^{-kappa t}
  double recipe_k_ = 0.0;
  bool probe_ = false;
  Complex z0_;
};

}  // namespace composig
