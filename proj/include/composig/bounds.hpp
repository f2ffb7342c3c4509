#pragma once

#include "composig/response.hpp"

namespace composig {

/// Moment constraints on the admissible measures: total mass alone, or mass
/// plus first moment.
struct MomentConstraints {
  double mass = 1.0;
  std::optional<double> m1;
};

struct BoundOptions {
  int lambda_grid = 401;       ///< scan resolution on [-1, 1]
  int refine_iterations = 3;   ///< golden-section steps around grid extremes
  bool a0_known = true;        ///< false widens the envelope over a0 in [0, 2]
};

struct BoundEnvelope {
  std::vector<double> times;
  std::vector<double> lower;
  std::vector<double> upper;
  std::vector<double> argmin_lambda;
  std::vector<double> argmax_lambda;
};

/// Extremal-measure envelope of the response over time. Point masses for the
/// mass-only constraint; constrained two-point masses when the first moment
/// is pinned. Scans a lambda grid and polishes each extreme locally.
BoundEnvelope bounds_over_measures(const ResponseContext& ctx, std::span<const double> times,
                                   const MomentConstraints& constraints,
                                   const BoundOptions& options = {});

/// Same envelope machinery for the single-frequency reference response v0.
BoundEnvelope reference_bounds(double a0, Complex z0, Complex omega0,
                               std::span<const double> times, const MomentConstraints& constraints,
                               const BoundOptions& options = {}, double t0 = 0.0);

}  // namespace composig
