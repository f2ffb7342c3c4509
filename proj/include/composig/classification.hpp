#pragma once

#include "composig/spectral.hpp"

namespace composig {

struct ClassifyOptions {
  int probe_count = 201;       ///< equispaced lambda probes on [-1, 1]
  int samples = 0;             ///< curve samples; 0 takes the trajectory hint
};

/// Everything the closed forms need to know about a trajectory: endpoint
/// images, winding data of C u C-bar and D u D-bar, the poles of h inside
/// Omega, and the per-probe preimage profile deciding measure independence.
struct CurveClassification {
  double endpoint_a = 0.0;  ///< z(omega(0))
  double endpoint_b = 0.0;  ///< z(omega(1))

  std::vector<double> probe_lambdas;
  std::vector<int> probe_windings;        ///< winding of C u C-bar about each probe
  Orientation orientation = Orientation::Anticlockwise;  ///< of C u C-bar
  bool encircles_interval = false;

  bool omega_domain_closed = false;  ///< both trajectory endpoints imaginary
  int domain_winding = 0;            ///< common winding of D u D-bar inside Omega (0 if open)

  RationalFunction h;                         ///< z(-i zeta)
  std::vector<PolePoint> h_poles;             ///< poles of h inside Omega
  std::vector<std::pair<Complex, int>> h_poles_global;  ///< all poles of h
  std::vector<std::pair<Complex, int>> h_zeros_global;  ///< all zeros of h
  std::vector<std::vector<Preimage>> m_profile;  ///< per-probe preimages in Omega

  bool all_time_independent = false;

  CurveSamples samples;

  /// +1 anticlockwise C, -1 clockwise C; the recipe sign of the designs.
  int curve_sign() const { return orientation == Orientation::Anticlockwise ? 1 : -1; }
};

/// Trace the curves, locate the spectral data of h over Omega, and decide
/// admissibility and all-time measure independence.
CurveClassification classify(const MaterialSystem& system, const Trajectory& trajectory,
                             const ClassifyOptions& options = {});

}  // namespace composig
