#include "composig/classification.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace composig {

namespace {

/// A point strictly inside Omega, used to orient D u D-bar when h has no
/// singular points there. Candidates run along the real segment between the
/// (real) endpoints of D.
int domain_winding_at_interior(const std::vector<Complex>& closed_d, Complex left, Complex right) {
  for (int i = 1; i < 64; ++i) {
    const Complex p = left + (right - left) * (static_cast<double>(i) / 64.0);
    if (distance_to_curve(closed_d, p) <= kWindingGuard) continue;
    const int w = winding_number(closed_d, p);
    if (w != 0) return w;
  }
  return 0;
}

template <typename Point>
void require_conjugate_closed(const std::vector<Point>& pts, const char* what) {
  for (const auto& p : pts) {
    if (std::abs(p.location.imag()) < 1e-9) continue;
    const bool paired = std::any_of(pts.begin(), pts.end(), [&](const Point& q) {
      return std::abs(q.location - std::conj(p.location)) < 1e-6 &&
             q.multiplicity == p.multiplicity;
    });
    if (!paired)
      throw AmbiguousMembership(std::string(what) +
                                " set is not conjugate-closed; membership is unreliable");
  }
}

}  // namespace

CurveClassification classify(const MaterialSystem& system, const Trajectory& trajectory,
                             const ClassifyOptions& options) {
  CurveClassification cls;
  const int n = options.samples > 0 ? options.samples : trajectory.sample_hint();
  cls.samples = trace_curves(system, trajectory, n);

  // Endpoint images must be real and on opposite sides of [-1, 1].
  const Complex a = cls.samples.c.front();
  const Complex b = cls.samples.c.back();
  if (std::abs(a.imag()) > 1e-9 * (1.0 + std::abs(a)) ||
      std::abs(b.imag()) > 1e-9 * (1.0 + std::abs(b)))
    throw InvalidTrajectory("endpoint images of z are not real; C u C-bar does not close");
  cls.endpoint_a = a.real();
  cls.endpoint_b = b.real();
  if (std::abs(cls.endpoint_a) <= 1.0 || std::abs(cls.endpoint_b) <= 1.0 ||
      (cls.endpoint_a > 1.0) == (cls.endpoint_b > 1.0))
    throw NotEncircling("endpoint images do not straddle the interval [-1, 1]");

  // Winding of C u C-bar about the probe grid: uniformly +1 or -1.
  const auto closed_c = cls.samples.closed_c();
  const int probes = std::max(2, options.probe_count);
  cls.probe_lambdas.resize(probes);
  cls.probe_windings.resize(probes);
  for (int i = 0; i < probes; ++i) {
    cls.probe_lambdas[i] = -1.0 + 2.0 * i / (probes - 1);
    cls.probe_windings[i] = winding_number(closed_c, Complex(cls.probe_lambdas[i]));
  }
  const int w0 = cls.probe_windings.front();
  if (std::abs(w0) != 1 ||
      !std::all_of(cls.probe_windings.begin(), cls.probe_windings.end(),
                   [&](int w) { return w == w0; }))
    throw NotEncircling("C u C-bar does not encircle [-1, 1] exactly once");
  cls.encircles_interval = true;
  cls.orientation = w0 > 0 ? Orientation::Anticlockwise : Orientation::Clockwise;

  cls.h = system.as_h();
  cls.h_poles_global = clustered_roots(cls.h.denominator());
  cls.h_zeros_global = clustered_roots(cls.h.numerator());

  cls.omega_domain_closed = trajectory.endpoints_imaginary();
  if (!cls.omega_domain_closed) {
    // D u D-bar is not a closed curve; the all-time analysis does not apply.
    cls.all_time_independent = false;
    return cls;
  }

  const auto closed_d = cls.samples.closed_d();
  cls.h_poles = poles_in_omega(cls.h, closed_d);
  require_conjugate_closed(cls.h_poles, "pole");

  cls.m_profile.resize(probes);
  bool any_preimage = false;
  for (int i = 0; i < probes; ++i) {
    cls.m_profile[i] = preimages_in_omega(cls.h, Complex(cls.probe_lambdas[i]), closed_d);
    require_conjugate_closed(cls.m_profile[i], "preimage");
    any_preimage = any_preimage || !cls.m_profile[i].empty();
  }
  cls.all_time_independent = !any_preimage;

  if (!cls.h_poles.empty()) {
    cls.domain_winding = cls.h_poles.front().winding > 0 ? 1 : -1;
  } else {
    bool found = false;
    for (const auto& profile : cls.m_profile) {
      if (!profile.empty()) {
        cls.domain_winding = profile.front().winding > 0 ? 1 : -1;
        found = true;
        break;
      }
    }
    if (!found)
      cls.domain_winding =
          domain_winding_at_interior(closed_d, cls.samples.d.front(), cls.samples.d.back());
  }

  // Counting identity: the winding-weighted zero/pole count of h - lambda over
  // Omega must reproduce the winding of the image curve about lambda.
  int pole_sum = 0;
  for (const auto& p : cls.h_poles) pole_sum += p.winding * p.multiplicity;
  for (int i = 0; i < probes; ++i) {
    int preimage_sum = 0;
    for (const auto& q : cls.m_profile[i]) preimage_sum += q.winding * q.multiplicity;
    if (preimage_sum - pole_sum != cls.probe_windings[i])
      throw NumericalError("winding-number consistency check failed at a probe lambda");
  }

  return cls;
}

}  // namespace composig
