#include "composig/curves.hpp"

#include <algorithm>
#include <cmath>

namespace composig {

namespace {

/// Golden-section minimization of |den(s)| used to decide whether the
/// trajectory actually crosses a pole between two samples.
double minimize_abs(const Polynomial& poly, const Trajectory& traj, double lo, double hi) {
  auto value = [&](double s) { return std::abs(poly(laplace_variable(traj.omega(s)))); };
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  double a = lo, b = hi;
  double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
  double f1 = value(x1), f2 = value(x2);
  for (int it = 0; it < 80; ++it) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - gr * (b - a);
      f1 = value(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + gr * (b - a);
      f2 = value(x2);
    }
  }
  return std::min(f1, f2);
}

}  // namespace

std::vector<Complex> CurveSamples::closed_c() const {
  std::vector<Complex> loop = c;
  loop.insert(loop.end(), c_conj.begin(), c_conj.end());
  return loop;
}

std::vector<Complex> CurveSamples::closed_d() const {
  std::vector<Complex> loop = d;
  loop.insert(loop.end(), d_conj.begin(), d_conj.end());
  return loop;
}

CurveSamples trace_curves(const MaterialSystem& system, const Trajectory& trajectory, int n) {
  if (n < 2) throw ValidationError("need at least two curve samples");

  CurveSamples out;
  out.s.resize(n);
  out.c.resize(n);
  out.d.resize(n);

  const Polynomial& den = system.z_in_s().denominator();
  for (int i = 0; i < n; ++i) {
    const double s = static_cast<double>(i) / (n - 1);
    out.s[i] = s;
    const Complex w = trajectory.omega(s);
    if (system.near_z_pole(w))
      throw TrajectoryThroughPole("trajectory sample hits a pole of z");
    out.c[i] = system.eval_z(w);
    out.d[i] = Complex(0.0, 1.0) * w;
  }

  // Scan for poles hiding between samples: local minima of |den| that dip
  // below the curve scale get a refined look. The trigger is generous because
  // a zero between two samples may still leave |den| ~ scale/n at both.
  double scale = 0.0;
  std::vector<double> dmag(n);
  for (int i = 0; i < n; ++i) {
    dmag[i] = std::abs(den(laplace_variable(trajectory.omega(out.s[i]))));
    scale = std::max(scale, dmag[i]);
  }
  for (int i = 1; i + 1 < n; ++i) {
    if (dmag[i] <= dmag[i - 1] && dmag[i] <= dmag[i + 1] && dmag[i] < 0.02 * scale) {
      const double m = minimize_abs(den, trajectory, out.s[i - 1], out.s[i + 1]);
      if (m < RationalFunction::kPoleTolerance * scale)
        throw TrajectoryThroughPole("trajectory passes through a pole of z");
    }
  }

  out.c_conj.resize(n);
  out.d_conj.resize(n);
  for (int i = 0; i < n; ++i) {
    out.c_conj[i] = std::conj(out.c[n - 1 - i]);
    out.d_conj[i] = std::conj(out.d[n - 1 - i]);
  }
  return out;
}

double distance_to_curve(std::span<const Complex> closed_curve, Complex p) {
  const size_t n = closed_curve.size();
  double best = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < n; ++i) {
    const Complex a = closed_curve[i];
    const Complex b = closed_curve[(i + 1) % n];
    const Complex ab = b - a;
    const double len2 = std::norm(ab);
    double t = 0.0;
    if (len2 > 0.0) {
      t = ((p - a).real() * ab.real() + (p - a).imag() * ab.imag()) / len2;
      t = std::clamp(t, 0.0, 1.0);
    }
    best = std::min(best, std::abs(p - (a + t * ab)));
  }
  return best;
}

int winding_number(std::span<const Complex> closed_curve, Complex p, double guard) {
  if (closed_curve.size() < 3) throw ValidationError("winding number needs a closed curve");
  if (distance_to_curve(closed_curve, p) <= guard)
    throw PointOnCurve("winding-number probe point is on the curve");

  const size_t n = closed_curve.size();
  double total = 0.0;
  for (size_t i = 0; i < n; ++i) {
    const Complex a = closed_curve[i] - p;
    const Complex b = closed_curve[(i + 1) % n] - p;
    total += std::arg(b / a);
  }
  const double turns = total / (2.0 * M_PI);
  const double rounded = std::round(turns);
  if (std::abs(turns - rounded) >= 0.25)
    throw NonIntegerWinding("winding number did not round cleanly; curve is under-sampled");
  return static_cast<int>(rounded);
}

}  // namespace composig
