#pragma once

#include <span>
#include <vector>

#include "composig/material.hpp"
#include "composig/trajectory.hpp"

namespace composig {

/// Distance below which a point is considered to sit on a sampled curve and
/// winding numbers / region membership are refused as ambiguous.
constexpr double kWindingGuard = 1e-6;

enum class Orientation { Anticlockwise, Clockwise };

/// Sampled images of a trajectory: C = z(Gamma), D = i*Gamma, and their
/// conjugates. The conjugate branches are stored traversed in reverse
/// (as s decreases from 1 to 0), so c followed by c_conj is the closed loop.
struct CurveSamples {
  std::vector<double> s;
  std::vector<Complex> c;
  std::vector<Complex> c_conj;
  std::vector<Complex> d;
  std::vector<Complex> d_conj;

  std::vector<Complex> closed_c() const;
  std::vector<Complex> closed_d() const;
};

/// Sample C, C-bar, D, D-bar along the trajectory. Samples flagged near a
/// pole of z are refined; a pole on the path raises TrajectoryThroughPole.
CurveSamples trace_curves(const MaterialSystem& system, const Trajectory& trajectory, int n);

/// Minimum distance from p to the closed polyline through the given points.
double distance_to_curve(std::span<const Complex> closed_curve, Complex p);

/// Winding number of a closed sampled curve about p, as the rounded sum of
/// signed angle increments. Throws PointOnCurve within the guard distance and
/// NonIntegerWinding when the rounding residual reaches 0.25.
int winding_number(std::span<const Complex> closed_curve, Complex p,
                   double guard = kWindingGuard);

}  // namespace composig
