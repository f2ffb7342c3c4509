#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "composig/design.hpp"
#include "test_systems.hpp"

using namespace composig;
using namespace composig::testing;

namespace {

SignalDesign design_for(const MaterialSystem& sys, const Trajectory& traj, Recipe recipe) {
  const auto cls = classify(sys, traj);
  return SignalDesign(sys, traj, std::move(recipe), cls.curve_sign());
}

/// g(lambda) along the sampled curves: (1/2) int alpha/(lambda - z) ds plus
/// the conjugate branch, by adaptive quadrature.
Complex g_of_lambda(const SignalDesign& d, double lambda) {
  const auto& sys = d.system();
  const auto& traj = d.trajectory();
  return integrate_adaptive([&](double s) {
    const Complex z = sys.eval_z(traj.omega(s));
    const Complex al = d.alpha(s);
    return 0.5 * al / (lambda - z) + 0.5 * std::conj(al) / (lambda - std::conj(z));
  });
}

}  // namespace

TEST_CASE("eval_r worked values") {
  const auto d0 = design_for(example1_system(), standard_trajectory(), VolumeFractionRecipe{0.0});
  CHECK(std::abs(d0.eval_r(Complex(3.0, 7.0)) - Complex(0.0, -1.0 / (2.0 * M_PI))) < 1e-15);

  const auto d1 = design_for(example1_system(), standard_trajectory(), VolumeFractionRecipe{1.0});
  CHECK(std::abs(d1.eval_r(Complex(0.0, 1.0)) -
                 Complex(0.0, -1.0) * Complex(1.0, 1.0) / (2.0 * M_PI)) < 1e-15);

  const auto dp = design_for(example1_system(), standard_trajectory(), FrequencyProbeRecipe{30.0});
  CHECK(std::abs(dp.eval_r(Complex(0.0)) - Complex(0.0, -1.0 / (60.0 * M_PI))) < 1e-15);
  CHECK_THROWS_AS(dp.eval_r(Complex(30.0)), ProbePole);
}

TEST_CASE("the reflection rule r(z) = -conj(r(conj z))") {
  const auto d = design_for(example1_system(), standard_trajectory(), VolumeFractionRecipe{1.0});
  const auto dp = design_for(example1_system(), standard_trajectory(), FrequencyProbeRecipe{30.0});
  for (const Complex z : {Complex(0.4, 2.0), Complex(-3.0, 0.7), Complex(11.0, -2.0)}) {
    CHECK(std::abs(d.eval_r(z) + std::conj(d.eval_r(std::conj(z)))) < 1e-15);
    CHECK(std::abs(dp.eval_r(z) + std::conj(dp.eval_r(std::conj(z)))) < 1e-14);
  }
}

TEST_CASE("alpha at s = 0 against the exact product and finite differences") {
  const auto d = design_for(example1_system(), standard_trajectory(), VolumeFractionRecipe{0.0});
  // z'(1.5i) = 16i, omega'(0) = 2 + i, r = -i/(2 pi):
  // alpha(0) = 2 (-i/2pi)(16i)(2+i) = (32 + 16i)/pi
  const Complex exact = Complex(32.0, 16.0) / M_PI;
  CHECK(std::abs(d.alpha(0.0) - exact) < 1e-12);

  // finite-difference oracle for d/ds z(omega(s)), one-sided at s = 0
  const auto& sys = d.system();
  const auto& traj = d.trajectory();
  auto zs = [&](double s) { return sys.eval_z(traj.omega(s)); };
  const double h = 1e-6;
  const Complex fd0 = (-3.0 * zs(0.0) + 4.0 * zs(h) - zs(2.0 * h)) / (2.0 * h);
  CHECK(std::abs(d.alpha(0.0) - 2.0 * d.eval_r(zs(0.0)) * fd0) < 1e-8 * std::abs(d.alpha(0.0)));

  // interior points, central differences
  for (double s : {0.21, 0.5, 0.83}) {
    const Complex fd = (zs(s + h) - zs(s - h)) / (2.0 * h);
    CHECK(std::abs(d.alpha(s) - 2.0 * d.eval_r(zs(s)) * fd) < 1e-8 * (1.0 + std::abs(d.alpha(s))));
  }

  // alpha vanishes where omega'(s) = 0: omega(s) = 1.5i + i (s - 0.5)^2 is
  // stationary at s = 0.5
  const Trajectory stationary(ComplexPolynomial{Complex(0.0, 1.75), Complex(0.0, -1.0),
                                                Complex(0.0, 1.0)});
  const SignalDesign ds(example1_system(), stationary, VolumeFractionRecipe{0.0}, 1);
  CHECK(std::abs(ds.alpha(0.5)) < 1e-12);
}

TEST_CASE("beta divides by the coupling") {
  const auto d = design_for(example1_system(), standard_trajectory(), VolumeFractionRecipe{0.0});
  for (double s : {0.0, 0.37, 1.0}) CHECK(std::abs(d.beta(s) - d.alpha(s) / 2.0) < 1e-14);

  // dual mode: c = 1/mu2 = 1/2, so beta = 2 alpha
  const SignalDesign dd(example1_system().with_duality(Duality::Dual), standard_trajectory(),
                        VolumeFractionRecipe{0.0}, 1);
  for (double s : {0.25, 0.75}) CHECK(std::abs(dd.beta(s) - 2.0 * dd.alpha(s)) < 1e-14);

  // PhasePair with mu2 = 1 + i/omega at omega = i: c = 2
  const auto sys2 = example2_system();
  CHECK(std::abs(sys2.coupling(Complex(0.0, 1.0)) - Complex(2.0)) < 1e-14);
}

TEST_CASE("synthesize_input against a trapezoid oracle at t = 0") {
  const auto d = design_for(example1_system(), standard_trajectory(), VolumeFractionRecipe{0.0});
  const std::vector<double> t0 = {0.0};
  const double u0 = d.synthesize_input(t0)[0];

  const int n = 1000001;
  Complex acc(0.0);
  for (int i = 0; i < n; ++i) {
    const double s = static_cast<double>(i) / (n - 1);
    const double w = (i == 0 || i == n - 1) ? 0.5 : 1.0;
    acc += w * d.beta(s);
  }
  const double oracle = (acc / static_cast<double>(n - 1)).real();
  CHECK(u0 == doctest::Approx(oracle).epsilon(1e-6));

  // at t = t0 the exponential factor is 1: same value through the quadrature
  const SignalDesign shifted(example1_system(), standard_trajectory(), VolumeFractionRecipe{0.0}, 1,
                             -2.0);
  const std::vector<double> tm2 = {-2.0};
  CHECK(shifted.synthesize_input(tm2)[0] == doctest::Approx(u0).epsilon(1e-9));
}

TEST_CASE("synthesis is linear in the recipe") {
  const auto traj = standard_trajectory();
  const auto sys = example1_system();
  const std::vector<double> times = {-1.5, -0.4, 0.0};

  const SignalDesign k0(sys, traj, VolumeFractionRecipe{0.0}, 1);
  const SignalDesign k1(sys, traj, VolumeFractionRecipe{1.0}, 1);
  const SignalDesign k2(sys, traj, VolumeFractionRecipe{2.0}, 1);
  const SignalDesign flipped(sys, traj, VolumeFractionRecipe{0.0}, -1);

  const auto u0 = k0.synthesize_input(times);
  const auto u1 = k1.synthesize_input(times);
  const auto u2 = k2.synthesize_input(times);
  const auto uf = flipped.synthesize_input(times);
  for (size_t i = 0; i < times.size(); ++i) {
    // r is affine in k, so u(k=2) - u(k=0) = 2 (u(k=1) - u(k=0))
    CHECK(u2[i] - u0[i] == doctest::Approx(2.0 * (u1[i] - u0[i])).epsilon(1e-9));
    // flipping the sign scales the recipe by -1
    CHECK(uf[i] == doctest::Approx(-u0[i]).epsilon(1e-12));
  }
}

TEST_CASE("residue identity: g(lambda) = -wind(C) 2 pi i r(lambda)") {
  struct Case {
    MaterialSystem sys;
    Trajectory traj;
  };
  const Case cases[] = {{example1_system(), standard_trajectory()},
                        {swapped_system(), reversed_trajectory()}};
  for (const auto& c : cases) {
    const auto cls = classify(c.sys, c.traj);
    const double wind = cls.curve_sign();
    for (const Recipe recipe :
         {Recipe{VolumeFractionRecipe{0.0}}, Recipe{VolumeFractionRecipe{1.0}},
          Recipe{FrequencyProbeRecipe{Complex(40.0)}}}) {
      const SignalDesign d(c.sys, c.traj, recipe, cls.curve_sign());
      for (int i = 0; i < 21; ++i) {
        const double lambda = -1.0 + 2.0 * i / 20.0;
        const Complex g = g_of_lambda(d, lambda);
        const Complex expected = -wind * 2.0 * M_PI * Complex(0.0, 1.0) * d.eval_r(lambda);
        CHECK(std::abs(g - expected) < 1e-8);
      }
    }
  }
}

TEST_CASE("gauge freedom: adding A(1/z) with A(w) = w^2 leaves g unchanged") {
  const auto sys = example1_system();
  const auto traj = standard_trajectory();
  const auto d = design_for(sys, traj, VolumeFractionRecipe{0.0});

  // extra recipe term -i z^{-2} / (2 pi); its g-contribution must vanish
  auto extra = [&](Complex z) { return Complex(0.0, -1.0) / (2.0 * M_PI * z * z); };
  for (int i = 0; i < 21; ++i) {
    const double lambda = -1.0 + 2.0 * i / 20.0;
    const Complex delta = integrate_adaptive([&](double s) {
      const Complex w = traj.omega(s);
      const Complex z = sys.eval_z(w);
      const Complex dz = sys.eval_z_derivative(w) * traj.omega_derivative(s);
      const Complex on_c = extra(z) * dz / (lambda - z);
      const Complex on_cbar = std::conj(extra(z) * dz) / (lambda - std::conj(z));
      return on_c + on_cbar;
    });
    CHECK(std::abs(delta) < 1e-8);
  }
}

TEST_CASE("probe design construction validates the winding of z0") {
  const auto sys = example1_system();
  const auto traj = standard_trajectory();
  const auto cls = classify(sys, traj);
  CHECK_NOTHROW(make_frequency_probe_design(sys, traj, Complex(30.0), cls));
  // z = 3 + 2i lies inside the image loop
  CHECK_THROWS_AS(make_frequency_probe_design(sys, traj, Complex(3.0, 2.0), cls),
                  ProbeInsideCurve);
}
