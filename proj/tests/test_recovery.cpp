#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "composig/recovery.hpp"
#include "test_systems.hpp"

using namespace composig;
using namespace composig::testing;

namespace {

struct Prepared {
  CurveClassification cls;
  SignalDesign design;
};

Prepared prepared(const MaterialSystem& sys, const Trajectory& traj, Recipe recipe) {
  auto cls = classify(sys, traj);
  SignalDesign design(sys, traj, std::move(recipe), cls.curve_sign());
  return {std::move(cls), std::move(design)};
}

}  // namespace

TEST_CASE("volume fraction from single noiseless measurements") {
  const auto p = prepared(example1_system(), standard_trajectory(), VolumeFractionRecipe{0.0});

  const Measurement at0{0.0, -0.6};
  const auto r0 = recover_volume_fraction(p.cls, p.design, std::span(&at0, 1), 0.0);
  CHECK(r0.f1 == doctest::Approx(0.3).epsilon(1e-12));
  CHECK(r0.interval_lo == doctest::Approx(0.3));
  CHECK(r0.interval_hi == doctest::Approx(0.3));

  const Measurement at_m1{-1.0, -0.6 * std::exp(-1.0)};
  const auto r1 = recover_volume_fraction(p.cls, p.design, std::span(&at_m1, 1), 0.0);
  CHECK(r1.f1 == doctest::Approx(0.3).epsilon(1e-12));

  const Measurement zero{0.0, 0.0};
  const auto rz = recover_volume_fraction(p.cls, p.design, std::span(&zero, 1), 0.0);
  CHECK(rz.f1 == 0.0);
}

TEST_CASE("interval under uncertainty contains the truth and stays in [0, 1]") {
  const auto p = prepared(example1_system(), standard_trajectory(), VolumeFractionRecipe{0.0});
  std::mt19937 rng(53);
  std::uniform_real_distribution<double> f1_draw(0.05, 0.95), noise(-1.0, 1.0),
      t_draw(-2.5, 0.0);
  for (int trial = 0; trial < 100; ++trial) {
    const double f1 = f1_draw(rng);
    const double t = t_draw(rng);
    const double truth = -2.0 * f1 * std::exp(t);
    const double eps = 0.01 * std::abs(truth);
    const Measurement noisy{t, truth + eps * noise(rng)};
    const auto r = recover_volume_fraction(p.cls, p.design, std::span(&noisy, 1), eps);
    CHECK(r.interval_lo <= f1 + 1e-12);
    CHECK(r.interval_hi >= f1 - 1e-12);
    CHECK(r.interval_lo >= 0.0);
    CHECK(r.interval_hi <= 1.0);
    CHECK(r.f1 >= r.interval_lo);
    CHECK(r.f1 <= r.interval_hi);
  }
}

TEST_CASE("volume-fraction recovery preconditions") {
  const auto p3 = prepared(example3_system(), example3_trajectory(), VolumeFractionRecipe{0.0});
  const Measurement m{0.5, -0.3};
  CHECK_THROWS_AS(recover_volume_fraction(p3.cls, p3.design, std::span(&m, 1), 0.0),
                  NotMeasureIndependent);

  const auto p1 = prepared(example1_system(), standard_trajectory(), VolumeFractionRecipe{1.0});
  CHECK_THROWS_AS(recover_volume_fraction(p1.cls, p1.design, std::span(&m, 1), 0.0),
                  ValidationError);
}

TEST_CASE("first moment recovery") {
  const auto p = prepared(example1_system(), standard_trajectory(), VolumeFractionRecipe{1.0});
  CHECK(recover_first_moment(p.cls, p.design, 0.6, {0.0, -0.84}) ==
        doctest::Approx(0.4).epsilon(1e-12));
  CHECK(recover_first_moment(p.cls, p.design, 0.6, {0.0, -0.6}) ==
        doctest::Approx(0.0).epsilon(1e-12));
  // away from t = 0: -0.6 e^t (1 + M1 + 4t) at t = -0.5 with M1 = 0.25
  const double t = -0.5;
  const double value = -0.6 * std::exp(t) * (1.25 + 4.0 * t);
  CHECK(recover_first_moment(p.cls, p.design, 0.6, {t, value}) ==
        doctest::Approx(0.25).epsilon(1e-10));
  CHECK_THROWS_AS(recover_first_moment(p.cls, p.design, 0.0, {0.0, -0.84}), ZeroCoefficient);
}

TEST_CASE("synthetic two-time round trip recovers xi") {
  const Complex kappa(-1.0, 0.5);
  const Complex xi(0.1, 0.2);
  const double a0 = 0.6;
  auto v = [&](double t) {
    return (-a0 * (xi * std::exp(-kappa * t) + std::conj(xi * std::exp(-kappa * t)))).real();
  };
  const Measurement m1{0.0, v(0.0)}, m2{1.0, v(1.0)};
  const Complex recovered = solve_two_time_system(a0, 1.0, kappa, m1, m2);
  CHECK(std::abs(recovered - xi) < 1e-10);

  const Measurement same{0.0, v(0.0)};
  CHECK_THROWS_AS(solve_two_time_system(a0, 1.0, kappa, m1, same), SingularSystem);
  CHECK_THROWS_AS(solve_two_time_system(a0, 1.0, Complex(-1.0), m1, m2), SingularSystem);
}

TEST_CASE("single-time recovery of the Stieltjes integral for real z0") {
  const auto p = prepared(example1_system(), standard_trajectory(),
                          FrequencyProbeRecipe{Complex(30.0)});
  // true response: a0 e^{31 t/27} / (0.5 - 30)
  const double t = 0.5;
  const Measurement m{t, 0.6 / (0.5 - 30.0) * std::exp(31.0 * t / 27.0)};
  const auto r = recover_frequency_response(p.cls, p.design, 0.6, std::span(&m, 1));
  CHECK(r.real_branch);
  CHECK(r.stieltjes().real() == doctest::Approx(-2.0 / 59.0).epsilon(1e-10));
  CHECK(std::abs(r.stieltjes().imag()) < 1e-14);
}

TEST_CASE("frequency recovery precondition on m") {
  const auto sys = example3_system();
  const auto traj = example3_trajectory();
  auto cls = classify(sys, traj);
  // z0 = 3 is outside C u C-bar for example 3 (endpoints 1.84 / -1.34)
  SignalDesign design(sys, traj, FrequencyProbeRecipe{Complex(3.0)}, cls.curve_sign());
  const Measurement m{0.5, -0.1};
  CHECK_THROWS_AS(recover_frequency_response(cls, design, 0.6, std::span(&m, 1)), PreconditionM);
}

TEST_CASE("recovery through a full forward simulation round trip") {
  // forward-simulate with a hidden measure and volume fraction, then invert
  std::mt19937 rng(59);
  std::uniform_real_distribution<double> f1_draw(0.1, 0.9), loc(-0.9, 0.9);
  for (const auto& [sys, traj] : {std::pair{example1_system(), standard_trajectory()},
                                  std::pair{example2_system(), standard_trajectory()}}) {
    const auto p = prepared(sys, traj, VolumeFractionRecipe{0.0});
    for (int trial = 0; trial < 5; ++trial) {
      const double f1 = f1_draw(rng);
      const SpectralMeasure measure = SpectralMeasure::point(loc(rng));
      const ResponseContext ctx(2.0 * f1, sys, traj, p.cls, p.design, measure);
      const std::vector<double> times = {-1.7, -0.3};
      const TimeSeries sim = simulate_response(ctx, times);
      std::vector<Measurement> ms;
      for (size_t i = 0; i < times.size(); ++i) ms.push_back({times[i], sim.values[i]});
      const auto r = recover_volume_fraction(p.cls, p.design, ms, 0.0);
      CHECK(r.f1 == doctest::Approx(f1).epsilon(1e-6));
    }
  }
}
