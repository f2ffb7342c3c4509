#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_systems.hpp"

using namespace composig;
using namespace composig::testing;

TEST_CASE("trajectory validation") {
  // endpoints on the positive imaginary axis, path in the quadrant: fine
  CHECK_NOTHROW(standard_trajectory());
  // endpoint off-axis
  CHECK_THROWS_AS(Trajectory(ComplexPolynomial{Complex(1.0, 1.0)}), InvalidTrajectory);
  // dips below the real axis on the way
  CHECK_THROWS_AS(
      Trajectory(ComplexPolynomial{Complex(0.0, 1.0), Complex(0.0, -3.0), Complex(0.0, 2.0)}),
      InvalidTrajectory);
  CHECK(standard_trajectory().endpoints_imaginary());
}

TEST_CASE("trace_curves endpoints and conjugate structure") {
  const auto samples = trace_curves(example1_system(), standard_trajectory(), 801);
  CHECK(samples.c.front().real() == doctest::Approx(11.0));
  CHECK(samples.c.back().real() == doctest::Approx(-5.0));

  const auto samples3 = trace_curves(example3_system(), example3_trajectory(), 801);
  CHECK(samples3.c.front().real() == doctest::Approx(1.8408).epsilon(5e-4));
  CHECK(samples3.c.back().real() == doctest::Approx(-1.3433).epsilon(5e-4));

  // conjugate branch is the reversed pointwise conjugate; D = i Gamma
  for (size_t i = 0; i < samples.c.size(); i += 100) {
    CHECK(samples.c_conj[i] == std::conj(samples.c[samples.c.size() - 1 - i]));
    CHECK(std::abs(samples.d[i] - Complex(0.0, 1.0) * standard_trajectory().omega(samples.s[i])) <
          1e-15);
  }
}

TEST_CASE("trajectory through the pole of z is rejected") {
  // straight segment from 1.5i to 0.5i passes through omega* = i
  const Trajectory bad(ComplexPolynomial{Complex(0.0, 1.5), Complex(0.0, -1.0)});
  // with an odd sample count s = 0.5 is itself a sample
  CHECK_THROWS_AS(trace_curves(example1_system(), bad, 1001), TrajectoryThroughPole);
  // with an even count the pole falls between samples and only the refinement
  // pass can catch it
  CHECK_THROWS_AS(trace_curves(example1_system(), bad, 1000), TrajectoryThroughPole);
}

TEST_CASE("a near miss of the pole is allowed") {
  // passes within 1e-3 of omega* = i: |z| becomes large but stays finite
  const Trajectory close(
      ComplexPolynomial{Complex(0.0, 1.5), Complex(4e-3, -1.0), Complex(-4e-3, 0.0)});
  CHECK_NOTHROW(trace_curves(example1_system(), close, 1000));
}

TEST_CASE("winding number on a square") {
  const std::vector<Complex> square = {Complex(1.0, 1.0), Complex(-1.0, 1.0), Complex(-1.0, -1.0),
                                       Complex(1.0, -1.0)};
  CHECK(winding_number(square, Complex(0.0)) == 1);
  CHECK(winding_number(square, Complex(5.0)) == 0);
  CHECK_THROWS_AS(winding_number(square, Complex(1.0, 0.5)), PointOnCurve);

  const std::vector<Complex> clockwise(square.rbegin(), square.rend());
  CHECK(winding_number(clockwise, Complex(0.0)) == -1);
}

TEST_CASE("winding of the example-1 image curve") {
  const auto samples = trace_curves(example1_system(), standard_trajectory(), 2048);
  const auto loop = samples.closed_c();
  CHECK(winding_number(loop, Complex(30.0)) == 0);
  CHECK(std::abs(winding_number(loop, Complex(0.0))) == 1);
  CHECK(winding_number(loop, Complex(0.0)) == 1);  // anticlockwise
}

TEST_CASE("classify example 1") {
  const auto cls = classify(example1_system(), standard_trajectory());
  CHECK(cls.endpoint_a == doctest::Approx(11.0));
  CHECK(cls.endpoint_b == doctest::Approx(-5.0));
  CHECK(cls.encircles_interval);
  CHECK(cls.orientation == Orientation::Anticlockwise);
  CHECK(cls.domain_winding == -1);  // D traced clockwise
  CHECK(cls.all_time_independent);
  REQUIRE(cls.h_poles.size() == 1);
  CHECK(std::abs(cls.h_poles[0].location - Complex(-1.0)) < 1e-9);
  CHECK(cls.h_poles[0].multiplicity == 1);
  REQUIRE(cls.h_poles[0].residue.has_value());
  CHECK(std::abs(*cls.h_poles[0].residue - Complex(-4.0)) < 1e-9);
  for (const auto& profile : cls.m_profile) CHECK(profile.empty());
}

TEST_CASE("classify example 2") {
  const auto cls = classify(example2_system(), standard_trajectory());
  CHECK(cls.endpoint_a == doctest::Approx(14.0));
  CHECK(cls.endpoint_b == doctest::Approx(-4.0));
  CHECK(cls.all_time_independent);
  REQUIRE(cls.h_poles.size() == 1);
  CHECK(std::abs(cls.h_poles[0].location - Complex(-1.0)) < 1e-9);
  CHECK(std::abs(*cls.h_poles[0].residue - Complex(-4.0)) < 1e-9);
}

TEST_CASE("classify example 3: measure dependent, poles outside Omega") {
  const auto cls = classify(example3_system(), example3_trajectory());
  CHECK_FALSE(cls.all_time_independent);
  CHECK(cls.h_poles.empty());  // -1 and -8 are outside Omega
  REQUIRE(cls.h_poles_global.size() == 2);
  CHECK(cls.orientation == Orientation::Anticlockwise);
  CHECK(cls.domain_winding == 1);
  // every probe lambda has exactly one simple preimage
  for (const auto& profile : cls.m_profile) {
    REQUIRE(profile.size() == 1);
    CHECK(profile[0].multiplicity == 1);
    CHECK(profile[0].winding == 1);
  }
  // consistency with the caption: zero of h at -5 sits inside Omega
  const auto zeros = preimages_in_omega(cls.h, Complex(0.0), cls.samples.closed_d());
  REQUIRE(zeros.size() == 1);
  CHECK(std::abs(zeros[0].location - Complex(-5.0)) < 1e-9);
}

TEST_CASE("clockwise orientation from swapped phases and a reversed trajectory") {
  const auto cls = classify(swapped_system(), reversed_trajectory());
  CHECK(cls.orientation == Orientation::Clockwise);
  CHECK(cls.curve_sign() == -1);
  CHECK(cls.domain_winding == 1);  // reversal also flips D
  CHECK(cls.all_time_independent);
  REQUIRE(cls.h_poles.size() == 1);
  CHECK(std::abs(*cls.h_poles[0].residue - Complex(4.0)) < 1e-9);  // h = -(3z-1)/(z+1)
}

TEST_CASE("both endpoints on the same side: NotEncircling") {
  // omega from 1.5i to 1.2i stays above the pole omega* = i, so both images are > 1
  const Trajectory same_side(
      ComplexPolynomial{Complex(0.0, 1.5), Complex(1.0, 0.2), Complex(-1.0, -0.5)});
  CHECK_THROWS_AS(classify(example1_system(), same_side), NotEncircling);
}

TEST_CASE("constant z degenerates and is rejected") {
  const auto flat = MaterialSystem::direct_z(RationalFunction(Polynomial{4.0}, Polynomial{1.0}));
  CHECK_THROWS_AS(classify(flat, standard_trajectory()), NotEncircling);
}

TEST_CASE("counting identities across the probe grid") {
  for (const auto& [sys, traj] :
       {std::pair{example1_system(), standard_trajectory()},
        std::pair{example2_system(), standard_trajectory()},
        std::pair{example3_system(), example3_trajectory()},
        std::pair{swapped_system(), reversed_trajectory()}}) {
    const auto cls = classify(sys, traj);
    int pole_sum = 0;
    for (const auto& p : cls.h_poles) pole_sum += p.winding * p.multiplicity;
    for (size_t i = 0; i < cls.probe_lambdas.size(); ++i) {
      int pre = 0;
      for (const auto& q : cls.m_profile[i]) pre += q.winding * q.multiplicity;
      CHECK(pre - pole_sum == cls.probe_windings[i]);
    }
  }
}

TEST_CASE("doubling the sample count is stable") {
  const auto coarse = classify(example1_system(), standard_trajectory(), {201, 2048});
  const auto fine = classify(example1_system(), standard_trajectory(), {201, 4096});
  CHECK(coarse.probe_windings == fine.probe_windings);
  CHECK(coarse.domain_winding == fine.domain_winding);
  REQUIRE(coarse.h_poles.size() == fine.h_poles.size());
  CHECK(coarse.all_time_independent == fine.all_time_independent);

  const auto coarse3 = classify(example3_system(), example3_trajectory(), {201, 2048});
  const auto fine3 = classify(example3_system(), example3_trajectory(), {201, 4096});
  CHECK(coarse3.probe_windings == fine3.probe_windings);
  for (size_t i = 0; i < coarse3.m_profile.size(); ++i)
    CHECK(coarse3.m_profile[i].size() == fine3.m_profile[i].size());
}
