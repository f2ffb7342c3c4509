#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "composig/material.hpp"

using namespace composig;

namespace {

// mu1 = 1 + i/omega = (s + 1)/s, mu2 = 2.
MaterialSystem example1() {
  return MaterialSystem::phase_pair(
      RationalFunction(Polynomial{1.0, 1.0}, Polynomial{0.0, 1.0}),
      RationalFunction(Polynomial{2.0}, Polynomial{1.0}));
}

// mu1 = 1 - 1/omega^2 = (s^2 + 1)/s^2, mu2 = 1 + i/omega.
MaterialSystem example2() {
  return MaterialSystem::phase_pair(
      RationalFunction(Polynomial{1.0, 0.0, 1.0}, Polynomial{0.0, 0.0, 1.0}),
      RationalFunction(Polynomial{1.0, 1.0}, Polynomial{0.0, 1.0}));
}

// z = (s - 5)/((s - 1)(s - 8)).
MaterialSystem example3() {
  return MaterialSystem::direct_z(
      RationalFunction(Polynomial{-5.0, 1.0}, Polynomial{8.0, -9.0, 1.0}));
}

}  // namespace

TEST_CASE("eval_mu on the case-study models") {
  const auto sys = example1();
  CHECK(std::abs(sys.eval_mu(1, Complex(0.0, 1.5)) - Complex(5.0 / 3.0)) < 1e-14);
  CHECK(std::abs(sys.eval_mu(2, Complex(0.7, 2.3)) - Complex(2.0)) < 1e-14);

  // mu1 = 1 + 1/s^2 evaluates as 1 - 1/omega^2; at omega = i this is 2.
  const auto sys2 = example2();
  CHECK(std::abs(sys2.eval_mu(1, Complex(0.0, 1.0)) - Complex(2.0)) < 1e-14);
}

TEST_CASE("eval_z on the case-study scenarios") {
  const auto sys = example1();
  CHECK(std::abs(sys.eval_z(Complex(0.0, 1.5)) - Complex(11.0)) < 1e-12);
  CHECK(std::abs(sys.eval_z(Complex(0.0, 0.5)) - Complex(-5.0)) < 1e-12);
  CHECK(std::abs(sys.eval_z(Complex(0.0, 31.0 / 27.0)) - Complex(30.0)) < 1e-10);
  CHECK_THROWS_AS(sys.eval_z(Complex(0.0, 1.0)), PoleHit);  // mu1(i) = mu2

  const auto sys2 = example2();
  CHECK(std::abs(sys2.eval_z(Complex(0.0, 1.5)) - Complex(14.0)) < 1e-12);
  CHECK(std::abs(sys2.eval_z(Complex(0.0, 0.5)) - Complex(-4.0)) < 1e-12);

  const auto sys3 = example3();
  CHECK(std::abs(sys3.eval_z(Complex(0.0, 1.3)) - Complex(1.8407960199004975)) < 1e-12);
  CHECK(std::abs(sys3.eval_z(Complex(0.0, 7.7)) - Complex(-1.3432835820895522)) < 1e-12);
}

TEST_CASE("identical phases are rejected") {
  const RationalFunction mu(Polynomial{1.0, 1.0}, Polynomial{0.0, 1.0});
  CHECK_THROWS_AS(MaterialSystem::phase_pair(mu, mu), ValidationError);
}

TEST_CASE("as_h on the case-study scenarios") {
  // example 1: h = (3 zeta - 1)/(zeta + 1)
  const RationalFunction h1 = example1().as_h();
  CHECK(std::abs(h1(Complex(0.0)) - Complex(-1.0)) < 1e-14);
  CHECK(std::abs(h1(Complex(1.0)) - Complex(1.0)) < 1e-14);
  CHECK_THROWS_AS(h1(Complex(-1.0)), PoleHit);

  // example 3: h = -(zeta + 5)/((zeta + 1)(zeta + 8)); zero at -5, poles -1, -8
  const RationalFunction h3 = example3().as_h();
  CHECK(std::abs(h3(Complex(-5.0))) < 1e-14);
  CHECK_THROWS_AS(h3(Complex(-8.0)), PoleHit);
  CHECK_THROWS_AS(h3(Complex(-1.0)), PoleHit);

  // constant z stays constant
  const auto flat = MaterialSystem::direct_z(RationalFunction(Polynomial{4.0}, Polynomial{1.0}));
  CHECK(std::abs(flat.as_h()(Complex(0.3, 0.7)) - Complex(4.0)) < 1e-14);
}

TEST_CASE("real symmetry: conj(f(omega)) = f(-conj(omega)) on random points") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> re(-3.0, 3.0), im(0.05, 3.0);
  const auto sys = example1();
  const auto sys2 = example2();
  for (int i = 0; i < 1000; ++i) {
    const Complex w(re(rng), im(rng));
    const Complex mirrored = -std::conj(w);
    CHECK(std::abs(std::conj(sys.eval_mu(1, w)) - sys.eval_mu(1, mirrored)) <
          1e-12 * (1.0 + std::abs(sys.eval_mu(1, w))));
    CHECK(std::abs(std::conj(sys.eval_z(w)) - sys.eval_z(mirrored)) <
          1e-12 * (1.0 + std::abs(sys.eval_z(w))));
    CHECK(std::abs(std::conj(sys2.eval_z(w)) - sys2.eval_z(mirrored)) <
          1e-12 * (1.0 + std::abs(sys2.eval_z(w))));
  }
}

TEST_CASE("as_h agrees with eval_z composed with omega = -i zeta") {
  std::mt19937 rng(13);
  std::uniform_real_distribution<double> coord(-2.5, 2.5);
  for (const auto& sys : {example1(), example2(), example3()}) {
    const RationalFunction h = sys.as_h();
    int checked = 0;
    while (checked < 1000) {
      const Complex zeta(coord(rng), coord(rng));
      const Complex omega = Complex(0.0, -1.0) * zeta;
      if (h.near_pole(zeta) || sys.near_z_pole(omega)) continue;
      const Complex via_h = h(zeta);
      const Complex via_z = sys.eval_z(omega);
      CHECK(std::abs(via_h - via_z) <= 1e-12 * (1.0 + std::abs(via_z)));
      ++checked;
    }
  }
}

TEST_CASE("Im z > 0 in the open quadrant when mu2 is a real positive constant") {
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> pos(1e-3, 4.0);
  const auto sys = example1();
  for (int i = 0; i < 1000; ++i) {
    const Complex w(pos(rng), pos(rng));
    CHECK(sys.eval_z(w).imag() > 0.0);
  }
}

TEST_CASE("dual mode swaps the coupling factor") {
  const auto direct = example1();
  const auto dual = direct.with_duality(Duality::Dual);
  const Complex w(0.3, 0.9);
  CHECK(std::abs(direct.coupling(w) - Complex(2.0)) < 1e-14);
  CHECK(std::abs(dual.coupling(w) - Complex(0.5)) < 1e-14);
  // mu2 = 1 + i/omega at omega = i is 2
  const auto sys2 = example2();
  CHECK(std::abs(sys2.coupling(Complex(0.0, 1.0)) - Complex(2.0)) < 1e-14);
  // direct-z systems have unit coupling
  CHECK(std::abs(example3().coupling(w) - Complex(1.0)) == 0.0);
}
