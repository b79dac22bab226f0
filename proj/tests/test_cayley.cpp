#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "beq/cayley.hpp"
#include "beq/errors.hpp"
#include "testutil.hpp"

using namespace beq;

TEST_CASE("forward: fixed values at theta = 0") {
  CayleyMap map(0.0);
  auto a = map.forward(cplx{-1.0, 0.0});
  REQUIRE(!a.is_infinity);
  CHECK(std::abs(a.value) < 1e-15);

  auto b = map.forward(cplx{0.0, 0.0});
  CHECK(std::abs(b.value - cplx{0.0, 1.0}) < 1e-15);

  CHECK(map.forward(cplx{1.0, 0.0}).is_infinity);
}

TEST_CASE("forward maps the boundary to the real line as -cot") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 1000; ++trial) {
    const double theta = testutil::uniform(rng, -8.0, 8.0);
    const double tau = testutil::uniform(rng, 0.0, kTwoPi);
    if (angular_distance(tau, theta) < 1e-3) continue;
    CayleyMap map(theta);
    auto u = map.forward(std::polar(1.0, tau));
    REQUIRE(!u.is_infinity);
    CHECK(std::abs(u.value.imag()) < 1e-12);
    CHECK(u.value.real() ==
          doctest::Approx(map.boundary_value(tau)).epsilon(1e-10));
  }
}

TEST_CASE("forward commutes with inversion/conjugation symmetry") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    const double theta = testutil::uniform(rng, 0.0, kTwoPi);
    CayleyMap map(theta);
    const cplx z = testutil::random_in_disk(rng, 0.05, 0.95);
    const cplx a = map.forward(z).value;
    const cplx b = map.forward(circle_inversion(z)).value;
    CHECK(std::abs(b - std::conj(a)) < 1e-10);
  }
}

TEST_CASE("boundary parametrization is strictly increasing") {
  const double theta = 0.7;
  CayleyMap map(theta);
  double prev = -1e300;
  for (int i = 1; i < 400; ++i) {
    const double t = theta + kTwoPi * i / 400.0;
    const double v = map.boundary_value(t);
    CHECK(v > prev);
    prev = v;
  }
}

TEST_CASE("inverse: fixed values and pole") {
  CayleyMap map(0.0);
  CHECK(std::abs(map.inverse(cplx{0.0, 1.0})) < 1e-15);
  CHECK(std::abs(map.inverse(ExtendedComplex::infinity()) - cplx{1.0, 0.0}) <
        1e-15);
  CHECK_THROWS_AS(map.inverse(cplx{0.0, -1.0}), PoleError);
}

TEST_CASE("inverse round-trips forward") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 500; ++trial) {
    const double theta = testutil::uniform(rng, 0.0, kTwoPi);
    CayleyMap map(theta);
    const cplx z = testutil::random_in_disk(rng, 0.0, 0.97);
    const auto u = map.forward(z);
    REQUIRE(!u.is_infinity);
    CHECK(std::abs(map.inverse(u) - z) < 1e-12);
  }
}

TEST_CASE("pushforward: preserves weights, maps atoms") {
  CayleyMap map(0.0);
  SignedAtomicMeasure mu({{cplx{-1.0, 0.0}, 0.5}});
  auto nu = pushforward_measure(map, mu);
  REQUIRE(nu.atoms().size() == 1);
  CHECK(std::abs(nu.atoms()[0].location) < 1e-14);
  CHECK(nu.atoms()[0].weight == 0.5);

  CHECK(pushforward_measure(map, SignedAtomicMeasure()).empty());

  SignedAtomicMeasure at_pole({{cplx{1.0, 0.0}, 1.0}});
  CHECK_THROWS_AS(pushforward_measure(map, at_pole), AtomAtInfinity);
}

TEST_CASE("pushforward: inversion symmetry becomes conjugation symmetry") {
  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 50; ++trial) {
    const double theta = testutil::uniform(rng, 0.0, kTwoPi);
    CayleyMap map(theta);
    auto protons = testutil::random_protons(rng, 3);
    auto mu = SignedAtomicMeasure::from_protons(protons);
    REQUIRE(mu.is_inversion_symmetric());
    auto nu = pushforward_measure(map, mu);
    CHECK(nu.is_conjugation_symmetric());
  }
}

TEST_CASE("energy shift constant: hand values") {
  CHECK(energy_shift_constant(SignedAtomicMeasure(), 1) == 0.0);

  SignedAtomicMeasure nu({{cplx{1.0, 1.0}, 0.5}, {cplx{1.0, -1.0}, 0.5}});
  const double expect =
      2.0 * std::log(2.0) - 2.0 * std::log(std::sqrt(5.0));
  CHECK(energy_shift_constant(nu, 2) == doctest::Approx(expect).epsilon(1e-14));

  SignedAtomicMeasure bad({{cplx{0.0, -1.0}, 1.0}});
  CHECK_THROWS_AS(energy_shift_constant(bad, 2), InfiniteConstant);

  SignedAtomicMeasure wrong_mass({{cplx{1.0, 1.0}, 0.25}});
  CHECK_THROWS_AS(energy_shift_constant(wrong_mass, 2), ValidationError);
}

TEST_CASE("energy shift constant: general formula equals discrete form") {
  std::mt19937_64 rng(45);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + int(rng() % 6);
    auto protons = testutil::random_protons(rng, n - 1);
    const double theta = testutil::uniform(rng, 0.0, kTwoPi);
    CayleyMap map(theta);
    auto nu = pushforward_measure(map, SignedAtomicMeasure::from_protons(protons));
    const double general = energy_shift_constant(nu, n);

    double sum = 0.0;
    for (cplx zeta : protons.inner()) {
      const cplx xi = map.forward(zeta).value;
      sum += std::log(std::abs((xi + cplx{0.0, 1.0}) *
                               (std::conj(xi) + cplx{0.0, 1.0})));
    }
    const double discrete = n * (n - 1) * std::log(2.0) - n * sum;
    CHECK(std::abs(general - discrete) < 1e-12);
  }
}
