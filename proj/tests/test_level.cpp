#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "beq/errors.hpp"
#include "beq/level.hpp"
#include "testutil.hpp"

using namespace beq;

namespace {

const std::vector<cplx> kFigure2Zeros{
    cplx{0.5, 0.0}, cplx{0.5, 0.5}, cplx{0.0, 2.0 / 3.0},
    cplx{0.0, -0.75}, cplx{-0.7, 0.6}};

double level_residual(const BlaschkeProduct& b, const CircleConfiguration& c,
                      double delta) {
  double worst = 0.0;
  const cplx target = std::polar(1.0, delta);
  for (double t : c.angles())
    worst = std::max(worst,
                     std::abs(b.evaluate(std::polar(1.0, t)) - target));
  return worst;
}

}  // namespace

TEST_CASE("solve_level: power map gives roots of unity") {
  const int n = 5;
  BlaschkeProduct b(std::vector<cplx>(n, cplx{0.0, 0.0}));
  auto c = solve_level(b, 0.0);
  REQUIRE(c.size() == n);
  for (int j = 0; j < n; ++j)
    CHECK(c[j] == doctest::Approx(kTwoPi * j / n).epsilon(1e-12));
}

TEST_CASE("solve_level: figure-2 electron arguments") {
  BlaschkeProduct b(kFigure2Zeros);
  auto c = solve_level(b, 0.0);
  REQUIRE(c.size() == 5);
  std::vector<double> disp = c.display_angles();
  std::sort(disp.begin(), disp.end());
  const std::vector<double> expect{-2.87, -1.19, 0.41, 1.28, 2.33};
  for (std::size_t j = 0; j < 5; ++j)
    CHECK(std::round(disp[j] * 100.0) / 100.0 ==
          doctest::Approx(expect[j]).epsilon(1e-12));
  CHECK(level_residual(b, c, 0.0) < 1e-10);
}

TEST_CASE("solve_level: delta = alpha contains tau = 0") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    auto b = testutil::random_blaschke(rng, 1 + int(rng() % 6), 0.9, false);
    const double alpha = LiftedArgument(b).alpha();
    auto c = solve_level(b, alpha);
    double nearest = 1e300;
    for (double t : c.angles())
      nearest = std::min(nearest, std::min(t, kTwoPi - t));
    CHECK(nearest < 1e-10);
  }
}

TEST_CASE("solve_level: completeness and residuals on random products") {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + int(rng() % 8);
    auto b = testutil::random_blaschke(rng, n, 0.9, false);
    const double delta = testutil::uniform(rng, -10.0, 10.0);
    auto c = solve_level(b, delta);
    REQUIRE(c.size() == n);
    for (int j = 0; j + 1 < n; ++j)
      CHECK(c[j + 1] - c[j] > 1e-6);
    CHECK(level_residual(b, c, delta) < 1e-10);
  }
}

TEST_CASE("trace_curve: identity product") {
  BlaschkeProduct b({cplx{0.0, 0.0}});
  auto curve = trace_curve(b, 8);
  REQUIRE(curve.samples().size() == 8);
  for (const auto& s : curve.samples())
    CHECK(s.configuration[0] == doctest::Approx(s.delta).epsilon(1e-12));
}

TEST_CASE("trace_curve: ordering, monotone branches, closure") {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 8; ++trial) {
    const int n = 2 + int(rng() % 4);
    auto b = testutil::random_blaschke(rng, n, 0.85);
    const int spb = 32;
    auto curve = trace_curve(b, spb);
    const auto& samples = curve.samples();
    REQUIRE(int(samples.size()) == n * spb);

    for (const auto& s : samples) {
      const auto& tau = s.configuration.angles();
      for (int j = 0; j + 1 < n; ++j) CHECK(tau[std::size_t(j)] < tau[std::size_t(j + 1)]);
      CHECK(tau[std::size_t(n - 1)] < tau[0] + kTwoPi);
      CHECK(level_residual(b, s.configuration, s.delta) < 1e-10);
    }
    for (std::size_t i = 0; i + 1 < samples.size(); ++i)
      for (int j = 0; j < n; ++j)
        CHECK(samples[i + 1].configuration[j] > samples[i].configuration[j]);

    // tau_j(alpha) anchors the labeling
    CHECK(std::abs(samples[0].configuration[0]) < 1e-10);

    // closing the sweep shifts every branch by exactly 2*pi
    const LiftedArgument phi(b);
    const auto& first = samples[0];
    for (int j = 0; j < n; ++j) {
      const double tau_end = phi.inverse(first.delta + kTwoPi * n + kTwoPi * j);
      CHECK(tau_end ==
            doctest::Approx(first.configuration[j] + kTwoPi).epsilon(1e-10));
    }

    // S_0 is the first branch's worth of samples
    CHECK(int(curve.s0().size()) == spb);
  }
}

TEST_CASE("trace_curve rejects non-monic products") {
  BlaschkeProduct b({cplx{0.3, 0.0}}, cplx{0.0, 1.0});
  CHECK_THROWS_AS(trace_curve(b, 4), ValidationError);
}

TEST_CASE("point_on_curve: identity and first-coordinate anchor") {
  BlaschkeProduct id({cplx{0.0, 0.0}});
  auto [delta, config] = point_on_curve(id, 1.0);
  CHECK(delta == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(config[0] == doctest::Approx(1.0).epsilon(1e-12));

  BlaschkeProduct fig1({cplx{0.5, 0.0}, cplx{0.5, 0.5}});
  auto [d2, c2] = point_on_curve(fig1, 0.0);
  CHECK(d2 == doctest::Approx(-kPi / 2).epsilon(1e-10));
}

TEST_CASE("point_on_curve round-trips through solve_level") {
  std::mt19937_64 rng(34);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + int(rng() % 6);
    auto b = testutil::random_blaschke(rng, n, 0.9);
    const double beta = testutil::uniform(rng, 0.0, kTwoPi);
    auto [delta, config] = point_on_curve(b, beta);
    CHECK(std::abs(config[0] - beta) < 1e-10);
    const double alpha = LiftedArgument(b).alpha();
    CHECK(delta >= alpha);
    CHECK(delta < alpha + kTwoPi * n);

    auto solved = solve_level(b, delta);
    double nearest = 1e300;
    for (double t : solved.angles())
      nearest = std::min(nearest, angular_distance(t, beta));
    CHECK(nearest < 1e-10);
  }
}

TEST_CASE("consistency: point_on_curve reproduces traced samples") {
  std::mt19937_64 rng(35);
  auto b = testutil::random_blaschke(rng, 3, 0.8);
  auto curve = trace_curve(b, 16);
  for (std::size_t i = 0; i < curve.samples().size(); i += 7) {
    const auto& s = curve.samples()[i];
    const double beta = wrap_two_pi(s.configuration[0]);
    auto [delta, config] = point_on_curve(b, beta);
    CHECK(std::abs(delta - s.delta) < 1e-9);
  }
}
