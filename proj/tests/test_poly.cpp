#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "beq/poly.hpp"
#include "testutil.hpp"

using namespace beq;

TEST_CASE("horner evaluation and derivative") {
  // p(z) = 1 + 2z + 3z^2
  std::vector<cplx> p{cplx{1, 0}, cplx{2, 0}, cplx{3, 0}};
  cplx v, d;
  poly::eval_with_derivative(p, cplx{2.0, 0.0}, v, d);
  CHECK(std::abs(v - cplx{17.0, 0.0}) < 1e-14);
  CHECK(std::abs(d - cplx{14.0, 0.0}) < 1e-14);
}

TEST_CASE("from_roots expands the monic polynomial") {
  std::vector<cplx> roots{cplx{1, 0}, cplx{-2, 0}, cplx{0, 1}};
  auto c = poly::from_roots(roots);
  REQUIRE(c.size() == 4);
  CHECK(std::abs(c[3] - cplx{1, 0}) < 1e-15);
  for (cplx r : roots) CHECK(std::abs(poly::eval(c, r)) < 1e-13);
}

TEST_CASE("conjugate reversal matches prod(1 - conj(a) z)") {
  std::vector<cplx> roots{cplx{0.3, 0.2}, cplx{-0.5, 0.1}};
  auto p = poly::from_roots(roots);
  auto q = poly::conjugate_reversal(p, 2);
  std::vector<cplx> expect{cplx{1, 0}};
  for (cplx a : roots)
    expect = poly::multiply(expect, {cplx{1, 0}, -std::conj(a)});
  REQUIRE(q.size() == expect.size());
  for (std::size_t i = 0; i < q.size(); ++i)
    CHECK(std::abs(q[i] - expect[i]) < 1e-15);
}

TEST_CASE("aberth recovers random roots") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    int deg = 2 + int(rng() % 9);
    std::vector<cplx> roots(std::size_t(deg));
    bool ok = true;
    for (cplx& r : roots) r = testutil::random_in_disk(rng, 0.05, 2.0);
    for (std::size_t i = 0; i < roots.size() && ok; ++i)
      for (std::size_t j = i + 1; j < roots.size(); ++j)
        if (std::abs(roots[i] - roots[j]) < 1e-2) ok = false;
    if (!ok) continue;

    auto c = poly::from_roots(roots);
    auto found = poly::aberth_roots(c);
    REQUIRE(found.size() == roots.size());
    for (cplx r : roots) {
      double best = 1e9;
      for (cplx f : found) best = std::min(best, std::abs(f - r));
      CHECK(best < 1e-9);
    }
  }
}

TEST_CASE("aberth handles a double root") {
  std::vector<cplx> roots{cplx{0.5, 0.0}, cplx{0.5, 0.0}, cplx{-0.3, 0.4}};
  auto c = poly::from_roots(roots);
  auto found = poly::aberth_roots(c);
  REQUIRE(found.size() == 3);
  int near_half = 0;
  for (cplx f : found)
    if (std::abs(f - cplx{0.5, 0.0}) < 1e-6) ++near_half;
  CHECK(near_half == 2);
}

TEST_CASE("trim_leading drops cancelled leading coefficients") {
  std::vector<cplx> c{cplx{1, 0}, cplx{2, 0}, cplx{1e-18, 0}};
  auto t = poly::trim_leading(c);
  CHECK(t.size() == 2);
}
