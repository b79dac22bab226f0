#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "beq/blaschke.hpp"
#include "beq/errors.hpp"
#include "beq/measure.hpp"
#include "beq/types.hpp"

namespace beq::testutil {

inline double uniform01(std::mt19937_64& rng) {
  return double(rng() >> 11) * 0x1.0p-53;
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform01(rng);
}

inline cplx random_in_disk(std::mt19937_64& rng, double rmin, double rmax) {
  return std::polar(uniform(rng, rmin, rmax), uniform(rng, 0.0, kTwoPi));
}

/// Random product with zeros of modulus <= max_mod, rejecting B'(0) ~ 0.
inline BlaschkeProduct random_blaschke(std::mt19937_64& rng, int n,
                                       double max_mod = 0.9,
                                       bool monic = true) {
  for (;;) {
    std::vector<cplx> zeros(std::size_t(n));
    for (cplx& a : zeros) a = random_in_disk(rng, 0.0, max_mod);
    cplx chi = monic ? cplx{1.0, 0.0} : std::polar(1.0, uniform(rng, 0.0, kTwoPi));
    BlaschkeProduct b(zeros, chi);
    if (std::abs(b.derivative(cplx{0.0, 0.0})) > 1e-6) return b;
  }
}

/// Random proton system with moduli in [rmin, rmax] and pairwise gaps.
inline ProtonSystem random_protons(std::mt19937_64& rng, int count,
                                   double rmin = 0.1, double rmax = 0.85) {
  for (;;) {
    std::vector<cplx> zetas(std::size_t(count));
    for (cplx& z : zetas) z = random_in_disk(rng, rmin, rmax);
    bool ok = true;
    for (std::size_t i = 0; i < zetas.size(); ++i)
      for (std::size_t j = i + 1; j < zetas.size(); ++j)
        if (std::abs(zetas[i] - zetas[j]) < 1e-3) ok = false;
    if (ok) return ProtonSystem(zetas);
  }
}

/// Strictly ordered angles in [0, 2*pi) with pairwise gaps >= min_gap.
inline std::vector<double> random_ordered_angles(std::mt19937_64& rng, int n,
                                                 double min_gap = 1e-3) {
  for (;;) {
    std::vector<double> t(std::size_t(n));
    for (double& x : t) x = uniform(rng, 0.0, kTwoPi);
    std::sort(t.begin(), t.end());
    bool ok = true;
    for (int j = 0; j + 1 < n; ++j)
      if (t[std::size_t(j + 1)] - t[std::size_t(j)] < min_gap) ok = false;
    if (n > 1 && t[0] + kTwoPi - t[std::size_t(n - 1)] < min_gap) ok = false;
    if (ok) return t;
  }
}

}  // namespace beq::testutil
