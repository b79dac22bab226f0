#pragma once

#include <cmath>
#include <complex>
#include <limits>

namespace beq {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

// Zeros must stay this far from the unit circle so poles stay off the closed disk.
inline constexpr double kBoundaryMargin = 1e-12;

// Distance below which two points count as a collision in the exceptional sets.
inline constexpr double kCollisionTol = 1e-12;

/// Wrap an angle to [-pi, pi).
inline double wrap_pm_pi(double t) {
  double w = std::remainder(t, kTwoPi);
  if (w >= kPi) w -= kTwoPi;
  if (w < -kPi) w += kTwoPi;
  return w;
}

/// Wrap an angle to [0, 2*pi).
inline double wrap_two_pi(double t) {
  double w = std::fmod(t, kTwoPi);
  if (w < 0) w += kTwoPi;
  return w;
}

/// Shortest angular distance between two angles.
inline double angular_distance(double a, double b) {
  return std::abs(wrap_pm_pi(a - b));
}

/// Circle inversion z* = 1/conj(z).
inline cplx circle_inversion(cplx z) { return 1.0 / std::conj(z); }

/// A point of the extended complex plane. Infinity is a value, not an error:
/// the Cayley transform sends one boundary point there and the line energies
/// are defined with an electron at infinity.
struct ExtendedComplex {
  cplx value{0.0, 0.0};
  bool is_infinity = false;

  static ExtendedComplex infinity() { return {cplx{0.0, 0.0}, true}; }
  static ExtendedComplex finite(cplx z) { return {z, false}; }
};

}  // namespace beq
