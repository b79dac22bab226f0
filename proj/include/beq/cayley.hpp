#pragma once

#include "beq/measure.hpp"
#include "beq/types.hpp"

namespace beq {

/// Inverse Cayley transform C_theta(z) = i (1 + z e^{-i theta})/(1 - z e^{-i theta}).
/// Maps the disk onto the upper half-plane and e^{i theta} to infinity; the
/// boundary goes to the real axis, t = -cot((tau - theta)/2).
class CayleyMap {
 public:
  explicit CayleyMap(double theta);

  double theta() const { return theta_; }
  cplx pole() const { return std::polar(1.0, theta_); }

  /// C_theta(z). Returns the infinity value when z is within 1e-14 of
  /// e^{i theta}.
  ExtendedComplex forward(cplx z) const;

  /// Real boundary value C_theta(e^{i tau}) = -cot((tau - theta)/2).
  double boundary_value(double tau) const;

  /// d/dtau C_theta(e^{i tau}) = 1/(2 sin^2((tau - theta)/2)).
  double boundary_derivative(double tau) const;

  /// C_theta^{-1}(u) = e^{i theta} (u - i)/(u + i); infinity maps to
  /// e^{i theta}. Throws PoleError at u = -i.
  cplx inverse(ExtendedComplex u) const;
  cplx inverse(cplx u) const { return inverse(ExtendedComplex::finite(u)); }

 private:
  double theta_;
};

/// Pushforward nu = mu o C_theta^{-1}: atoms map by forward, weights are
/// preserved. Throws AtomAtInfinity if an atom is within 1e-10 of e^{i theta}.
SignedAtomicMeasure pushforward_measure(const CayleyMap& map,
                                        const SignedAtomicMeasure& mu);

/// The additive constant c = n(n-1) log 2 - 2n sum w_k log|xi_k + i| of the
/// circle-line energy identity. Requires total weight n-1; throws
/// InfiniteConstant if an atom sits within 1e-12 of -i.
double energy_shift_constant(const SignedAtomicMeasure& nu, int n);

}  // namespace beq
