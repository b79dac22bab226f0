#pragma once

#include <vector>

#include "beq/types.hpp"

namespace beq {

/// Finite Blaschke product chi * prod (z - a_k)/(1 - conj(a_k) z) with all
/// zeros in the open unit disk and |chi| = 1. Immutable after construction.
class BlaschkeProduct {
 public:
  /// Validates: n >= 1, |a_k| < 1 - 1e-12, ||chi| - 1| <= 1e-14.
  explicit BlaschkeProduct(std::vector<cplx> zeros,
                           cplx leading_coefficient = cplx{1.0, 0.0});

  int degree() const { return int(zeros_.size()); }
  const std::vector<cplx>& zeros() const { return zeros_; }
  cplx leading_coefficient() const { return chi_; }
  bool is_monic(double tol = 1e-12) const {
    return std::abs(chi_ - cplx{1.0, 0.0}) <= tol;
  }

  /// Monic product with the same zeros (B_1 = chi^{-1} B).
  BlaschkeProduct monic() const;

  /// Product value. Throws PoleProximityError when |1 - conj(a_k) z|
  /// underflows.
  cplx evaluate(cplx z) const;

  /// B'(z) by the quotient rule on P = chi prod(z - a_k),
  /// Q = prod(1 - conj(a_k) z).
  cplx derivative(cplx z) const;

  /// B''(z), used to polish critical points by Newton on B'.
  cplx second_derivative(cplx z) const;

 private:
  std::vector<cplx> zeros_;
  cplx chi_;
};

/// Continuous, strictly increasing branch of Im log B(e^{it}) with
/// Phi(0) = alpha = arg B(1) in [-pi, pi). Increases by 2*pi*n per
/// revolution. Each factor contributes 2 Arg(1 - a_k e^{-it}) + t, where the
/// principal branch never wraps because 1 - a_k e^{-it} stays in the right
/// half-plane.
class LiftedArgument {
 public:
  explicit LiftedArgument(const BlaschkeProduct& b);

  double alpha() const { return alpha_; }
  int degree() const { return int(zeros_.size()); }

  /// Phi(t), defined for all real t.
  double operator()(double t) const;

  /// Phi'(t) = sum_k (1 - |a_k|^2)/|e^{it} - a_k|^2 = |B'(e^{it})|.
  double derivative(double t) const;

  /// The unique t with Phi(t) = target (bisection plus safeguarded Newton).
  double inverse(double target) const;

 private:
  std::vector<cplx> zeros_;
  double chi_arg_;
  double alpha_;
  double offset_;
};

/// Roots of the numerator polynomial of B' (P'Q - PQ', degree 2n-2),
/// partitioned by modulus and paired by circle inversion:
/// outside[k] = 1/conj(inside[k]).
struct CriticalPointSet {
  std::vector<cplx> inside;
  std::vector<cplx> outside;
  std::vector<double> residuals;  // |B'(root)| over inside then outside
  bool degenerate_at_origin = false;
};

/// All 2n-2 critical points of B. Throws DegenerateOrigin if |B'(0)| < 1e-10,
/// ClassificationError if a root cannot be separated from the unit circle,
/// RootFindFailure if the solver stalls. n = 1 yields the empty set.
CriticalPointSet critical_points(const BlaschkeProduct& b);

}  // namespace beq
