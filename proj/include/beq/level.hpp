#pragma once

#include <vector>

#include "beq/blaschke.hpp"
#include "beq/types.hpp"

namespace beq {

/// n electron angles with tau_1 < tau_2 < ... < tau_n < tau_1 + 2*pi.
class CircleConfiguration {
 public:
  explicit CircleConfiguration(std::vector<double> angles);

  int size() const { return int(angles_.size()); }
  const std::vector<double>& angles() const { return angles_; }
  double operator[](int j) const { return angles_[std::size_t(j)]; }

  std::vector<cplx> points() const;

  /// Angles wrapped to (-pi, pi] for display.
  std::vector<double> display_angles() const;

 private:
  std::vector<double> angles_;
};

/// One traced sample of the solution curve.
struct CurveSample {
  double delta;
  CircleConfiguration configuration;
};

/// The solution curve {T(delta) : delta in [alpha, alpha + 2*n*pi)} of a
/// monic Blaschke product, sampled uniformly in delta. Branch j carries
/// tau_j(delta) = Phi^{-1}(delta + 2*pi*(j-1)), which fixes the labeling
/// tau_1(alpha) = 0 and keeps every branch strictly increasing.
class SolutionCurve {
 public:
  SolutionCurve(BlaschkeProduct blaschke, double alpha,
                std::vector<CurveSample> samples, int samples_per_branch);

  const BlaschkeProduct& blaschke() const { return blaschke_; }
  double alpha() const { return alpha_; }
  const std::vector<CurveSample>& samples() const { return samples_; }

  /// The restriction to delta in [alpha, alpha + 2*pi) (the set S_0).
  std::vector<CurveSample> s0() const;

 private:
  BlaschkeProduct blaschke_;
  double alpha_;
  std::vector<CurveSample> samples_;
  int samples_per_branch_;
};

/// The n solutions of B(e^{it}) = e^{i delta} in [0, 2*pi), sorted ascending.
/// Obtained by inverting the lifted argument at the n targets
/// delta + 2*pi*m inside [alpha, alpha + 2*pi*n).
CircleConfiguration solve_level(const BlaschkeProduct& b, double delta);

/// Uniformly sample the solution curve with n * samples_per_branch samples.
/// Requires a monic product and samples_per_branch >= 2.
SolutionCurve trace_curve(const BlaschkeProduct& b, int samples_per_branch);

/// The unique delta in [alpha, alpha + 2*n*pi) with tau_1(delta) = beta,
/// together with the full configuration. beta must lie in [0, 2*pi).
std::pair<double, CircleConfiguration> point_on_curve(const BlaschkeProduct& b,
                                                      double beta);

}  // namespace beq
