#include "beq/level.hpp"

#include <algorithm>
#include <cmath>

#include "beq/errors.hpp"

namespace beq {

CircleConfiguration::CircleConfiguration(std::vector<double> angles)
    : angles_(std::move(angles)) {
  if (angles_.empty())
    throw ValidationError("CircleConfiguration: empty angle list");
  for (double t : angles_)
    if (!std::isfinite(t))
      throw ValidationError("CircleConfiguration: non-finite angle");
  for (std::size_t j = 0; j + 1 < angles_.size(); ++j)
    if (!(angles_[j] < angles_[j + 1]))
      throw ValidationError("CircleConfiguration: angles not strictly ordered");
  if (angles_.size() > 1 && !(angles_.back() < angles_.front() + kTwoPi))
    throw ValidationError(
        "CircleConfiguration: angles span 2*pi or more");
}

std::vector<cplx> CircleConfiguration::points() const {
  std::vector<cplx> w(angles_.size());
  for (std::size_t j = 0; j < angles_.size(); ++j)
    w[j] = std::polar(1.0, angles_[j]);
  return w;
}

std::vector<double> CircleConfiguration::display_angles() const {
  std::vector<double> d(angles_.size());
  for (std::size_t j = 0; j < angles_.size(); ++j) d[j] = wrap_pm_pi(angles_[j]);
  return d;
}

SolutionCurve::SolutionCurve(BlaschkeProduct blaschke, double alpha,
                             std::vector<CurveSample> samples,
                             int samples_per_branch)
    : blaschke_(std::move(blaschke)),
      alpha_(alpha),
      samples_(std::move(samples)),
      samples_per_branch_(samples_per_branch) {}

std::vector<CurveSample> SolutionCurve::s0() const {
  std::vector<CurveSample> out;
  for (const CurveSample& s : samples_)
    if (s.delta < alpha_ + kTwoPi) out.push_back(s);
  return out;
}

CircleConfiguration solve_level(const BlaschkeProduct& b, double delta) {
  const LiftedArgument phi(b);
  const int n = b.degree();
  const double alpha = phi.alpha();

  // the n integers m with delta + 2*pi*m in [alpha, alpha + 2*pi*n)
  const long m0 = long(std::ceil((alpha - delta) / kTwoPi - 1e-12));
  std::vector<double> roots;
  roots.reserve(n);
  for (long m = m0; int(roots.size()) < n; ++m) {
    double target = delta + kTwoPi * double(m);
    if (target < alpha) continue;
    roots.push_back(phi.inverse(target));
  }
  std::sort(roots.begin(), roots.end());
  return CircleConfiguration(roots);
}

SolutionCurve trace_curve(const BlaschkeProduct& b, int samples_per_branch) {
  if (!b.is_monic())
    throw ValidationError("trace_curve: product must be monic");
  if (samples_per_branch < 2)
    throw ValidationError("trace_curve: samples_per_branch must be >= 2");

  const LiftedArgument phi(b);
  const int n = b.degree();
  const double alpha = phi.alpha();
  const int total = n * samples_per_branch;
  const double step = kTwoPi * n / double(total);

  std::vector<CurveSample> samples;
  samples.reserve(total);
  for (int i = 0; i < total; ++i) {
    const double delta = alpha + step * double(i);
    std::vector<double> taus(n);
    for (int j = 0; j < n; ++j)
      taus[std::size_t(j)] = phi.inverse(delta + kTwoPi * double(j));
    samples.push_back({delta, CircleConfiguration(std::move(taus))});
  }
  return SolutionCurve(b, alpha, std::move(samples), samples_per_branch);
}

std::pair<double, CircleConfiguration> point_on_curve(const BlaschkeProduct& b,
                                                      double beta) {
  if (!b.is_monic())
    throw ValidationError("point_on_curve: product must be monic");
  if (beta < 0.0 || beta >= kTwoPi)
    throw ValidationError("point_on_curve: beta must lie in [0, 2*pi)");
  const LiftedArgument phi(b);
  const int n = b.degree();
  const double delta = phi(beta);  // tau_1(delta) = beta
  std::vector<double> taus(n);
  taus[0] = beta;
  for (int j = 1; j < n; ++j)
    taus[std::size_t(j)] = phi.inverse(delta + kTwoPi * double(j));
  return {delta, CircleConfiguration(std::move(taus))};
}

}  // namespace beq
