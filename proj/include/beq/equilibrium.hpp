#pragma once

#include <cstdint>
#include <vector>

#include "beq/blaschke.hpp"
#include "beq/energy.hpp"
#include "beq/level.hpp"
#include "beq/measure.hpp"

namespace beq {

/// Packaged criticality and minimality checks for one curve point.
struct EquilibriumVerdict {
  double gradient_norm = 0.0;
  double energy_value = 0.0;
  bool is_critical = false;
  struct MinimalityEvidence {
    double hessian_min_eigenvalue = 0.0;
    int hessian_near_zero_count = 0;  // eigenvalues with |lambda| < 1e-5
    int num_random_probes = 0;
    double min_probe_energy_excess = 0.0;
  } minimality_evidence;
};

struct VerifyOptions {
  int probes = 200;
  std::uint64_t seed = 42;
};

/// Solve the level equation at delta, take the critical points of B as the
/// proton field and check criticality (tangential gradient), the Hessian
/// spectrum, and random energy probes against the curve energy.
EquilibriumVerdict verify_on_curve(const BlaschkeProduct& b, double delta,
                                   double tolerance,
                                   const VerifyOptions& options = {});

/// Spread (max - min) of the restricted energy across traced curve samples.
double curve_energy_constancy(const BlaschkeProduct& b, int samples_per_branch);

/// Both sides of the chain-rule correspondence for coordinate j (1-based,
/// j >= 2): lhs is the tangential gradient component of the circle energy,
/// rhs is the line-energy gradient at the Cayley image (theta = tau_1) times
/// 1/(2 sin^2((tau_j - theta)/2)).
struct ChainRuleSides {
  double lhs;
  double rhs;
};
ChainRuleSides chain_rule_check(const BlaschkeProduct& b,
                                const CircleConfiguration& config, int j);
ChainRuleSides chain_rule_check(const BlaschkeProduct& b, double delta, int j);

/// Result of the boundary interpolation problem B(z_j) = 1.
struct InterpolationResult {
  BlaschkeProduct blaschke;
  std::vector<double> residuals;  // |B(z_j) - 1|
  ProtonSystem protons;           // inside critical points of the product
  cplx chi_used;
  double delta_0;  // chi = e^{i delta_0} with -delta_0 in [alpha, alpha+2*pi)
};

/// Degree-n Blaschke product with B(z_j) = 1 at the given unimodular points.
/// Built from the terminating orthogonal-polynomial recursion on the discrete
/// measure supported at the points; candidate weight patterns are tried and
/// the admissible product maximizing |B'(0)| is returned, polished by a
/// Gauss-Newton pass on the boundary-argument residuals when needed.
/// Throws NoAdmissibleChi when no pattern yields zeros inside the disk and
/// DegenerateOutput when every admissible candidate has B'(0) = 0.
InterpolationResult inverse_interpolate(const std::vector<cplx>& points);

struct PipelineResult {
  InterpolationResult interpolation;
  EquilibriumVerdict verdict;
  double curve_mismatch;  // max angular deviation of T(-delta_0) from inputs
};

/// Full reverse problem: interpolate, normalize to the monic product, place
/// the inputs on its solution curve at delta = -delta_0, and verify
/// criticality and minimality there.
PipelineResult reverse_problem_pipeline(const std::vector<cplx>& points,
                                        double tolerance = 1e-8,
                                        const VerifyOptions& options = {});

}  // namespace beq
