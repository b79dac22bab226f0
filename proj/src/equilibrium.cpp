#include "beq/equilibrium.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <Eigen/Dense>

#include "beq/cayley.hpp"
#include "beq/errors.hpp"
#include "beq/poly.hpp"

namespace beq {

namespace {

double uniform01(std::mt19937_64& rng) {
  return double(rng() >> 11) * 0x1.0p-53;
}

double l2_norm(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

// --- interpolation internals -------------------------------------------

struct SzegoCandidate {
  std::vector<cplx> zeros;
  cplx chi;
  double db0;  // |B'(0)|
};

// Terminating Szego recursion on the n-atom measure sum w_j delta_{z_j}.
// The monic orthogonal polynomials keep their roots in the open disk while
// the recursion coefficients stay below one in modulus; the final
// coefficient is unimodular and supplies the leading coefficient.
SzegoCandidate szego_candidate(const std::vector<cplx>& zpts,
                               const std::vector<double>& weights) {
  const int n = int(zpts.size());
  std::vector<cplx> phi{cplx{1.0, 0.0}};
  cplx last{0.0, 0.0};
  for (int k = 0; k < n; ++k) {
    std::vector<cplx> phistar(phi.size());
    for (std::size_t i = 0; i < phi.size(); ++i)
      phistar[i] = std::conj(phi[phi.size() - 1 - i]);
    std::vector<cplx> zphi(phi.size() + 1, cplx{0.0, 0.0});
    std::copy(phi.begin(), phi.end(), zphi.begin() + 1);

    cplx num{0.0, 0.0}, den{0.0, 0.0};
    for (int j = 0; j < n; ++j) {
      num += weights[std::size_t(j)] * poly::eval(zphi, zpts[std::size_t(j)]);
      den += weights[std::size_t(j)] * poly::eval(phistar, zpts[std::size_t(j)]);
    }
    if (std::abs(den) < 1e-300)
      throw NoAdmissibleChi("inverse_interpolate: recursion broke down");
    const cplx ca = num / den;  // conj(alpha_k)

    if (k == n - 1) {
      if (std::abs(std::abs(ca) - 1.0) > 1e-6)
        throw NoAdmissibleChi(
            "inverse_interpolate: final recursion coefficient not unimodular");
      last = std::conj(ca) / std::abs(ca);
      break;
    }
    if (std::abs(ca) >= 1.0 - 1e-12)
      throw NoAdmissibleChi(
          "inverse_interpolate: recursion coefficient reached the circle");
    phistar.push_back(cplx{0.0, 0.0});
    for (std::size_t i = 0; i < zphi.size(); ++i) zphi[i] -= ca * phistar[i];
    phi = std::move(zphi);
  }

  SzegoCandidate cand;
  cand.zeros.push_back(cplx{0.0, 0.0});
  if (phi.size() > 1) {
    std::vector<cplx> roots = poly::aberth_roots(phi, 0.7);
    cand.zeros.insert(cand.zeros.end(), roots.begin(), roots.end());
  }
  cand.chi = last;
  cand.db0 = std::abs(poly::eval(phi, cplx{0.0, 0.0}));  // |B'(0)| = |phi(0)|
  return cand;
}

double max_residual(const BlaschkeProduct& b, const std::vector<cplx>& zpts) {
  double r = 0.0;
  for (cplx z : zpts) r = std::max(r, std::abs(b.evaluate(z) - cplx{1.0, 0.0}));
  return r;
}

// Min-norm Gauss-Newton on the boundary-argument residuals
// r_j = Arg B(z_j) over the zeros and the leading phase.
void polish_candidate(SzegoCandidate& cand, const std::vector<double>& args,
                      const std::vector<cplx>& zpts) {
  const int n = int(zpts.size());
  double phase = std::arg(cand.chi);
  for (int pass = 0; pass < 8; ++pass) {
    BlaschkeProduct b(cand.zeros, std::polar(1.0, phase));
    double worst = max_residual(b, zpts);
    if (worst < 1e-12) break;

    Eigen::VectorXd r(n);
    Eigen::MatrixXd jac(n, 2 * n + 1);
    for (int j = 0; j < n; ++j) {
      r(j) = wrap_pm_pi(std::arg(b.evaluate(zpts[std::size_t(j)])));
      const cplx u = std::polar(1.0, -args[std::size_t(j)]);
      jac(j, 2 * n) = 1.0;  // d/dphase
      for (int k = 0; k < n; ++k) {
        const cplx g = u / (1.0 - cand.zeros[std::size_t(k)] * u);
        jac(j, 2 * k) = -2.0 * g.imag();
        jac(j, 2 * k + 1) = -2.0 * g.real();
      }
    }
    Eigen::VectorXd step =
        jac.completeOrthogonalDecomposition().solve(-r);
    for (int k = 0; k < n; ++k) {
      cplx z = cand.zeros[std::size_t(k)] + cplx{step(2 * k), step(2 * k + 1)};
      if (std::abs(z) > 1.0 - 1e-10)
        z *= (1.0 - 1e-10) / std::abs(z);
      cand.zeros[std::size_t(k)] = z;
    }
    phase += step(2 * n);
  }
  cand.chi = std::polar(1.0, phase);
}

std::vector<std::vector<double>> weight_patterns(
    const std::vector<double>& args) {
  const int n = int(args.size());
  std::vector<std::vector<double>> patterns;
  patterns.emplace_back(std::size_t(n), 1.0 / n);  // equal

  // half-gap (arc Voronoi) weights
  std::vector<double> gaps(std::size_t(n));
  for (int j = 0; j < n; ++j) {
    const double next = (j + 1 < n) ? args[std::size_t(j + 1)]
                                    : args[0] + kTwoPi;
    gaps[std::size_t(j)] = next - args[std::size_t(j)];
  }
  std::vector<double> voronoi(std::size_t(n));
  double total = 0.0;
  for (int j = 0; j < n; ++j) {
    const double prev = gaps[std::size_t((j + n - 1) % n)];
    voronoi[std::size_t(j)] = 0.5 * (prev + gaps[std::size_t(j)]);
    total += voronoi[std::size_t(j)];
  }
  for (double& w : voronoi) w /= total;
  patterns.push_back(std::move(voronoi));

  // deterministic tilted patterns, in case both above degenerate B'(0)
  for (double tilt : {0.35, 0.65}) {
    std::vector<double> w(std::size_t(n));
    double s = 0.0;
    for (int j = 0; j < n; ++j) {
      w[std::size_t(j)] = 1.0 + tilt * std::cos(double(j + 1));
      s += w[std::size_t(j)];
    }
    for (double& x : w) x /= s;
    patterns.push_back(std::move(w));
  }
  return patterns;
}

}  // namespace

EquilibriumVerdict verify_on_curve(const BlaschkeProduct& b, double delta,
                                   double tolerance,
                                   const VerifyOptions& options) {
  const CriticalPointSet cps = critical_points(b);
  const ProtonSystem protons(cps.inside);
  const CircleConfiguration config = solve_level(b, delta);
  const int n = b.degree();

  EquilibriumVerdict verdict;
  verdict.gradient_norm = l2_norm(tangential_gradient(config, protons));
  verdict.energy_value = energy_W(config, protons);
  verdict.is_critical = verdict.gradient_norm < tolerance;

  const Eigen::MatrixXd hess = tangential_hessian(config, protons);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(hess);
  verdict.minimality_evidence.hessian_min_eigenvalue = eig.eigenvalues()(0);
  int near_zero = 0;
  for (int i = 0; i < n; ++i)
    if (std::abs(eig.eigenvalues()(i)) < 1e-5) ++near_zero;
  verdict.minimality_evidence.hessian_near_zero_count = near_zero;

  std::mt19937_64 rng(options.seed);
  double min_excess = std::numeric_limits<double>::infinity();
  int done = 0;
  while (done < options.probes) {
    std::vector<double> angles(std::size_t(n));
    for (double& t : angles) t = kTwoPi * uniform01(rng);
    std::sort(angles.begin(), angles.end());
    bool ok = true;
    for (int j = 0; j + 1 < n; ++j)
      if (angles[std::size_t(j + 1)] - angles[std::size_t(j)] < 1e-8) ok = false;
    if (n > 1 && angles[0] + kTwoPi - angles[std::size_t(n - 1)] < 1e-8)
      ok = false;
    if (!ok) continue;
    double probe;
    try {
      probe = energy_W_tilde(angles, protons);
    } catch (const ExceptionalConfigurationError&) {
      continue;  // resample
    }
    min_excess = std::min(min_excess, probe - verdict.energy_value);
    ++done;
  }
  verdict.minimality_evidence.num_random_probes = options.probes;
  verdict.minimality_evidence.min_probe_energy_excess =
      options.probes > 0 ? min_excess : 0.0;
  return verdict;
}

double curve_energy_constancy(const BlaschkeProduct& b,
                              int samples_per_branch) {
  const BlaschkeProduct monic = b.monic();
  const int n = monic.degree();
  if (n == 1) return 0.0;  // no protons, W identically zero on the circle
  const CriticalPointSet cps = critical_points(monic);
  const ProtonSystem protons(cps.inside);
  const SolutionCurve curve = trace_curve(monic, samples_per_branch);
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (const CurveSample& s : curve.samples()) {
    const double e = energy_W(s.configuration, protons);
    lo = std::min(lo, e);
    hi = std::max(hi, e);
  }
  return hi - lo;
}

ChainRuleSides chain_rule_check(const BlaschkeProduct& b,
                                const CircleConfiguration& config, int j) {
  const int n = config.size();
  if (j < 2 || j > n)
    throw ValidationError("chain_rule_check: j must lie in {2,...,n}");
  const CriticalPointSet cps = critical_points(b);
  const ProtonSystem protons(cps.inside);

  const double theta = config[0];
  const CayleyMap map(theta);
  std::vector<double> ts(std::size_t(n - 1));
  for (int i = 1; i < n; ++i)
    ts[std::size_t(i - 1)] = map.boundary_value(config[i]);
  std::vector<cplx> xis;
  xis.reserve(protons.inner().size());
  for (cplx zeta : protons.inner()) {
    const ExtendedComplex xi = map.forward(zeta);
    if (xi.is_infinity)
      throw DomainError("chain_rule_check: proton at the Cayley pole");
    xis.push_back(xi.value);
  }

  ChainRuleSides sides;
  sides.lhs = tangential_gradient(config, protons)[std::size_t(j - 1)];
  const std::vector<double> gv = gradient_V(ts, xis);
  sides.rhs = gv[std::size_t(j - 2)] * map.boundary_derivative(config[j - 1]);
  return sides;
}

ChainRuleSides chain_rule_check(const BlaschkeProduct& b, double delta, int j) {
  return chain_rule_check(b, solve_level(b, delta), j);
}

InterpolationResult inverse_interpolate(const std::vector<cplx>& points) {
  const int n = int(points.size());
  if (n < 1) throw ValidationError("inverse_interpolate: no points");
  std::vector<double> args(std::size_t(n));
  std::vector<cplx> zpts(std::size_t(n));
  for (int j = 0; j < n; ++j) {
    const cplx z = points[std::size_t(j)];
    if (std::abs(std::abs(z) - 1.0) > 1e-9)
      throw ValidationError("inverse_interpolate: point not unimodular");
    args[std::size_t(j)] = wrap_two_pi(std::arg(z));
  }
  std::sort(args.begin(), args.end());
  for (int j = 0; j < n; ++j) {
    const double next =
        (j + 1 < n) ? args[std::size_t(j + 1)] : args[0] + kTwoPi;
    if (n > 1 && next - args[std::size_t(j)] < 1e-6)
      throw ValidationError("inverse_interpolate: angular gap below 1e-6");
    zpts[std::size_t(j)] = std::polar(1.0, args[std::size_t(j)]);
  }

  bool any_admissible = false;
  SzegoCandidate best;
  bool have_best = false;
  for (const auto& weights : weight_patterns(args)) {
    SzegoCandidate cand;
    try {
      cand = szego_candidate(zpts, weights);
    } catch (const NoAdmissibleChi&) {
      continue;
    }
    bool inside = true;
    for (cplx z : cand.zeros)
      if (std::abs(z) >= 1.0 - kBoundaryMargin) inside = false;
    if (!inside) continue;
    any_admissible = true;
    if (cand.db0 < 1e-9) continue;  // B'(0) = 0: try the next pattern
    if (!have_best || cand.db0 > best.db0) {
      best = cand;
      have_best = true;
    }
  }
  if (!have_best) {
    if (any_admissible)
      throw DegenerateOutput(
          "inverse_interpolate: every admissible candidate has B'(0) = 0");
    throw NoAdmissibleChi(
        "inverse_interpolate: no weight pattern produced zeros in the disk");
  }

  {
    BlaschkeProduct b(best.zeros, best.chi);
    if (max_residual(b, zpts) > 1e-10) polish_candidate(best, args, zpts);
  }

  InterpolationResult result{
      BlaschkeProduct(best.zeros, best.chi),
      {},
      ProtonSystem(critical_points(BlaschkeProduct(best.zeros, best.chi)).inside),
      best.chi,
      0.0};
  result.residuals.reserve(std::size_t(n));
  for (cplx z : zpts)
    result.residuals.push_back(
        std::abs(result.blaschke.evaluate(z) - cplx{1.0, 0.0}));

  const double alpha = LiftedArgument(result.blaschke.monic()).alpha();
  const double raw = std::arg(best.chi);
  result.delta_0 = raw + kTwoPi * std::floor((-alpha - raw) / kTwoPi);
  return result;
}

PipelineResult reverse_problem_pipeline(const std::vector<cplx>& points,
                                        double tolerance,
                                        const VerifyOptions& options) {
  InterpolationResult interp = inverse_interpolate(points);
  const BlaschkeProduct monic = interp.blaschke.monic();
  const double delta = -interp.delta_0;

  const CircleConfiguration traced = solve_level(monic, delta);
  std::vector<double> want;
  want.reserve(points.size());
  for (cplx z : points) want.push_back(wrap_two_pi(std::arg(z)));
  std::sort(want.begin(), want.end());
  std::vector<double> got(traced.angles());
  for (double& t : got) t = wrap_two_pi(t);
  std::sort(got.begin(), got.end());
  // an angle within roundoff of 0 may land at the far end after wrapping, so
  // test the neighbouring cyclic alignments as well
  double mismatch = std::numeric_limits<double>::infinity();
  const int m = int(want.size());
  for (int shift : {0, 1, m - 1}) {
    double worst = 0.0;
    for (int j = 0; j < m; ++j)
      worst = std::max(worst,
                       angular_distance(want[std::size_t(j)],
                                        got[std::size_t((j + shift) % m)]));
    mismatch = std::min(mismatch, worst);
  }
  if (mismatch > 1e-6)
    throw CurveMismatch(
        "reverse_problem_pipeline: traced configuration does not reproduce "
        "the inputs");

  PipelineResult out{std::move(interp),
                     verify_on_curve(monic, delta, tolerance, options),
                     mismatch};
  return out;
}

}  // namespace beq
