#include "beq/energy.hpp"

#include <cmath>
#include <sstream>

#include "beq/errors.hpp"

namespace beq {

namespace {

void require_clean(const ExceptionalReport& report) {
  if (report.is_exceptional())
    throw ExceptionalConfigurationError("exceptional configuration: " +
                                        report.describe());
}

double log_distance(cplx a, cplx b) {
  const double d = std::abs(a - b);
  if (d < 1e-300)
    throw ExceptionalConfigurationError("distance underflow in energy sum");
  return std::log(d);
}

// mutual electron term as the symmetric l != k sum (equals twice the j < k sum)
double mutual_term(const std::vector<cplx>& w) {
  double s = 0.0;
  for (std::size_t j = 0; j < w.size(); ++j)
    for (std::size_t k = j + 1; k < w.size(); ++k)
      s += 2.0 * log_distance(w[j], w[k]);
  return s;
}

}  // namespace

LineConfiguration::LineConfiguration(std::vector<double> points)
    : points_(std::move(points)) {
  if (points_.empty())
    throw ValidationError("LineConfiguration: empty point list");
  for (std::size_t j = 0; j < points_.size(); ++j) {
    if (std::isnan(points_[j]))
      throw ValidationError("LineConfiguration: NaN point");
    if (std::isinf(points_[j])) {
      if (infinity_index_ >= 0)
        throw ValidationError("LineConfiguration: more than one infinity");
      infinity_index_ = int(j);
    }
  }
}

std::vector<double> LineConfiguration::finite_points() const {
  std::vector<double> out;
  out.reserve(points_.size());
  for (double t : points_)
    if (std::isfinite(t)) out.push_back(t);
  return out;
}

const char* to_string(ExceptionalReport::Kind kind) {
  switch (kind) {
    case ExceptionalReport::Kind::ProtonAtOrigin: return "proton-at-origin";
    case ExceptionalReport::Kind::ElectronElectron: return "electron-electron";
    case ExceptionalReport::Kind::ElectronProton: return "electron-proton";
    case ExceptionalReport::Kind::ElectronReflectedProton:
      return "electron-reflected-proton";
  }
  return "?";
}

std::string ExceptionalReport::describe() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < reasons.size(); ++i) {
    if (i) os << ", ";
    os << to_string(reasons[i].kind) << "(" << reasons[i].first;
    if (reasons[i].second >= 0) os << "," << reasons[i].second;
    os << ")";
  }
  return os.str();
}

ExceptionalReport exceptional_report(const std::vector<cplx>& electrons,
                                     const ProtonSystem& protons) {
  ExceptionalReport rep;
  using Kind = ExceptionalReport::Kind;
  for (int k = 0; k < protons.size(); ++k)
    if (std::abs(protons.inner()[std::size_t(k)]) <= kCollisionTol)
      rep.reasons.push_back({Kind::ProtonAtOrigin, k, -1});
  for (int j = 0; j < int(electrons.size()); ++j)
    for (int k = j + 1; k < int(electrons.size()); ++k)
      if (std::abs(electrons[std::size_t(j)] - electrons[std::size_t(k)]) <=
          kCollisionTol)
        rep.reasons.push_back({Kind::ElectronElectron, j, k});
  for (int j = 0; j < int(electrons.size()); ++j) {
    for (int k = 0; k < protons.size(); ++k) {
      const cplx zeta = protons.inner()[std::size_t(k)];
      if (std::abs(electrons[std::size_t(j)] - zeta) <= kCollisionTol)
        rep.reasons.push_back({Kind::ElectronProton, j, k});
      if (std::abs(electrons[std::size_t(j)] - circle_inversion(zeta)) <=
          kCollisionTol)
        rep.reasons.push_back({Kind::ElectronReflectedProton, j, k});
    }
  }
  return rep;
}

ExceptionalReport exceptional_report(const std::vector<cplx>& electrons,
                                     const SignedAtomicMeasure& mu) {
  ExceptionalReport rep;
  using Kind = ExceptionalReport::Kind;
  for (int j = 0; j < int(electrons.size()); ++j)
    for (int k = j + 1; k < int(electrons.size()); ++k)
      if (std::abs(electrons[std::size_t(j)] - electrons[std::size_t(k)]) <=
          kCollisionTol)
        rep.reasons.push_back({Kind::ElectronElectron, j, k});
  for (int j = 0; j < int(electrons.size()); ++j)
    for (int k = 0; k < int(mu.atoms().size()); ++k)
      if (std::abs(electrons[std::size_t(j)] -
                   mu.atoms()[std::size_t(k)].location) <= kCollisionTol)
        rep.reasons.push_back({Kind::ElectronProton, j, k});
  return rep;
}

double energy_W(const std::vector<cplx>& electrons,
                const ProtonSystem& protons) {
  require_clean(exceptional_report(electrons, protons));
  double field = 0.0;
  for (cplx zeta : protons.inner()) {
    const cplx star = circle_inversion(zeta);
    for (cplx w : electrons)
      field += log_distance(w, zeta) + log_distance(w, star);
  }
  return field - mutual_term(electrons);
}

double energy_W(const CircleConfiguration& config,
                const ProtonSystem& protons) {
  return energy_W(config.points(), protons);
}

double energy_W_tilde(const std::vector<double>& angles,
                      const ProtonSystem& protons) {
  std::vector<cplx> w(angles.size());
  for (std::size_t j = 0; j < angles.size(); ++j)
    w[j] = std::polar(1.0, angles[j]);
  return energy_W(w, protons);
}

double energy_W_mu(const std::vector<cplx>& electrons,
                   const SignedAtomicMeasure& mu) {
  require_clean(exceptional_report(electrons, mu));
  double field = 0.0;
  for (const auto& atom : mu.atoms())
    for (cplx w : electrons)
      field += 2.0 * atom.weight * log_distance(w, atom.location);
  return field - mutual_term(electrons);
}

double energy_V(const LineConfiguration& config, const std::vector<cplx>& xis) {
  if (config.has_infinity())
    throw InfinityPresent(
        "energy_V: configuration has an infinity; use energy_V_with_infinity");
  std::vector<cplx> t(config.points().begin(), config.points().end());
  double field = 0.0;
  for (cplx xi : xis)
    for (cplx tj : t)
      field += log_distance(tj, xi) + log_distance(tj, std::conj(xi));
  return field - mutual_term(t);
}

double energy_V_nu(const std::vector<cplx>& points,
                   const SignedAtomicMeasure& nu) {
  require_clean(exceptional_report(points, nu));
  double field = 0.0;
  for (const auto& atom : nu.atoms())
    for (cplx t : points)
      field += 2.0 * atom.weight * log_distance(t, atom.location);
  return field - mutual_term(points);
}

double energy_V_nu(const LineConfiguration& config,
                   const SignedAtomicMeasure& nu) {
  if (config.has_infinity())
    throw InfinityPresent(
        "energy_V_nu: configuration has an infinity; use energy_V_with_infinity");
  std::vector<cplx> t(config.points().begin(), config.points().end());
  return energy_V_nu(t, nu);
}

double energy_V_with_infinity(const LineConfiguration& config,
                              const std::vector<cplx>& xis) {
  if (!config.has_infinity())
    throw ValidationError("energy_V_with_infinity: no infinity present");
  const std::vector<double> reduced = config.finite_points();
  if (reduced.empty()) return 0.0;  // n = 1: empty sums
  return energy_V(LineConfiguration(reduced), xis);
}

double energy_V_with_infinity(const LineConfiguration& config,
                              const SignedAtomicMeasure& nu) {
  if (!config.has_infinity())
    throw ValidationError("energy_V_with_infinity: no infinity present");
  const std::vector<double> reduced = config.finite_points();
  if (reduced.empty()) return 0.0;
  return energy_V_nu(LineConfiguration(reduced), nu);
}

std::vector<double> tangential_gradient(const CircleConfiguration& config,
                                        const ProtonSystem& protons) {
  const std::vector<cplx> w = config.points();
  require_clean(exceptional_report(w, protons));
  const int n = config.size();
  std::vector<double> grad(std::size_t(n), 0.0);
  for (int j = 0; j < n; ++j) {
    const cplx wj = w[std::size_t(j)];
    const cplx iwj = cplx{0.0, 1.0} * wj;
    double s = 0.0;
    for (cplx zeta : protons.inner()) {
      s += (iwj / (wj - zeta)).real();
      s += (iwj / (wj - circle_inversion(zeta))).real();
    }
    for (int l = 0; l < n; ++l) {
      if (l == j) continue;
      s -= 2.0 * (iwj / (wj - w[std::size_t(l)])).real();
    }
    grad[std::size_t(j)] = s;
  }
  return grad;
}

std::vector<double> gradient_V(const std::vector<double>& points,
                               const std::vector<cplx>& xis) {
  const int n = int(points.size());
  std::vector<double> grad(std::size_t(n), 0.0);
  for (int j = 0; j < n; ++j) {
    const double tj = points[std::size_t(j)];
    double s = 0.0;
    for (cplx xi : xis) {
      s += (1.0 / (tj - xi)).real();
      s += (1.0 / (tj - std::conj(xi))).real();
    }
    for (int l = 0; l < n; ++l) {
      if (l == j) continue;
      s -= 2.0 / (tj - points[std::size_t(l)]);
    }
    grad[std::size_t(j)] = s;
  }
  return grad;
}

double radial_derivative(const CircleConfiguration& config,
                         const SignedAtomicMeasure& mu, int j, double eps) {
  if (!mu.is_inversion_symmetric())
    throw SymmetryViolation(
        "radial_derivative: measure is not inversion-symmetric");
  if (j < 0 || j >= config.size())
    throw ValidationError("radial_derivative: index out of range");
  std::vector<cplx> plus = config.points();
  std::vector<cplx> minus = plus;
  plus[std::size_t(j)] *= (1.0 + eps);
  minus[std::size_t(j)] *= (1.0 - eps);
  return (energy_W_mu(plus, mu) - energy_W_mu(minus, mu)) / (2.0 * eps);
}

double imaginary_directional_derivative(const LineConfiguration& config,
                                        const SignedAtomicMeasure& nu, int j,
                                        double eps) {
  if (!nu.is_conjugation_symmetric())
    throw SymmetryViolation(
        "imaginary_directional_derivative: measure is not conjugation-symmetric");
  if (j < 0 || j >= config.size())
    throw ValidationError(
        "imaginary_directional_derivative: index out of range");
  if (config.has_infinity())
    throw InfinityPresent(
        "imaginary_directional_derivative: finite configuration required");
  std::vector<cplx> plus(config.points().begin(), config.points().end());
  std::vector<cplx> minus = plus;
  plus[std::size_t(j)] += cplx{0.0, eps};
  minus[std::size_t(j)] -= cplx{0.0, eps};
  return (energy_V_nu(plus, nu) - energy_V_nu(minus, nu)) / (2.0 * eps);
}

Eigen::MatrixXd tangential_hessian(const CircleConfiguration& config,
                                   const ProtonSystem& protons, double h) {
  const int n = config.size();
  const std::vector<double>& tau = config.angles();
  require_clean(exceptional_report(config.points(), protons));

  auto shifted = [&](int j, double dj, int k, double dk) {
    std::vector<double> t = tau;
    t[std::size_t(j)] += dj;
    if (k >= 0) t[std::size_t(k)] += dk;
    return energy_W_tilde(t, protons);
  };

  Eigen::MatrixXd hess(n, n);
  const double center = energy_W_tilde(tau, protons);
  for (int j = 0; j < n; ++j) {
    hess(j, j) = (shifted(j, h, -1, 0.0) - 2.0 * center + shifted(j, -h, -1, 0.0)) / (h * h);
    for (int k = j + 1; k < n; ++k) {
      const double v = (shifted(j, h, k, h) - shifted(j, h, k, -h) -
                        shifted(j, -h, k, h) + shifted(j, -h, k, -h)) /
                       (4.0 * h * h);
      hess(j, k) = v;
      hess(k, j) = v;
    }
  }
  return hess;
}

}  // namespace beq
