#include "beq/cayley.hpp"

#include <cmath>

#include "beq/errors.hpp"

namespace beq {

CayleyMap::CayleyMap(double theta) : theta_(theta) {
  if (!std::isfinite(theta))
    throw ValidationError("CayleyMap: theta must be finite");
}

ExtendedComplex CayleyMap::forward(cplx z) const {
  const cplx w = z * std::polar(1.0, -theta_);
  if (std::abs(w - cplx{1.0, 0.0}) < 1e-14) return ExtendedComplex::infinity();
  return ExtendedComplex::finite(cplx{0.0, 1.0} * (1.0 + w) / (1.0 - w));
}

double CayleyMap::boundary_value(double tau) const {
  return -1.0 / std::tan(0.5 * (tau - theta_));
}

double CayleyMap::boundary_derivative(double tau) const {
  const double s = std::sin(0.5 * (tau - theta_));
  return 1.0 / (2.0 * s * s);
}

cplx CayleyMap::inverse(ExtendedComplex u) const {
  const cplx e = std::polar(1.0, theta_);
  if (u.is_infinity) return e;
  if (std::abs(u.value + cplx{0.0, 1.0}) <= 1e-14)
    throw PoleError("CayleyMap::inverse: pole at u = -i");
  return e * (u.value - cplx{0.0, 1.0}) / (u.value + cplx{0.0, 1.0});
}

SignedAtomicMeasure pushforward_measure(const CayleyMap& map,
                                        const SignedAtomicMeasure& mu) {
  std::vector<SignedAtomicMeasure::Atom> atoms;
  atoms.reserve(mu.atoms().size());
  for (const auto& a : mu.atoms()) {
    if (std::abs(a.location - map.pole()) < 1e-10)
      throw AtomAtInfinity("pushforward_measure: atom at e^{i theta}");
    atoms.push_back({map.forward(a.location).value, a.weight});
  }
  return SignedAtomicMeasure(std::move(atoms));
}

double energy_shift_constant(const SignedAtomicMeasure& nu, int n) {
  if (std::abs(nu.total_weight() - double(n - 1)) > 1e-9)
    throw ValidationError(
        "energy_shift_constant: total weight must equal n-1");
  double integral = 0.0;
  for (const auto& a : nu.atoms()) {
    const double dist = std::abs(a.location + cplx{0.0, 1.0});
    if (dist < 1e-12)
      throw InfiniteConstant("energy_shift_constant: atom at -i");
    integral += a.weight * std::log(dist);
  }
  return double(n) * double(n - 1) * std::log(2.0) - 2.0 * double(n) * integral;
}

}  // namespace beq
