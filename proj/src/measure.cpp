#include "beq/measure.hpp"

#include <cmath>

#include "beq/errors.hpp"

namespace beq {

namespace {

// Greedy involution matching: every atom must find a distinct partner (or
// itself, for fixed points of the map) with equal weight.
template <typename MapFn>
bool symmetric_under(const std::vector<SignedAtomicMeasure::Atom>& atoms,
                     MapFn&& map, double tol) {
  std::vector<bool> used(atoms.size(), false);
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (used[i]) continue;
    const cplx image = map(atoms[i].location);
    if (std::abs(image - atoms[i].location) <= tol) {
      used[i] = true;  // fixed point
      continue;
    }
    bool found = false;
    for (std::size_t j = 0; j < atoms.size(); ++j) {
      if (j == i || used[j]) continue;
      if (std::abs(atoms[j].location - image) <= tol &&
          std::abs(atoms[j].weight - atoms[i].weight) <= tol) {
        used[i] = used[j] = true;
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace

ProtonSystem::ProtonSystem(std::vector<cplx> inner) : inner_(std::move(inner)) {
  for (cplx z : inner_) {
    if (std::abs(z) <= kCollisionTol)
      throw ValidationError("ProtonSystem: proton at the origin");
    if (!(std::abs(z) < 1.0))
      throw ValidationError("ProtonSystem: proton not inside the unit disk");
  }
  for (std::size_t i = 0; i < inner_.size(); ++i)
    for (std::size_t j = i + 1; j < inner_.size(); ++j)
      if (std::abs(inner_[i] - inner_[j]) <= kCollisionTol)
        throw ValidationError("ProtonSystem: coincident protons");
}

std::vector<cplx> ProtonSystem::reflected() const {
  std::vector<cplx> out(inner_.size());
  for (std::size_t i = 0; i < inner_.size(); ++i)
    out[i] = circle_inversion(inner_[i]);
  return out;
}

SignedAtomicMeasure::SignedAtomicMeasure(std::vector<Atom> atoms)
    : atoms_(std::move(atoms)) {
  for (std::size_t i = 0; i < atoms_.size(); ++i)
    for (std::size_t j = i + 1; j < atoms_.size(); ++j)
      if (std::abs(atoms_[i].location - atoms_[j].location) <= kCollisionTol)
        throw ValidationError("SignedAtomicMeasure: coincident atoms");
}

SignedAtomicMeasure SignedAtomicMeasure::from_protons(
    const ProtonSystem& protons) {
  std::vector<Atom> atoms;
  atoms.reserve(2 * protons.inner().size());
  for (cplx z : protons.inner()) {
    atoms.push_back({z, 0.5});
    atoms.push_back({circle_inversion(z), 0.5});
  }
  return SignedAtomicMeasure(std::move(atoms));
}

double SignedAtomicMeasure::total_weight() const {
  double s = 0.0;
  for (const Atom& a : atoms_) s += a.weight;
  return s;
}

bool SignedAtomicMeasure::is_inversion_symmetric(double tol) const {
  for (const Atom& a : atoms_)
    if (std::abs(a.location) <= tol) return false;  // origin has no partner
  return symmetric_under(
      atoms_, [](cplx z) { return circle_inversion(z); }, tol);
}

bool SignedAtomicMeasure::is_conjugation_symmetric(double tol) const {
  return symmetric_under(
      atoms_, [](cplx z) { return std::conj(z); }, tol);
}

}  // namespace beq
