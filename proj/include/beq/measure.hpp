#pragma once

#include <optional>
#include <vector>

#include "beq/types.hpp"

namespace beq {

/// n-1 pairwise distinct points in the punctured disk; each carries an
/// implicit partner zeta* = 1/conj(zeta) outside. Together they are the
/// charge +1/2 proton field of an n-electron problem.
class ProtonSystem {
 public:
  explicit ProtonSystem(std::vector<cplx> inner);

  int size() const { return int(inner_.size()); }
  const std::vector<cplx>& inner() const { return inner_; }
  std::vector<cplx> reflected() const;

 private:
  std::vector<cplx> inner_;
};

/// Finite signed atomic measure: a list of (location, real weight) atoms with
/// pairwise distinct locations.
class SignedAtomicMeasure {
 public:
  struct Atom {
    cplx location;
    double weight;
  };

  SignedAtomicMeasure() = default;
  explicit SignedAtomicMeasure(std::vector<Atom> atoms);

  /// The proton field as a measure: atoms (zeta_k, 1/2) and (zeta_k*, 1/2).
  static SignedAtomicMeasure from_protons(const ProtonSystem& protons);

  const std::vector<Atom>& atoms() const { return atoms_; }
  bool empty() const { return atoms_.empty(); }
  double total_weight() const;

  /// Pairs atoms under z -> 1/conj(z) with equal weights.
  bool is_inversion_symmetric(double tol = 1e-10) const;

  /// Pairs atoms under z -> conj(z) with equal weights.
  bool is_conjugation_symmetric(double tol = 1e-10) const;

 private:
  std::vector<Atom> atoms_;
};

}  // namespace beq
