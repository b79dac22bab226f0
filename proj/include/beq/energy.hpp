#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "beq/level.hpp"
#include "beq/measure.hpp"
#include "beq/types.hpp"

namespace beq {

/// n extended-real electron positions on the line, at most one infinite.
class LineConfiguration {
 public:
  explicit LineConfiguration(std::vector<double> points);

  int size() const { return int(points_.size()); }
  const std::vector<double>& points() const { return points_; }
  bool has_infinity() const { return infinity_index_ >= 0; }
  int infinity_index() const { return infinity_index_; }

  /// The finite points, dropping the infinite one if present.
  std::vector<double> finite_points() const;

 private:
  std::vector<double> points_;
  int infinity_index_ = -1;
};

/// Tagged collisions that make an energy infinite.
struct ExceptionalReport {
  enum class Kind {
    ProtonAtOrigin,
    ElectronElectron,
    ElectronProton,
    ElectronReflectedProton,
  };
  struct Reason {
    Kind kind;
    int first;   // electron index, or proton index for ProtonAtOrigin
    int second;  // second electron / proton index, -1 if not applicable
  };
  std::vector<Reason> reasons;
  bool is_exceptional() const { return !reasons.empty(); }
  std::string describe() const;
};

const char* to_string(ExceptionalReport::Kind kind);

/// Membership test for the exceptional set E with distance threshold 1e-12.
ExceptionalReport exceptional_report(const std::vector<cplx>& electrons,
                                     const ProtonSystem& protons);

/// Measure variant (set E_mu): electron-atom hits are tagged ElectronProton.
ExceptionalReport exceptional_report(const std::vector<cplx>& electrons,
                                     const SignedAtomicMeasure& mu);

// --- energies (all "doubled": twice the physical energy) ---

/// W = sum_k sum_j log|(w_j - zeta_k)(w_j - zeta_k*)| - 2 sum_{j<k} log|w_j - w_k|.
double energy_W(const std::vector<cplx>& electrons, const ProtonSystem& protons);
double energy_W(const CircleConfiguration& config, const ProtonSystem& protons);

/// W restricted to the circle: W~(tau) = W(e^{i tau_1}, ..., e^{i tau_n}).
double energy_W_tilde(const std::vector<double>& angles,
                      const ProtonSystem& protons);

/// W_mu = 2 sum_k int log|w_k - zeta| dmu - sum_{l != k} log|w_l - w_k|.
double energy_W_mu(const std::vector<cplx>& electrons,
                   const SignedAtomicMeasure& mu);

/// V = sum_k sum_j log|(t_j - xi_k)(t_j - conj(xi_k))| - 2 sum_{j<k} log|t_j - t_k|.
/// Finite configurations only; throws InfinityPresent otherwise.
double energy_V(const LineConfiguration& config, const std::vector<cplx>& xis);

/// V_nu, the measure form. The complex overload supports the directional
/// derivative probes.
double energy_V_nu(const LineConfiguration& config,
                   const SignedAtomicMeasure& nu);
double energy_V_nu(const std::vector<cplx>& points,
                   const SignedAtomicMeasure& nu);

/// V with exactly one electron at infinity: the energy of the reduced
/// configuration under the same field.
double energy_V_with_infinity(const LineConfiguration& config,
                              const std::vector<cplx>& xis);
double energy_V_with_infinity(const LineConfiguration& config,
                              const SignedAtomicMeasure& nu);

// --- derivatives ---

/// Gradient of W~: component j is
///   sum_k Re(i w_j [1/(w_j - zeta_k) + 1/(w_j - zeta_k*)])
///   - 2 sum_{l != j} Re(i w_j/(w_j - w_l)).
std::vector<double> tangential_gradient(const CircleConfiguration& config,
                                        const ProtonSystem& protons);

/// Gradient of V over finite real points (used by the chain-rule check).
std::vector<double> gradient_V(const std::vector<double>& points,
                               const std::vector<cplx>& xis);

/// Central finite difference of W_mu along w_j -> w_j (1 + eps). Vanishes
/// when mu is inversion-symmetric; requires that symmetry.
double radial_derivative(const CircleConfiguration& config,
                         const SignedAtomicMeasure& mu, int j,
                         double eps = 1e-6);

/// Central finite difference of V_nu along t_j -> t_j + i eps. Vanishes for
/// conjugation-symmetric nu; requires that symmetry.
double imaginary_directional_derivative(const LineConfiguration& config,
                                        const SignedAtomicMeasure& nu, int j,
                                        double eps = 1e-6);

/// Central finite-difference Hessian of W~ (step h), exactly symmetric by
/// construction.
Eigen::MatrixXd tangential_hessian(const CircleConfiguration& config,
                                   const ProtonSystem& protons,
                                   double h = 1e-4);

}  // namespace beq
