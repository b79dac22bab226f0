#pragma once

#include <vector>

#include "beq/types.hpp"

namespace beq::poly {

// Polynomials are coefficient vectors in ascending order: c[k] is the
// coefficient of z^k.

/// Horner evaluation.
cplx eval(const std::vector<cplx>& c, cplx z);

/// Value and first derivative in one Horner pass.
void eval_with_derivative(const std::vector<cplx>& c, cplx z, cplx& value,
                          cplx& derivative);

/// Coefficients of the derivative.
std::vector<cplx> derivative(const std::vector<cplx>& c);

/// Coefficient convolution (polynomial product).
std::vector<cplx> multiply(const std::vector<cplx>& a,
                           const std::vector<cplx>& b);

std::vector<cplx> subtract(const std::vector<cplx>& a,
                           const std::vector<cplx>& b);

/// Monic polynomial with the given roots.
std::vector<cplx> from_roots(const std::vector<cplx>& roots);

/// Conjugate-reversed polynomial at degree n: q_k = conj(c_{n-k}).
/// For P = prod (z - a_k) this is prod (1 - conj(a_k) z).
std::vector<cplx> conjugate_reversal(const std::vector<cplx>& c, int n);

/// Drop leading coefficients below rel_tol times the largest magnitude.
std::vector<cplx> trim_leading(const std::vector<cplx>& c,
                               double rel_tol = 1e-13);

/// All roots by Aberth-Ehrlich simultaneous iteration, starting on a circle
/// of radius `init_radius` with perturbed angles. Throws RootFindFailure if
/// the iteration budget is exhausted.
std::vector<cplx> aberth_roots(const std::vector<cplx>& coeffs,
                               double init_radius = 1.0, int max_iter = 200);

}  // namespace beq::poly
