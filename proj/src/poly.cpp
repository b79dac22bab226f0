#include "beq/poly.hpp"

#include <algorithm>
#include <cmath>

#include "beq/errors.hpp"

namespace beq::poly {

cplx eval(const std::vector<cplx>& c, cplx z) {
  cplx v{0.0, 0.0};
  for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * z + *it;
  return v;
}

void eval_with_derivative(const std::vector<cplx>& c, cplx z, cplx& value,
                          cplx& deriv) {
  value = cplx{0.0, 0.0};
  deriv = cplx{0.0, 0.0};
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    deriv = deriv * z + value;
    value = value * z + *it;
  }
}

std::vector<cplx> derivative(const std::vector<cplx>& c) {
  if (c.size() <= 1) return {cplx{0.0, 0.0}};
  std::vector<cplx> d(c.size() - 1);
  for (std::size_t k = 1; k < c.size(); ++k) d[k - 1] = double(k) * c[k];
  return d;
}

std::vector<cplx> multiply(const std::vector<cplx>& a,
                           const std::vector<cplx>& b) {
  std::vector<cplx> r(a.size() + b.size() - 1, cplx{0.0, 0.0});
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

std::vector<cplx> subtract(const std::vector<cplx>& a,
                           const std::vector<cplx>& b) {
  std::vector<cplx> r(std::max(a.size(), b.size()), cplx{0.0, 0.0});
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return r;
}

std::vector<cplx> from_roots(const std::vector<cplx>& roots) {
  std::vector<cplx> c{cplx{1.0, 0.0}};
  for (cplx r : roots) c = multiply(c, {-r, cplx{1.0, 0.0}});
  return c;
}

std::vector<cplx> conjugate_reversal(const std::vector<cplx>& c, int n) {
  std::vector<cplx> q(std::size_t(n) + 1, cplx{0.0, 0.0});
  for (int k = 0; k <= n; ++k) {
    int j = n - k;
    if (j < int(c.size())) q[k] = std::conj(c[j]);
  }
  return q;
}

std::vector<cplx> trim_leading(const std::vector<cplx>& c, double rel_tol) {
  double maxmag = 0.0;
  for (cplx v : c) maxmag = std::max(maxmag, std::abs(v));
  std::size_t deg = c.size();
  while (deg > 1 && std::abs(c[deg - 1]) <= rel_tol * maxmag) --deg;
  return std::vector<cplx>(c.begin(), c.begin() + deg);
}

std::vector<cplx> aberth_roots(const std::vector<cplx>& coeffs,
                               double init_radius, int max_iter) {
  const std::vector<cplx> c = trim_leading(coeffs);
  const int deg = int(c.size()) - 1;
  if (deg <= 0) return {};
  if (deg == 1) return {-c[0] / c[1]};

  std::vector<cplx> z(deg);
  for (int i = 0; i < deg; ++i) {
    // perturbed angles so the start breaks any root symmetry
    double ang = kTwoPi * (double(i) + 0.5) / deg + 0.31 + 0.17 * i;
    z[i] = init_radius * std::polar(1.0, ang);
  }

  double coeff_scale = 0.0;
  for (cplx v : c) coeff_scale = std::max(coeff_scale, std::abs(v));

  for (int iter = 0; iter < max_iter; ++iter) {
    double max_step = 0.0;
    for (int i = 0; i < deg; ++i) {
      cplx p, dp;
      eval_with_derivative(c, z[i], p, dp);
      if (std::abs(p) <= 1e-16 * coeff_scale) continue;
      cplx newton = (dp != cplx{0.0, 0.0}) ? p / dp : cplx{1.0, 0.0};
      cplx sum{0.0, 0.0};
      for (int j = 0; j < deg; ++j) {
        if (j == i) continue;
        cplx diff = z[i] - z[j];
        if (std::abs(diff) < 1e-300) diff = cplx{1e-300, 0.0};
        sum += 1.0 / diff;
      }
      cplx denom = 1.0 - newton * sum;
      cplx step = (std::abs(denom) > 1e-300) ? newton / denom : newton;
      z[i] -= step;
      max_step = std::max(max_step, std::abs(step) / (1.0 + std::abs(z[i])));
    }
    if (max_step < 1e-15) return z;
  }
  throw RootFindFailure("aberth_roots: no convergence within iteration budget");
}

}  // namespace beq::poly
