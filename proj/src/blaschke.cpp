#include "beq/blaschke.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "beq/errors.hpp"
#include "beq/poly.hpp"

namespace beq {

namespace {

// Value, first and second derivative of a running product, extended one
// factor at a time. f is the factor value, df its (constant-in-z) derivative.
struct Jet {
  cplx v{1.0, 0.0}, d{0.0, 0.0}, d2{0.0, 0.0};
  void push(cplx f, cplx df) {
    d2 = d2 * f + 2.0 * d * df;
    d = d * f + v * df;
    v = v * f;
  }
};

void numerator_denominator_jets(const std::vector<cplx>& zeros, cplx chi,
                                cplx z, Jet& p, Jet& q) {
  p = Jet{};
  q = Jet{};
  p.v = chi;
  for (cplx a : zeros) {
    p.push(z - a, cplx{1.0, 0.0});
    q.push(1.0 - std::conj(a) * z, -std::conj(a));
  }
}

void check_poles(const std::vector<cplx>& zeros, cplx z) {
  for (cplx a : zeros) {
    if (std::abs(1.0 - std::conj(a) * z) < 1e-300)
      throw PoleProximityError("evaluation at a pole of the Blaschke product");
  }
}

}  // namespace

BlaschkeProduct::BlaschkeProduct(std::vector<cplx> zeros, cplx chi)
    : zeros_(std::move(zeros)), chi_(chi) {
  if (zeros_.empty())
    throw ValidationError("BlaschkeProduct: at least one zero required");
  for (cplx a : zeros_) {
    if (!(std::abs(a) < 1.0 - kBoundaryMargin)) {
      std::ostringstream os;
      os << "BlaschkeProduct: zero (" << a.real() << ", " << a.imag()
         << ") not strictly inside the unit disk";
      throw ValidationError(os.str());
    }
  }
  if (std::abs(std::abs(chi_) - 1.0) > 1e-14)
    throw ValidationError("BlaschkeProduct: leading coefficient not unimodular");
}

BlaschkeProduct BlaschkeProduct::monic() const {
  return BlaschkeProduct(zeros_, cplx{1.0, 0.0});
}

cplx BlaschkeProduct::evaluate(cplx z) const {
  check_poles(zeros_, z);
  cplx v = chi_;
  for (cplx a : zeros_) v *= (z - a) / (1.0 - std::conj(a) * z);
  return v;
}

cplx BlaschkeProduct::derivative(cplx z) const {
  check_poles(zeros_, z);
  Jet p, q;
  numerator_denominator_jets(zeros_, chi_, z, p, q);
  return (p.d * q.v - p.v * q.d) / (q.v * q.v);
}

cplx BlaschkeProduct::second_derivative(cplx z) const {
  check_poles(zeros_, z);
  Jet p, q;
  numerator_denominator_jets(zeros_, chi_, z, p, q);
  // (P/Q)'' = ((P''Q - PQ'')Q - 2Q'(P'Q - PQ')) / Q^3
  cplx num = (p.d2 * q.v - p.v * q.d2) * q.v - 2.0 * q.d * (p.d * q.v - p.v * q.d);
  return num / (q.v * q.v * q.v);
}

LiftedArgument::LiftedArgument(const BlaschkeProduct& b)
    : zeros_(b.zeros()), chi_arg_(std::arg(b.leading_coefficient())) {
  double raw0 = chi_arg_;
  for (cplx a : zeros_) raw0 += 2.0 * std::arg(1.0 - a);
  alpha_ = wrap_pm_pi(raw0);
  offset_ = alpha_ - raw0;
}

double LiftedArgument::operator()(double t) const {
  double s = chi_arg_ + double(zeros_.size()) * t + offset_;
  cplx e = std::polar(1.0, -t);
  for (cplx a : zeros_) s += 2.0 * std::arg(1.0 - a * e);
  return s;
}

double LiftedArgument::derivative(double t) const {
  cplx z = std::polar(1.0, t);
  double s = 0.0;
  for (cplx a : zeros_) s += (1.0 - std::norm(a)) / std::norm(z - a);
  return s;
}

double LiftedArgument::inverse(double target) const {
  const int n = degree();
  const double period = kTwoPi * n;
  // reduce into [alpha, alpha + 2*pi*n), remember the shift
  double m = std::floor((target - alpha_) / period);
  double y = target - m * period;
  if (y < alpha_) {  // guard against floor roundoff
    y += period;
    m -= 1.0;
  } else if (y >= alpha_ + period) {
    y -= period;
    m += 1.0;
  }

  double lo = 0.0, hi = kTwoPi;
  double t = 0.5 * (lo + hi);
  // bisection to localize, Newton to finish; Phi' > 0 everywhere
  for (int i = 0; i < 200; ++i) {
    double phi = (*this)(t);
    if (phi < y)
      lo = t;
    else
      hi = t;
    if (hi - lo < 1e-9) break;
    t = 0.5 * (lo + hi);
  }
  t = 0.5 * (lo + hi);
  for (int i = 0; i < 60; ++i) {
    double r = (*this)(t)-y;
    if (std::abs(r) < 1e-14) break;
    double step = r / derivative(t);
    double tn = t - step;
    if (tn <= lo || tn >= hi) tn = 0.5 * (lo + hi);  // safeguard
    if ((*this)(tn) < y)
      lo = tn;
    else
      hi = tn;
    t = tn;
  }
  return t + m * kTwoPi;
}

CriticalPointSet critical_points(const BlaschkeProduct& b) {
  const int n = b.degree();
  CriticalPointSet out;
  if (n == 1) return out;  // 2n-2 = 0 critical points

  if (std::abs(b.derivative(cplx{0.0, 0.0})) < 1e-10)
    throw DegenerateOrigin("critical_points: B'(0) vanishes");

  // numerator of B' for the monic product (chi only scales it)
  std::vector<cplx> p = poly::from_roots(b.zeros());
  std::vector<cplx> q = poly::conjugate_reversal(p, n);
  std::vector<cplx> num = poly::subtract(
      poly::multiply(poly::derivative(p), q),
      poly::multiply(p, poly::derivative(q)));
  num = poly::trim_leading(num);
  if (int(num.size()) - 1 != 2 * n - 2)
    throw RootFindFailure("critical_points: numerator degree != 2n-2");

  std::vector<cplx> roots = poly::aberth_roots(num);

  // one Newton polish per root on B' directly, guarded near the poles
  for (cplx& r : roots) {
    bool near_pole = false;
    for (cplx a : b.zeros())
      if (std::abs(r - circle_inversion(a)) < 1e-6) near_pole = true;
    if (near_pole) continue;
    cplx d1 = b.derivative(r);
    cplx d2 = b.second_derivative(r);
    if (std::abs(d2) < 1e-300) continue;
    cplx step = d1 / d2;
    if (std::abs(step) > 0.1) continue;
    cplx rn = r - step;
    if (std::abs(b.derivative(rn)) < std::abs(d1)) r = rn;
  }

  std::vector<cplx> inside, outside;
  for (cplx r : roots) {
    double mod = std::abs(r);
    if (std::abs(mod - 1.0) <= 1e-8) {
      // re-polish on the numerator polynomial and re-test
      for (int i = 0; i < 8; ++i) {
        cplx v, d;
        poly::eval_with_derivative(num, r, v, d);
        if (std::abs(d) < 1e-300) break;
        r -= v / d;
      }
      mod = std::abs(r);
      if (std::abs(mod - 1.0) <= 1e-8)
        throw ClassificationError(
            "critical_points: root could not be separated from the circle");
    }
    (mod < 1.0 ? inside : outside).push_back(r);
  }

  if (int(inside.size()) != n - 1 || int(outside.size()) != n - 1)
    throw ClassificationError(
        "critical_points: inside/outside partition is not (n-1, n-1)");

  // order the outside list so outside[k] pairs with inside[k]
  std::vector<cplx> paired;
  std::vector<bool> used(outside.size(), false);
  for (cplx zi : inside) {
    cplx want = circle_inversion(zi);
    int best = -1;
    double best_d = 0.0;
    for (std::size_t j = 0; j < outside.size(); ++j) {
      if (used[j]) continue;
      double d = std::abs(outside[j] - want);
      if (best < 0 || d < best_d) {
        best = int(j);
        best_d = d;
      }
    }
    used[best] = true;
    paired.push_back(outside[best]);
  }
  outside = std::move(paired);

  out.inside = inside;
  out.outside = outside;
  out.residuals.reserve(2 * inside.size());
  auto residual = [&](cplx r) {
    for (cplx a : b.zeros())
      if (std::abs(1.0 - std::conj(a) * r) < 1e-140)
        return std::abs(poly::eval(num, r));
    return std::abs(b.derivative(r));
  };
  for (cplx r : inside) out.residuals.push_back(residual(r));
  for (cplx r : outside) out.residuals.push_back(residual(r));
  return out;
}

}  // namespace beq
