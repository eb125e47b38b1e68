// Generalized Gauss-Laguerre rules (Newton on the three-term recurrence)
// and an adaptive Simpson integrator used as the cross-check route.

#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

namespace u1kepler::quadrature {

// Nodes and weights for the weight function x^alpha e^{-x} on (0, inf).
// Exact for polynomial integrands of degree <= 2 * point_count - 1.
struct GaussLaguerreRule {
  double alpha = 0.0;
  std::vector<double> nodes;
  std::vector<double> weights;

  template <class F>
  double integrate(F&& f) const {
    double sum = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) sum += weights[i] * f(nodes[i]);
    return sum;
  }
};

GaussLaguerreRule gauss_laguerre(double alpha, int point_count);

struct AdaptiveResult {
  double value = 0.0;
  double error = 0.0;
  long evaluations = 0;
  bool converged = false;
};

namespace detail {

template <class F>
AdaptiveResult simpson_recurse(F& f, double a, double b, double fa, double fm,
                               double fb, double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  AdaptiveResult result;
  result.evaluations = 2;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
    result.value = left + right + delta / 15.0;
    result.error = std::abs(delta) / 15.0;
    result.converged = depth > 0 || std::abs(delta) <= 15.0 * tol;
    return result;
  }
  const AdaptiveResult l =
      simpson_recurse(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1);
  const AdaptiveResult r =
      simpson_recurse(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
  result.value = l.value + r.value;
  result.error = l.error + r.error;
  result.evaluations += l.evaluations + r.evaluations;
  result.converged = l.converged && r.converged;
  return result;
}

}  // namespace detail

// Adaptive Simpson on [a, b] with absolute tolerance; non-convergence is
// reported through the result, never silently truncated.
template <class F>
AdaptiveResult integrate_adaptive(F f, double a, double b, double abs_tol,
                                  int max_depth = 48) {
  if (!(b > a)) throw std::invalid_argument("integrate_adaptive: empty interval");
  if (!(abs_tol > 0.0)) throw std::invalid_argument("integrate_adaptive: tolerance must be positive");
  const double fa = f(a);
  const double m = 0.5 * (a + b);
  const double fm = f(m);
  const double fb = f(b);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  AdaptiveResult result =
      detail::simpson_recurse(f, a, b, fa, fm, fb, whole, abs_tol, max_depth);
  result.evaluations += 3;
  return result;
}

}  // namespace u1kepler::quadrature
