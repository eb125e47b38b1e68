#include "u1kepler/quadrature.hpp"

#include <cmath>

namespace u1kepler::quadrature {

namespace {

// Value of L^alpha_m(x) and of L^alpha_{m-1}(x) via the stable upward
// recurrence.
void laguerre_pair(double alpha, int m, double x, double& value, double& prev) {
  double p0 = 1.0;
  double p1 = 1.0 + alpha - x;
  if (m == 0) {
    value = p0;
    prev = 0.0;
    return;
  }
  for (int j = 1; j < m; ++j) {
    const double p2 =
        ((2.0 * j + 1.0 + alpha - x) * p1 - (j + alpha) * p0) / (j + 1.0);
    p0 = p1;
    p1 = p2;
  }
  value = p1;
  prev = p0;
}

}  // namespace

GaussLaguerreRule gauss_laguerre(double alpha, int point_count) {
  if (point_count < 1)
    throw std::invalid_argument("gauss_laguerre: need at least one point");
  if (!(alpha > -1.0))
    throw std::invalid_argument("gauss_laguerre: alpha must exceed -1");

  GaussLaguerreRule rule;
  rule.alpha = alpha;
  rule.nodes.resize(static_cast<std::size_t>(point_count));
  rule.weights.resize(static_cast<std::size_t>(point_count));

  const int m = point_count;
  const double log_norm = std::lgamma(alpha + m) - std::lgamma(double(m));
  double z = 0.0;
  for (int i = 0; i < m; ++i) {
    // Stroud-Secrest style initial guesses, then Newton.
    if (i == 0) {
      z = (1.0 + alpha) * (3.0 + 0.92 * alpha) / (1.0 + 2.4 * m + 1.8 * alpha);
    } else if (i == 1) {
      z += (15.0 + 6.25 * alpha) / (1.0 + 0.9 * alpha + 2.5 * m);
    } else {
      const double ai = i - 1;
      z += ((1.0 + 2.55 * ai) / (1.9 * ai) +
            1.26 * ai * alpha / (1.0 + 3.5 * ai)) *
           (z - rule.nodes[static_cast<std::size_t>(i - 2)]) /
           (1.0 + 0.3 * alpha);
    }
    double value = 0.0, prev = 0.0, slope = 0.0;
    bool settled = false;
    for (int iter = 0; iter < 100; ++iter) {
      laguerre_pair(alpha, m, z, value, prev);
      slope = (m * value - (m + alpha) * prev) / z;
      const double step = value / slope;
      z -= step;
      if (std::abs(step) <= 1e-15 * (1.0 + std::abs(z))) {
        settled = true;
        break;
      }
    }
    if (!settled)
      throw std::runtime_error("gauss_laguerre: Newton iteration did not settle");
    laguerre_pair(alpha, m, z, value, prev);
    slope = (m * value - (m + alpha) * prev) / z;
    rule.nodes[static_cast<std::size_t>(i)] = z;
    rule.weights[static_cast<std::size_t>(i)] =
        -std::exp(log_norm) / (slope * m * prev);
  }
  return rule;
}

}  // namespace u1kepler::quadrature
