#include "u1kepler/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

namespace u1kepler::geometry {

namespace {

std::complex<double> hermitian_pairing(const std::vector<std::complex<double>>& z,
                                       const std::vector<std::complex<double>>& w) {
  if (z.size() != w.size() || z.empty())
    throw std::invalid_argument("tangent sample: dimension mismatch");
  std::complex<double> sum = 0.0;
  for (std::size_t i = 0; i < z.size(); ++i) sum += std::conj(z[i]) * w[i];
  return sum;
}

double norm_squared(const std::vector<std::complex<double>>& z) {
  double sum = 0.0;
  for (const auto& entry : z) sum += std::norm(entry);
  return sum;
}

double base_norm_squared(const TangentSample& sample) {
  const double value = norm_squared(sample.base);
  if (!(value > 0.0))
    throw std::invalid_argument("tangent sample: base point must be nonzero");
  return value;
}

}  // namespace

double fs_quadratic(const TangentSample& sample) {
  const double z2 = base_norm_squared(sample);
  const double w2 = norm_squared(sample.tangent);
  const double paired = std::norm(hermitian_pairing(sample.base, sample.tangent));
  return std::max(0.0, w2 / z2 - paired / (z2 * z2));
}

double metric_decomposition_residual(const TangentSample& sample) {
  const double z2 = base_norm_squared(sample);
  const double w2 = norm_squared(sample.tangent);
  if (w2 == 0.0) return 0.0;
  const std::complex<double> paired =
      hermitian_pairing(sample.base, sample.tangent);
  const double drho = paired.real() / std::sqrt(z2);
  const double vertical = paired.imag() / z2;
  const double rhs = drho * drho + z2 * (fs_quadratic(sample) + vertical * vertical);
  return std::abs(w2 - rhs) / w2;
}

double quotient_metric_eval(const TangentSample& sample) {
  const double z2 = base_norm_squared(sample);
  const std::complex<double> paired =
      hermitian_pairing(sample.base, sample.tangent);
  const double drho = paired.real() / std::sqrt(z2);
  return drho * drho + z2 * fs_quadratic(sample);
}

std::vector<TangentSample> random_samples(int n, int count, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("random_samples: n must be >= 1");
  if (count < 0) throw std::invalid_argument("random_samples: count must be >= 0");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<TangentSample> samples;
  samples.reserve(static_cast<std::size_t>(count));
  for (int s = 0; s < count; ++s) {
    TangentSample sample;
    sample.base.resize(static_cast<std::size_t>(n));
    sample.tangent.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      sample.base[static_cast<std::size_t>(i)] = {gauss(rng), gauss(rng)};
      sample.tangent[static_cast<std::size_t>(i)] = {gauss(rng), gauss(rng)};
    }
    if (norm_squared(sample.base) < 1e-6) {
      --s;  // resample the rare nearly-degenerate base point
      continue;
    }
    samples.push_back(std::move(sample));
  }
  return samples;
}

CheckReport metric_decomposition_check(int n, int count, std::uint64_t seed,
                                       double tolerance) {
  CheckReport report;
  report.suite = "metric-decomposition";
  double worst = 0.0;
  for (const TangentSample& sample : random_samples(n, count, seed))
    worst = std::max(worst, metric_decomposition_residual(sample));
  std::ostringstream lhs;
  lhs.precision(3);
  lhs << std::scientific << worst;
  std::ostringstream rhs;
  rhs.precision(3);
  rhs << std::scientific << "< " << tolerance;
  report.add("n=" + std::to_string(n) + " samples=" + std::to_string(count),
             lhs.str(), rhs.str(), worst < tolerance);
  return report;
}

}  // namespace u1kepler::geometry
