#include "u1kepler/oscillator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "u1kepler/finite_difference.hpp"

namespace u1kepler::oscillator {

OscillatorProfile::OscillatorProfile(radial::RadialEigenfunction source)
    : source_(std::move(source)) {
  const long long k = source_.k();
  const long long alpha = source_.laguerre_alpha();
  // Unit norm in L^2(R_+, r^{2n-1} dr):
  // integral A^2 r^{2 Lambda + 2n - 1} [L^alpha_{k-1}(r^2)]^2 e^{-r^2} dr
  //   = A^2 Gamma(k+alpha) / (2 (k-1)!).
  amplitude_ = std::exp(
      0.5 * (std::log(2.0) + std::lgamma(double(k)) - std::lgamma(double(k + alpha))));
  const double half_scale = 0.5 * source_.principal_scale_value();
  twist_constant_ =
      amplitude_ / (source_.norm_const() *
                    std::pow(half_scale, 0.5 * source_.harmonic_degree() + 0.75));
}

Rat OscillatorProfile::eigenvalue() const {
  return Rat(2 * source_.level_index() + source_.params().abs_sigma() +
             source_.params().n);
}

double OscillatorProfile::operator()(double r) const {
  return amplitude_ * std::pow(r, double(harmonic_degree())) *
         radial::laguerre(double(source_.laguerre_alpha()), source_.k() - 1,
                          r * r) *
         std::exp(-0.5 * r * r);
}

double OscillatorProfile::twisted_composition(double r) const {
  if (!(r > 0.0))
    throw std::invalid_argument("twisted_composition: r must be positive");
  const double stretched = std::sqrt(0.5 * source_.principal_scale_value()) * r;
  return twist_constant_ * std::pow(r, -1.5) * source_(stretched);
}

OscillatorProfile twist(const radial::RadialEigenfunction& f) {
  return OscillatorProfile(f);
}

std::vector<double> default_residual_grid(int point_count) {
  if (point_count < 2)
    throw std::invalid_argument("default_residual_grid: need >= 2 points");
  const double lo = 0.3 * std::sqrt(2.0);
  const double hi = 3.0 * std::sqrt(2.0);
  std::vector<double> grid(static_cast<std::size_t>(point_count));
  for (int i = 0; i < point_count; ++i)
    grid[static_cast<std::size_t>(i)] =
        lo + (hi - lo) * double(i) / double(point_count - 1);
  return grid;
}

double oscillator_residual(const std::function<double(double)>& profile, int n,
                           long long lambda, double eigenvalue,
                           std::span<const double> grid, double h) {
  if (grid.empty())
    throw std::invalid_argument("oscillator_residual: empty grid");
  if (!(h > 0.0))
    throw std::invalid_argument("oscillator_residual: step must be positive");
  const double lo = *std::min_element(grid.begin(), grid.end());
  if (lo < 5.0 * h)
    throw std::invalid_argument(
        "oscillator_residual: step too large for grid (need r >= 5h)");

  const double centrifugal = double(lambda * (lambda + 2 * n - 2));
  double worst = 0.0;
  double amplitude = 0.0;
  for (const double r : grid) {
    const double value = profile(r);
    const double d1 = fd::deriv1(profile, r, h);
    const double d2 = fd::deriv2(profile, r, h);
    const double applied =
        -0.5 * (d2 + (2.0 * n - 1.0) / r * d1 - centrifugal * value / (r * r)) +
        0.5 * r * r * value;
    worst = std::max(worst, std::abs(applied - eigenvalue * value));
    amplitude = std::max(amplitude, std::abs(value));
  }
  return worst / amplitude;
}

double oscillator_residual(const OscillatorProfile& profile,
                           std::span<const double> grid, double h) {
  return oscillator_residual([&profile](double r) { return profile(r); },
                             profile.source().params().n,
                             profile.harmonic_degree(),
                             to_double(profile.eigenvalue()), grid, h);
}

bool harmonic_degree_check(const repcore::AngularSector& sector) {
  const long long s = sector.sigma_bar();
  const long long abs_s = s < 0 ? -s : s;
  const long long lambda = 2 * sector.l + abs_s;
  const Rat lhs = Rat(lambda) * (lambda + 2 * sector.n - 2);
  const Rat rhs = repcore::angular_laplacian_eigenvalue(sector) + Rat(s) * s;
  return lhs == rhs;
}

CheckReport shell_eigenvalue_check(int n, long long k_max) {
  if (n < 2) throw std::invalid_argument("shell_eigenvalue_check: n must be >= 2");
  CheckReport report;
  report.suite = "oscillator-shells";
  for (long long k = 0; k <= k_max; ++k) {
    bool eigenvalues_match = true;
    for (long long s = -k; s <= k && eigenvalues_match; ++s) {
      const long long abs_s = s < 0 ? -s : s;
      if ((k - abs_s) % 2 != 0) continue;
      const long long level = (k - abs_s) / 2;
      const Rat value = Rat(2 * level + abs_s + n);
      eigenvalues_match = value == Rat(k + n);
    }
    report.add("n=" + std::to_string(n) + " shell k=" + std::to_string(k) +
                   " eigenvalue",
               eigenvalues_match ? std::to_string(k + n) : "mismatch",
               std::to_string(k + n), eigenvalues_match);
    report.merge(spectra::oscillator_shell_check(n, k));
  }
  return report;
}

}  // namespace u1kepler::oscillator
