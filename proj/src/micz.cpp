#include "u1kepler/micz.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "u1kepler/finite_difference.hpp"
#include "u1kepler/radial.hpp"
#include "u1kepler/spectra.hpp"

namespace u1kepler::micz {

MiczParams::MiczParams(HalfInt mu_value, HalfInt j_value)
    : mu(mu_value), j(j_value) {
  const HalfInt abs_mu = abs(mu);
  if (j < abs_mu) throw std::invalid_argument("MiczParams: need j >= |mu|");
  const long long twice_gap = j.twice() - abs_mu.twice();
  if (twice_gap % 2 != 0)
    throw std::invalid_argument("MiczParams: j - |mu| must be an integer");
}

Rat MiczParams::angular_eigenvalue() const {
  const Rat jr = j.to_rat();
  const Rat mur = mu.to_rat();
  return jr * (jr + 1) - mur * mur;
}

SectorCorrespondence sector_correspondence(long long l, long long sigma_bar) {
  if (l < 0) throw std::invalid_argument("sector_correspondence: l must be >= 0");
  const long long abs_s = sigma_bar < 0 ? -sigma_bar : sigma_bar;
  MiczParams micz(HalfInt::from_twice(sigma_bar),
                  HalfInt::from_twice(2 * l + abs_s));
  const auto sector =
      repcore::sector_from_l(l, repcore::ProblemParams(2, sigma_bar));
  SectorCorrespondence out{micz, repcore::angular_laplacian_eigenvalue(sector),
                           4 * micz.angular_eigenvalue(), false};
  out.pass = out.kepler_angular == out.micz_angular_x4;
  return out;
}

CheckReport spectrum_correspondence(long long sigma_bar, long long I_max) {
  CheckReport report;
  report.suite = "micz-spectrum";
  const repcore::ProblemParams params(2, sigma_bar);
  const Rat mu = Rat(sigma_bar, 2);
  const std::string prefix = "sigma=" + std::to_string(sigma_bar) + " ";
  for (long long I = 0; I <= I_max; ++I) {
    const Rat big_n = I + 1 + (mu < 0 ? -mu : mu);
    const Rat micz_energy = Rat(-1) / (2 * big_n * big_n);
    const Rat kepler_energy = spectra::energy(I, params);
    report.add(prefix + "I=" + std::to_string(I) + " energy",
               to_string(kepler_energy), to_string(micz_energy),
               kepler_energy == micz_energy);

    const Int degeneracy = spectra::level_degeneracy(I, params);
    const Rat micz_degeneracy = big_n * big_n - mu * mu;
    report.add(prefix + "I=" + std::to_string(I) + " degeneracy",
               degeneracy.str(), to_string(micz_degeneracy),
               Rat(degeneracy) == micz_degeneracy);
  }
  return report;
}

const std::vector<NamedTestFunction>& conjugation_test_suite() {
  static const std::vector<NamedTestFunction> suite = {
      {"exp(-r)", [](double r) { return std::exp(-r); }},
      {"r*exp(-r^2)", [](double r) { return r * std::exp(-r * r); }},
      {"hydrogen-ground", [](double r) { return 2.0 * std::exp(-r); }},
      {"r^2*exp(-2r)", [](double r) { return r * r * std::exp(-2.0 * r); }},
      {"(1+r)*exp(-r^2/2)",
       [](double r) { return (1.0 + r) * std::exp(-0.5 * r * r); }},
  };
  return suite;
}

std::vector<double> default_conjugation_grid(int point_count) {
  if (point_count < 2)
    throw std::invalid_argument("default_conjugation_grid: need >= 2 points");
  const double lo = 0.55;
  const double hi = 2.0;
  std::vector<double> grid(static_cast<std::size_t>(point_count));
  for (int i = 0; i < point_count; ++i)
    grid[static_cast<std::size_t>(i)] =
        lo + (hi - lo) * double(i) / double(point_count - 1);
  return grid;
}

namespace {

void reject_unusable_test_function(const TestFunction& f, double r_max) {
  // Heuristic bounds check: finite on an extended window and decaying
  // beyond the working interval.
  double core_max = 0.0;
  double tail_max = 0.0;
  const int samples = 64;
  for (int i = 0; i <= samples; ++i) {
    const double r = 0.05 + (2.0 * r_max - 0.05) * double(i) / samples;
    const double value = f(r);
    if (!std::isfinite(value))
      throw std::invalid_argument("conjugation_residual: test function not finite");
    if (r <= r_max)
      core_max = std::max(core_max, std::abs(value));
    else
      tail_max = std::max(tail_max, std::abs(value));
  }
  if (tail_max > 0.9 * core_max)
    throw std::invalid_argument(
        "conjugation_residual: test function fails the decay bounds check");
}

}  // namespace

double conjugation_residual(const TestFunction& f, long long l,
                            long long sigma_bar, std::span<const double> rho_grid,
                            double h) {
  if (rho_grid.empty())
    throw std::invalid_argument("conjugation_residual: empty grid");
  if (!(h > 0.0))
    throw std::invalid_argument("conjugation_residual: step must be positive");
  const double rho_min =
      *std::min_element(rho_grid.begin(), rho_grid.end());
  const double rho_max =
      *std::max_element(rho_grid.begin(), rho_grid.end());
  if (rho_min < 5.0 * h || rho_min * rho_min < 5.0 * h)
    throw std::invalid_argument(
        "conjugation_residual: step too large for grid");
  reject_unusable_test_function(f, rho_max * rho_max);

  const repcore::ProblemParams params(2, sigma_bar);
  const double coeff = to_double(radial::radial_coefficient(l, params));
  const SectorCorrespondence match = sector_correspondence(l, sigma_bar);
  const double monopole_angular = to_double(match.micz.angular_eigenvalue());
  const double mu_sq = to_double(match.micz.mu.to_rat() * match.micz.mu.to_rat());

  // Kepler side, conjugated: rho^{-3/2} H_l [rho^{3/2} f(rho^2)].
  const auto inner = [&f](double x) { return std::pow(x, 1.5) * f(x * x); };
  const auto inner_over_rho = [&f](double x) { return std::sqrt(x) * f(x * x); };

  double worst = 0.0;
  double amplitude = 0.0;
  for (const double rho : rho_grid) {
    const double g1 = fd::deriv1(inner_over_rho, rho, h);
    const double g2 = fd::deriv2(inner_over_rho, rho, h);
    const double big_g = inner(rho);
    const double kepler =
        (-(g2 / rho + 2.0 * g1 / (rho * rho)) / 8.0 +
         coeff * big_g / (2.0 * std::pow(rho, 4)) - big_g / (rho * rho)) /
        std::pow(rho, 1.5);

    const double r = rho * rho;
    const double value = f(r);
    const double d1 = fd::deriv1(f, r, h);
    const double d2 = fd::deriv2(f, r, h);
    // -(1/2) Delta_A on the monopole sector, plus mu^2/(2r^2) - 1/r.
    const double micz_side =
        -0.5 * (d2 + 2.0 / r * d1 - monopole_angular * value / (r * r)) +
        mu_sq * value / (2.0 * r * r) - value / r;

    worst = std::max(worst, std::abs(kepler - micz_side));
    amplitude = std::max(amplitude, std::abs(value));
  }
  return worst / amplitude;
}

}  // namespace u1kepler::micz
