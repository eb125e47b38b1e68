#include "u1kepler/radial.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "u1kepler/finite_difference.hpp"
#include "u1kepler/quadrature.hpp"

namespace u1kepler::radial {

double laguerre(double alpha, long long m, double t) {
  if (m < 0) throw std::invalid_argument("laguerre: degree must be >= 0");
  if (m == 0) return 1.0;
  double p0 = 1.0;
  double p1 = 1.0 + alpha - t;
  for (long long j = 1; j < m; ++j) {
    const double p2 =
        ((2.0 * j + 1.0 + alpha - t) * p1 - (j + alpha) * p0) / (j + 1.0);
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

Rat radial_coefficient(long long l, const ProblemParams& params) {
  const Rat L = Rat(2 * l + params.abs_sigma(), 2);  // l + |s|/2
  return L * L + (params.n - 1) * L + Rat(4 * params.n - 5, 16);
}

double normalization_constant_scaled(long long k, long long l,
                                     const ProblemParams& params, double scale) {
  if (k < 1) throw std::invalid_argument("normalization_constant: k must be >= 1");
  if (l < 0) throw std::invalid_argument("normalization_constant: l must be >= 0");
  if (!(scale > 0.0))
    throw std::invalid_argument("normalization_constant: scale must be positive");
  const long long alpha = 2 * l + params.abs_sigma() + params.n - 1;
  // squared norm = c^2 (scale/2)^{alpha+2} ((2k-1+alpha)/2)
  //                 * Gamma(k+alpha)/Gamma(k),
  // using int_0^inf t^{alpha+1} e^{-t} [L^alpha_{k-1}]^2 dt
  //       = (2k-1+alpha) Gamma(k+alpha)/(k-1)!.
  const double log_norm_sq = (alpha + 2) * std::log(scale / 2.0) +
                             std::log((2.0 * k - 1.0 + alpha) / 2.0) +
                             std::lgamma(double(k + alpha)) -
                             std::lgamma(double(k));
  return std::exp(-0.5 * log_norm_sq);
}

double normalization_constant(long long k, long long l,
                              const ProblemParams& params) {
  const double scale =
      0.5 * (2.0 * (k - 1 + l) + params.n + params.abs_sigma());
  return normalization_constant_scaled(k, l, params, scale);
}

RadialEigenfunction::RadialEigenfunction(long long k, long long l,
                                         const ProblemParams& params)
    : k_(k), l_(l), params_(params) {
  if (k < 1) throw std::invalid_argument("RadialEigenfunction: k must be >= 1");
  if (l < 0) throw std::invalid_argument("RadialEigenfunction: l must be >= 0");
  scale_ = to_double(principal_scale());
  norm_const_ = normalization_constant_scaled(k_, l_, params_, scale_);
}

long long RadialEigenfunction::harmonic_degree() const {
  return 2 * l_ + params_.abs_sigma();
}

long long RadialEigenfunction::laguerre_alpha() const {
  return harmonic_degree() + params_.n - 1;
}

Rat RadialEigenfunction::principal_scale() const {
  return Rat(2 * level_index() + params_.n + params_.abs_sigma(), 2);
}

Rat RadialEigenfunction::energy() const {
  const Rat twice_scale = 2 * principal_scale();
  return Rat(-2) / (twice_scale * twice_scale);
}

double RadialEigenfunction::operator()(double rho) const {
  const double t = 2.0 * rho * rho / scale_;
  return norm_const_ * std::pow(rho, harmonic_degree() + 1.5) *
         laguerre(double(laguerre_alpha()), k_ - 1, t) *
         std::exp(-rho * rho / scale_);
}

std::vector<double> default_residual_grid(const RadialEigenfunction& f,
                                          int point_count) {
  if (point_count < 2)
    throw std::invalid_argument("default_residual_grid: need >= 2 points");
  const double root = std::sqrt(f.principal_scale_value());
  const double lo = 0.3 * root;
  const double hi = 3.0 * root;
  std::vector<double> grid(static_cast<std::size_t>(point_count));
  for (int i = 0; i < point_count; ++i)
    grid[static_cast<std::size_t>(i)] =
        lo + (hi - lo) * double(i) / double(point_count - 1);
  return grid;
}

double radial_operator_residual(const std::function<double(double)>& f,
                                long long l, const ProblemParams& params,
                                double energy_value,
                                std::span<const double> grid, double h) {
  if (grid.empty())
    throw std::invalid_argument("radial_operator_residual: empty grid");
  if (!(h > 0.0))
    throw std::invalid_argument("radial_operator_residual: step must be positive");
  const double lo = *std::min_element(grid.begin(), grid.end());
  if (lo < 5.0 * h)
    throw std::invalid_argument(
        "radial_operator_residual: step too large for grid (need rho >= 5h)");

  const int n = params.n;
  const double coeff = to_double(radial_coefficient(l, params));
  const auto g = [&f](double rho) { return f(rho) / rho; };

  double worst = 0.0;
  double amplitude = 0.0;
  for (const double rho : grid) {
    const double value = f(rho);
    const double g1 = fd::deriv1(g, rho, h);
    const double g2 = fd::deriv2(g, rho, h);
    // -(1/(8 rho^{2n-1})) d(rho^{2n-2} d(f/rho)) expands to
    // -(1/8) (g''/rho + (2n-2) g'/rho^2).
    const double applied = -(g2 / rho + (2.0 * n - 2.0) * g1 / (rho * rho)) / 8.0 +
                           coeff * value / (2.0 * std::pow(rho, 4)) -
                           value / (rho * rho);
    worst = std::max(worst, std::abs(applied - energy_value * value));
    amplitude = std::max(amplitude, std::abs(value));
  }
  return worst / amplitude;
}

double radial_operator_residual(const RadialEigenfunction& f,
                                std::span<const double> grid, double h) {
  return radial_operator_residual([&f](double rho) { return f(rho); }, f.l(),
                                  f.params(), to_double(f.energy()), grid, h);
}

namespace {

struct GramIntegrandScales {
  double combined;  // 1/n_1 + 1/n_2
  double alpha;     // Lambda + n, the u-power after substitution
};

}  // namespace

std::vector<std::vector<double>> orthonormality_gram(long long l,
                                                     const ProblemParams& params,
                                                     long long k_max) {
  if (k_max < 1)
    throw std::invalid_argument("orthonormality_gram: k_max must be >= 1");
  std::vector<RadialEigenfunction> basis;
  basis.reserve(static_cast<std::size_t>(k_max));
  for (long long k = 1; k <= k_max; ++k) basis.emplace_back(k, l, params);

  const long long lambda = basis.front().harmonic_degree();
  const long long alpha_gl = lambda + params.n;
  const auto rule = quadrature::gauss_laguerre(double(alpha_gl),
                                               static_cast<int>(k_max) + 6);

  std::vector<std::vector<double>> gram(
      static_cast<std::size_t>(k_max),
      std::vector<double>(static_cast<std::size_t>(k_max), 0.0));
  for (long long i = 0; i < k_max; ++i) {
    for (long long j = i; j < k_max; ++j) {
      const RadialEigenfunction& fi = basis[static_cast<std::size_t>(i)];
      const RadialEigenfunction& fj = basis[static_cast<std::size_t>(j)];
      const double ni = fi.principal_scale_value();
      const double nj = fj.principal_scale_value();
      const double c = 1.0 / ni + 1.0 / nj;
      // f_i f_j rho^{2n-2} = c_i c_j rho^{2(Lambda+n)+1} P_i P_j e^{-c rho^2};
      // with u = c rho^2 the measure becomes u^{Lambda+n} e^{-u} du
      //   / (2 c^{Lambda+n+1}).
      const double prefactor = fi.norm_const() * fj.norm_const() /
                               (2.0 * std::pow(c, double(alpha_gl + 1)));
      const double alpha_poly = double(fi.laguerre_alpha());
      const double integral = rule.integrate([&](double u) {
        const double ti = 2.0 * u / (c * ni);
        const double tj = 2.0 * u / (c * nj);
        return laguerre(alpha_poly, fi.k() - 1, ti) *
               laguerre(alpha_poly, fj.k() - 1, tj);
      });
      const double entry = prefactor * integral;
      gram[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = entry;
      gram[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = entry;
    }
  }
  return gram;
}

std::vector<std::vector<double>> orthonormality_gram_adaptive(
    long long l, const ProblemParams& params, long long k_max, double abs_tol) {
  if (k_max < 1)
    throw std::invalid_argument("orthonormality_gram_adaptive: k_max must be >= 1");
  std::vector<RadialEigenfunction> basis;
  for (long long k = 1; k <= k_max; ++k) basis.emplace_back(k, l, params);

  std::vector<std::vector<double>> gram(
      static_cast<std::size_t>(k_max),
      std::vector<double>(static_cast<std::size_t>(k_max), 0.0));
  for (long long i = 0; i < k_max; ++i) {
    for (long long j = i; j < k_max; ++j) {
      const RadialEigenfunction& fi = basis[static_cast<std::size_t>(i)];
      const RadialEigenfunction& fj = basis[static_cast<std::size_t>(j)];
      // Cutoff where the shared Gaussian factor is ~1e-22 of its peak.
      const double c = 1.0 / fi.principal_scale_value() +
                       1.0 / fj.principal_scale_value();
      const double cutoff = std::sqrt(50.0 / c) + 10.0;
      const int measure = 2 * params.n - 2;
      const auto integrand = [&](double rho) {
        return fi(rho) * fj(rho) * std::pow(rho, measure);
      };
      const auto result =
          quadrature::integrate_adaptive(integrand, 1e-12, cutoff, abs_tol);
      if (!result.converged)
        throw std::runtime_error(
            "orthonormality_gram_adaptive: quadrature did not converge");
      gram[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = result.value;
      gram[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = result.value;
    }
  }
  return gram;
}

long long count_radial_nodes(const RadialEigenfunction& f) {
  // All zeros of L^alpha_{k-1}(t) lie below 2(2m + alpha + 2); map back to rho.
  const double t_max =
      2.0 * (2.0 * double(f.k() - 1) + double(f.laguerre_alpha()) + 2.0);
  const double rho_max = std::sqrt(t_max * f.principal_scale_value() / 2.0);
  const double rho_min = 1e-3 * std::sqrt(f.principal_scale_value());
  const int samples = 4000;
  long long flips = 0;
  int last_sign = 0;
  for (int i = 0; i <= samples; ++i) {
    const double rho = rho_min + (rho_max - rho_min) * double(i) / samples;
    const double value = f(rho);
    const int sign = value > 0.0 ? 1 : (value < 0.0 ? -1 : 0);
    if (sign == 0) continue;
    if (last_sign != 0 && sign != last_sign) ++flips;
    last_sign = sign;
  }
  return flips;
}

}  // namespace u1kepler::radial
