// Closed-form radial bound-state profiles: associated Laguerre evaluators,
// analytic unit-norm constants with quadrature cross-checks, and a
// finite-difference residual certifying that each profile solves the
// separated radial equation.

#pragma once

#include <functional>
#include <span>
#include <vector>

#include "u1kepler/repcore.hpp"

namespace u1kepler::radial {

using repcore::ProblemParams;

inline constexpr double kDefaultStep = 1e-3;

// Generalized Laguerre polynomial L^alpha_m(t) by the three-term upward
// recurrence L^a_{j+1} = ((2j+1+a-t) L^a_j - (j+a) L^a_{j-1}) / (j+1).
double laguerre(double alpha, long long m, double t);

// Separated radial coefficient (l + |s|/2)^2 + (n-1)(l + |s|/2) + (4n-5)/16,
// exact.
Rat radial_coefficient(long long l, const ProblemParams& params);

// Unit-norm constant for the profile family
//   rho^{Lambda + 3/2} L^alpha_{k-1}(2 rho^2 / scale) exp(-rho^2 / scale)
// in L^2(R_+, rho^{2n-2} drho), for an arbitrary positive scale.
double normalization_constant_scaled(long long k, long long l,
                                     const ProblemParams& params, double scale);

// Same with the eigenfunction's own scale n_I = I + (n+|s|)/2.
double normalization_constant(long long k, long long l,
                              const ProblemParams& params);

// Bound-state radial profile with quantum numbers k >= 1, l >= 0:
//   R(rho) = c * rho^{2l+|s|+3/2} L^{2l+|s|+n-1}_{k-1}(2 rho^2/n_I)
//              * exp(-rho^2/n_I),
// normalized to 1 in L^2(R_+, rho^{2n-2} drho) with c > 0.
class RadialEigenfunction {
 public:
  RadialEigenfunction(long long k, long long l, const ProblemParams& params);

  long long k() const { return k_; }
  long long l() const { return l_; }
  const ProblemParams& params() const { return params_; }
  long long level_index() const { return k_ - 1 + l_; }      // I
  long long harmonic_degree() const;                         // 2l + |s|
  long long laguerre_alpha() const;                          // 2l + |s| + n - 1
  Rat principal_scale() const;                               // n_I, exact
  double principal_scale_value() const { return scale_; }
  double norm_const() const { return norm_const_; }
  Rat energy() const;

  double operator()(double rho) const;

 private:
  long long k_;
  long long l_;
  ProblemParams params_;
  double scale_;
  double norm_const_;
};

// Uniform grid on [0.3, 3.0] * sqrt(n_I), the default residual window away
// from the coordinate singularity and the exponential tail.
std::vector<double> default_residual_grid(const RadialEigenfunction& f,
                                          int point_count = 181);

// max_grid |(Op f)(rho) - E f(rho)| / max_grid |f|, where Op is the
// separated radial operator
//   -(1/(8 rho^{2n-1})) d/drho rho^{2n-2} d/drho (1/rho)
//   + coeff/(2 rho^4) - 1/rho^2
// applied through 4th-order central stencils with step h.
double radial_operator_residual(const std::function<double(double)>& f,
                                long long l, const ProblemParams& params,
                                double energy_value,
                                std::span<const double> grid, double h);

double radial_operator_residual(const RadialEigenfunction& f,
                                std::span<const double> grid, double h);

// Gram matrix of the profiles k = 1..k_max in the fixed sector l, under
// the measure rho^{2n-2} drho.  Gauss-Laguerre after u = c rho^2 is exact
// for these integrands.
std::vector<std::vector<double>> orthonormality_gram(long long l,
                                                     const ProblemParams& params,
                                                     long long k_max);

// Same matrix by adaptive Simpson on a truncated interval; throws if the
// integrator fails to converge.
std::vector<std::vector<double>> orthonormality_gram_adaptive(
    long long l, const ProblemParams& params, long long k_max,
    double abs_tol = 1e-12);

// Number of interior sign changes of the profile; equals k - 1.
long long count_radial_nodes(const RadialEigenfunction& f);

}  // namespace u1kepler::radial
