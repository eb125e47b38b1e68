// Twist of the Kepler radial profiles into 2n-dimensional isotropic
// harmonic-oscillator eigenfunctions: r -> c_I r^{-3/2} R(sqrt(n_I/2) r),
// with eigenvalue 2I + |s| + n, harmonic degree 2l + |s|, and shell
// bookkeeping against the oscillator degeneracies.

#pragma once

#include <functional>
#include <span>
#include <vector>

#include "u1kepler/radial.hpp"
#include "u1kepler/spectra.hpp"

namespace u1kepler::oscillator {

class OscillatorProfile {
 public:
  explicit OscillatorProfile(radial::RadialEigenfunction source);

  const radial::RadialEigenfunction& source() const { return source_; }
  long long harmonic_degree() const { return source_.harmonic_degree(); }
  Rat eigenvalue() const;        // 2I + |s| + n, exact
  double twist_constant() const { return twist_constant_; }

  // Smooth closed form A r^Lambda L^alpha_{k-1}(r^2) e^{-r^2/2}; extends
  // through r = 0.
  double operator()(double r) const;

  // Literal composition c_I r^{-3/2} R(sqrt(n_I/2) r), defined for r > 0;
  // agrees with operator() wherever both are defined.
  double twisted_composition(double r) const;

 private:
  radial::RadialEigenfunction source_;
  double amplitude_;
  double twist_constant_;
};

OscillatorProfile twist(const radial::RadialEigenfunction& f);

// Twist image of the default radial window: [0.3, 3.0] * sqrt(2),
// independent of n_I.
std::vector<double> default_residual_grid(int point_count = 181);

// max_grid |(Op T)(r) - E T(r)| / max_grid |T| for the radially reduced
// oscillator operator
//   -(1/2)(T'' + ((2n-1)/r) T' - Lambda(Lambda+2n-2) T / r^2) + (1/2) r^2 T.
double oscillator_residual(const std::function<double(double)>& profile, int n,
                           long long lambda, double eigenvalue,
                           std::span<const double> grid, double h);

double oscillator_residual(const OscillatorProfile& profile,
                           std::span<const double> grid, double h);

// Exact identity Lambda(Lambda + 2n - 2) = angular eigenvalue + s^2 with
// Lambda = 2l + |s|: the twisted sector sits in degree-Lambda spherical
// harmonics on S^{2n-1}.
bool harmonic_degree_check(const repcore::AngularSector& sector);

// Every (s, I) contributing to oscillator shell k has eigenvalue k + n;
// the dimension count per shell is delegated to the spectra bookkeeping.
CheckReport shell_eigenvalue_check(int n, long long k_max);

}  // namespace u1kepler::oscillator
