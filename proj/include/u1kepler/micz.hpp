// The n = 2 equivalence with the MICZ-Kepler problem: exact angular and
// spectral correspondences under mu = s/2, and a numerical check that the
// rho^{3/2}-conjugated Kepler radial operator matches the MICZ radial
// operator under r = rho^2.

#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "u1kepler/repcore.hpp"

namespace u1kepler::micz {

struct MiczParams {
  HalfInt mu;  // magnetic charge s/2
  HalfInt j;   // angular label, j >= |mu|, j - |mu| a nonnegative integer

  MiczParams(HalfInt mu_value, HalfInt j_value);

  Rat angular_eigenvalue() const;  // j(j+1) - mu^2, >= 0
};

struct SectorCorrespondence {
  MiczParams micz;
  Rat kepler_angular;   // twisted-Laplacian eigenvalue at (l, s, n=2)
  Rat micz_angular_x4;  // 4 (j(j+1) - mu^2)
  bool pass = false;
};

// mu = s/2, j = l + |mu|, and the exact factor-4 identity between the two
// angular eigenvalues.
SectorCorrespondence sector_correspondence(long long l, long long sigma_bar);

// For each I <= I_max: E_I(n=2, s) = -1/(2N^2) with N = I + 1 + |mu|, and
// level degeneracy (I+1)(I+1+|s|) = N^2 - mu^2, all exact.
CheckReport spectrum_correspondence(long long sigma_bar, long long I_max);

using TestFunction = std::function<double(double)>;

struct NamedTestFunction {
  std::string name;
  TestFunction fn;
};

// Fixed exponential-Gaussian family used by the conjugation suite.
const std::vector<NamedTestFunction>& conjugation_test_suite();

// rho grid on [0.55, 2.0]; the image interval r = rho^2 is [0.3025, 4].
std::vector<double> default_conjugation_grid(int point_count = 146);

// max over the grid of |LHS - RHS| / max |f(rho^2)| where
//   LHS(rho) = rho^{-3/2} (H_l [rho^{3/2} f(rho^2)])(rho)  (Kepler, n = 2)
//   RHS(rho) = (h_mu f)(rho^2)                             (MICZ, sector j)
// both applied through 4th-order stencils with step h.  Rejects test
// functions that are non-finite or fail a decay bounds check.
double conjugation_residual(const TestFunction& f, long long l,
                            long long sigma_bar, std::span<const double> rho_grid,
                            double h);

}  // namespace u1kepler::micz
