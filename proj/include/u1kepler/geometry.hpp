// Pointwise checks of the Euclidean metric decomposition on C^n \ {0}:
// |dZ|^2 = drho^2 + rho^2 (ds_FS^2 + (Im(Zbar.dZ)/|Z|^2)^2), the
// Fubini-Study quadratic form, and the quotient metric drho^2 + rho^2 ds_FS^2.

#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "u1kepler/report.hpp"

namespace u1kepler::geometry {

struct TangentSample {
  std::vector<std::complex<double>> base;     // Z, nonzero
  std::vector<std::complex<double>> tangent;  // W
};

// Fubini-Study quadratic form |W|^2/|Z|^2 - |<Z,W>|^2/|Z|^4 evaluated on
// the tangent vector; zero exactly on the complex line through Z.
double fs_quadratic(const TangentSample& sample);

// |LHS - RHS| / |W|^2 for the metric decomposition identity, with
// drho(W) = Re(<Z,W>)/|Z|.
double metric_decomposition_residual(const TangentSample& sample);

// drho(W)^2 + |Z|^2 * fs_quadratic(W); vanishes exactly on the vertical
// direction span_R{iZ}.
double quotient_metric_eval(const TangentSample& sample);

// Standard-normal samples with a fixed seed, reproducible per (n, seed).
std::vector<TangentSample> random_samples(int n, int count, std::uint64_t seed);

inline constexpr std::uint64_t kDefaultSeed = 20240517;

// Decomposition residual over `count` random samples in C^n.
CheckReport metric_decomposition_check(int n, int count, std::uint64_t seed,
                                       double tolerance);

}  // namespace u1kepler::geometry
