// Canned verification suites with pinned parameter ranges and tolerances.
// `run_all` is the full gate used by the acceptance binary and by
// `u1kepler verify --suite all`.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "u1kepler/report.hpp"

namespace u1kepler::suites {

struct Tolerances {
  double radial_residual = 1e-7;
  double oscillator_residual = 1e-7;
  double gram_deviation = 1e-8;
  double micz_residual = 1e-6;
  double metric_residual = 1e-12;
};

CheckReport spectrum_spot_values();
CheckReport dimension_equality(int n_max = 6, long long k_max = 30);
CheckReport generating_function(int n_max = 5, long long k_max = 30);
CheckReport ktype_dimensions(int n_max = 5, long long sigma_max = 6,
                             long long i_max = 10);
CheckReport casimir_consistency(long long l_max = 10, long long sigma_max = 6,
                                int n_max = 6);
CheckReport radial_residuals(int n_max = 4, long long sigma_max = 4,
                             long long k_max = 4, long long l_max = 3,
                             double tolerance = 1e-7);
CheckReport orthonormality(long long k_max = 6, double tolerance = 1e-8);
CheckReport oscillator_correspondence(double residual_tolerance = 1e-7);
CheckReport micz_equivalence(long long sigma_max = 8, long long i_max = 10,
                             double residual_tolerance = 1e-6);
CheckReport metric_decomposition(int samples_per_n = 1000,
                                 double tolerance = 1e-12,
                                 std::uint64_t seed = 20240517);
CheckReport hydrogen_regression(long long big_n_max = 11);

struct SuiteResult {
  std::string name;
  CheckReport report;
  double seconds = 0.0;
};

std::vector<SuiteResult> run_all(const Tolerances& tol = {});

}  // namespace u1kepler::suites
