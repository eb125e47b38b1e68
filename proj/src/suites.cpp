#include "u1kepler/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "u1kepler/format.hpp"
#include "u1kepler/geometry.hpp"
#include "u1kepler/micz.hpp"
#include "u1kepler/oscillator.hpp"
#include "u1kepler/radial.hpp"
#include "u1kepler/repcore.hpp"
#include "u1kepler/spectra.hpp"

namespace u1kepler::suites {

namespace {

using repcore::ProblemParams;

void add_exact(CheckReport& report, std::string label, const Rat& lhs,
               const Rat& rhs) {
  report.add(std::move(label), to_string(lhs), to_string(rhs), lhs == rhs);
}

void add_bound(CheckReport& report, std::string label, double value,
               double bound) {
  report.add(std::move(label), format_double(value),
             "< " + format_double(bound), value < bound);
}

}  // namespace

CheckReport spectrum_spot_values() {
  CheckReport report;
  report.suite = "spectrum-spot-values";
  add_exact(report, "E_0(n=2,sigma=0)",
            spectra::energy(0, ProblemParams(2, 0)), Rat(-1, 2));
  add_exact(report, "E_2(n=3,sigma=1)",
            spectra::energy(2, ProblemParams(3, 1)), Rat(-1, 32));
  add_exact(report, "E_0(n=4,sigma=-3)",
            spectra::energy(0, ProblemParams(4, -3)), Rat(-2, 49));
  // The general closed form against an independently assembled rational.
  for (int n = 2; n <= 5; ++n) {
    for (long long s : {-3LL, 0LL, 2LL}) {
      for (long long I = 0; I <= 6; ++I) {
        const Rat half_sum = Rat(2 * I + n + (s < 0 ? -s : s), 2);
        add_exact(report,
                  "E_" + std::to_string(I) + "(n=" + std::to_string(n) +
                      ",sigma=" + std::to_string(s) + ")",
                  spectra::energy(I, ProblemParams(n, s)),
                  Rat(-1, 2) / (half_sum * half_sum));
      }
    }
  }
  return report;
}

CheckReport dimension_equality(int n_max, long long k_max) {
  CheckReport report;
  report.suite = "dimension-equality";
  for (int n = 2; n <= n_max; ++n)
    report.merge(repcore::verify_dimension_equality(n, k_max));
  return report;
}

CheckReport generating_function(int n_max, long long k_max) {
  CheckReport report;
  report.suite = "generating-function";
  for (int n = 2; n <= n_max; ++n)
    report.merge(repcore::verify_generating_function(n, k_max));
  return report;
}

CheckReport ktype_dimensions(int n_max, long long sigma_max, long long i_max) {
  CheckReport report;
  report.suite = "ktype-dimensions";
  for (int n = 2; n <= n_max; ++n)
    for (long long s = -sigma_max; s <= sigma_max; ++s)
      report.merge(spectra::verify_ktype_dimensions(ProblemParams(n, s), i_max));
  return report;
}

CheckReport casimir_consistency(long long l_max, long long sigma_max, int n_max) {
  CheckReport report;
  report.suite = "casimir-consistency";
  for (int n = 2; n <= n_max; ++n) {
    for (long long s = -sigma_max; s <= sigma_max; ++s) {
      const ProblemParams params(n, s);
      for (long long l = 0; l <= l_max; ++l) {
        const auto sector = repcore::sector_from_l(l, params);
        const std::string label = "n=" + std::to_string(n) +
                                  " sigma=" + std::to_string(s) +
                                  " l=" + std::to_string(l);
        // Casimir route vs the closed form 4pq + 2(n-1)(p+q).
        add_exact(report, label + " angular",
                  repcore::angular_laplacian_eigenvalue(sector),
                  Rat(repcore::angular_eigenvalue_closed_form(sector.p,
                                                              sector.q, n)));
        // L-form: (angular + s^2 + (n - 5/4)) = 4 (L^2 + (n-1)L + (n-5/4)/4),
        // i.e. the separated radial coefficient times 4.
        const Rat lhs = sector.angular_eigenvalue + Rat(s) * s + Rat(4 * n - 5, 4);
        add_exact(report, label + " radial-coefficient", lhs,
                  4 * radial::radial_coefficient(l, params));
      }
    }
  }
  return report;
}

CheckReport radial_residuals(int n_max, long long sigma_max, long long k_max,
                             long long l_max, double tolerance) {
  CheckReport report;
  report.suite = "radial-residuals";
  for (int n = 2; n <= n_max; ++n) {
    for (long long s = -sigma_max; s <= sigma_max; ++s) {
      for (long long k = 1; k <= k_max; ++k) {
        for (long long l = 0; l <= l_max; ++l) {
          const radial::RadialEigenfunction f(k, l, ProblemParams(n, s));
          const auto grid = radial::default_residual_grid(f);
          const double residual =
              radial::radial_operator_residual(f, grid, radial::kDefaultStep);
          add_bound(report,
                    "n=" + std::to_string(n) + " sigma=" + std::to_string(s) +
                        " k=" + std::to_string(k) + " l=" + std::to_string(l),
                    residual, tolerance);
        }
      }
    }
  }
  return report;
}

CheckReport orthonormality(long long k_max, double tolerance) {
  CheckReport report;
  report.suite = "orthonormality";
  for (int n = 2; n <= 4; ++n) {
    for (long long s = -2; s <= 3; ++s) {
      for (long long l = 0; l <= 2; ++l) {
        const auto gram = radial::orthonormality_gram(l, ProblemParams(n, s), k_max);
        double worst = 0.0;
        for (std::size_t i = 0; i < gram.size(); ++i)
          for (std::size_t j = 0; j < gram.size(); ++j)
            worst = std::max(worst,
                             std::abs(gram[i][j] - (i == j ? 1.0 : 0.0)));
        add_bound(report,
                  "n=" + std::to_string(n) + " sigma=" + std::to_string(s) +
                      " l=" + std::to_string(l) + " k<=" + std::to_string(k_max),
                  worst, tolerance);
      }
    }
  }
  return report;
}

CheckReport oscillator_correspondence(double residual_tolerance) {
  CheckReport report;
  report.suite = "oscillator-correspondence";
  // Eigen-equation residuals over the radial acceptance ranges.
  const auto grid = oscillator::default_residual_grid();
  for (int n = 2; n <= 4; ++n) {
    for (long long s = -4; s <= 4; ++s) {
      for (long long k = 1; k <= 4; ++k) {
        for (long long l = 0; l <= 3; ++l) {
          const radial::RadialEigenfunction f(k, l, ProblemParams(n, s));
          const auto profile = oscillator::twist(f);
          const double residual =
              oscillator::oscillator_residual(profile, grid, radial::kDefaultStep);
          add_bound(report,
                    "residual n=" + std::to_string(n) +
                        " sigma=" + std::to_string(s) + " k=" + std::to_string(k) +
                        " l=" + std::to_string(l),
                    residual, residual_tolerance);
        }
      }
    }
  }
  // Exact harmonic-degree identity over all sectors p, q <= 12, n <= 6.
  for (int n = 2; n <= 6; ++n) {
    bool all = true;
    for (long long p = 0; p <= 12 && all; ++p)
      for (long long q = 0; q <= 12 && all; ++q)
        all = oscillator::harmonic_degree_check(repcore::sector_from_pq(p, q, n));
    report.add("harmonic-degree n=" + std::to_string(n) + " p,q<=12",
               all ? "exact" : "violated", "exact", all);
  }
  // Shell eigenvalues and dimension counts.
  for (int n = 2; n <= 5; ++n)
    report.merge(oscillator::shell_eigenvalue_check(n, 30));
  return report;
}

CheckReport micz_equivalence(long long sigma_max, long long i_max,
                             double residual_tolerance) {
  CheckReport report;
  report.suite = "micz-equivalence";
  for (long long s = -sigma_max; s <= sigma_max; ++s) {
    for (long long l = 0; l <= 12; ++l) {
      const auto match = micz::sector_correspondence(l, s);
      report.add("sector sigma=" + std::to_string(s) + " l=" + std::to_string(l),
                 to_string(match.kepler_angular), to_string(match.micz_angular_x4),
                 match.pass);
    }
    report.merge(micz::spectrum_correspondence(s, i_max));
  }
  const auto grid = micz::default_conjugation_grid();
  for (const auto& test : micz::conjugation_test_suite()) {
    for (long long s = -4; s <= 4; ++s) {
      for (long long l = 0; l <= 2; ++l) {
        const double residual = micz::conjugation_residual(
            test.fn, l, s, grid, radial::kDefaultStep);
        add_bound(report,
                  "conjugation " + test.name + " sigma=" + std::to_string(s) +
                      " l=" + std::to_string(l),
                  residual, residual_tolerance);
      }
    }
  }
  return report;
}

CheckReport metric_decomposition(int samples_per_n, double tolerance,
                                 std::uint64_t seed) {
  CheckReport report;
  report.suite = "metric-decomposition";
  for (int n = 2; n <= 5; ++n)
    report.merge(
        geometry::metric_decomposition_check(n, samples_per_n, seed, tolerance));
  return report;
}

CheckReport hydrogen_regression(long long big_n_max) {
  CheckReport report;
  report.suite = "hydrogen-regression";
  const ProblemParams hydrogen(2, 0);
  for (long long big_n = 1; big_n <= big_n_max; ++big_n) {
    const long long I = big_n - 1;
    add_exact(report, "E(N=" + std::to_string(big_n) + ")",
              spectra::energy(I, hydrogen), Rat(-1) / (2 * Rat(big_n) * big_n));
    report.add("degeneracy(N=" + std::to_string(big_n) + ")",
               spectra::level_degeneracy(I, hydrogen).str(),
               Int(big_n * big_n).str(),
               spectra::level_degeneracy(I, hydrogen) == Int(big_n * big_n));
  }
  return report;
}

std::vector<SuiteResult> run_all(const Tolerances& tol) {
  std::vector<SuiteResult> results;
  const auto timed = [&results](const std::string& name, auto&& make) {
    const auto start = std::chrono::steady_clock::now();
    CheckReport report = make();
    const auto stop = std::chrono::steady_clock::now();
    results.push_back(
        {name, std::move(report),
         std::chrono::duration<double>(stop - start).count()});
  };
  timed("spectrum-spot-values", [] { return spectrum_spot_values(); });
  timed("dimension-equality", [] { return dimension_equality(); });
  timed("generating-function", [] { return generating_function(); });
  timed("ktype-dimensions", [] { return ktype_dimensions(); });
  timed("casimir-consistency", [] { return casimir_consistency(); });
  timed("radial-residuals",
        [&tol] { return radial_residuals(4, 4, 4, 3, tol.radial_residual); });
  timed("orthonormality", [&tol] { return orthonormality(6, tol.gram_deviation); });
  timed("oscillator-correspondence",
        [&tol] { return oscillator_correspondence(tol.oscillator_residual); });
  timed("micz-equivalence",
        [&tol] { return micz_equivalence(8, 10, tol.micz_residual); });
  timed("metric-decomposition",
        [&tol] { return metric_decomposition(1000, tol.metric_residual); });
  timed("hydrogen-regression", [] { return hydrogen_regression(); });
  return results;
}

}  // namespace u1kepler::suites
