#include "u1kepler/spectra.hpp"

#include <stdexcept>

namespace u1kepler::spectra {

Rat energy(long long I, const ProblemParams& params) {
  if (I < 0) throw std::invalid_argument("energy: I must be >= 0");
  const long long denom = 2 * I + params.n + params.abs_sigma();
  return Rat(-2) / (Rat(denom) * denom);
}

Int level_degeneracy(long long I, const ProblemParams& params) {
  if (I < 0) throw std::invalid_argument("level_degeneracy: I must be >= 0");
  Int sum = 0;
  for (long long l = 0; l <= I; ++l)
    sum += repcore::sector_from_l(l, params).dim;
  return sum;
}

namespace {

HighestWeight conjugate_type_weight(long long a, int n) {
  // (-1/2, ..., -1/2, -(1/2 + a))
  std::vector<HalfInt> entries(static_cast<std::size_t>(n),
                               HalfInt::from_twice(-1));
  entries.back() = HalfInt::from_twice(-(1 + 2 * a));
  return HighestWeight(std::move(entries));
}

HighestWeight holomorphic_type_weight(long long b, int n) {
  // (1/2 + b, 1/2, ..., 1/2)
  std::vector<HalfInt> entries(static_cast<std::size_t>(n),
                               HalfInt::from_twice(1));
  entries.front() = HalfInt::from_twice(1 + 2 * b);
  return HighestWeight(std::move(entries));
}

}  // namespace

std::pair<HighestWeight, HighestWeight> ktype_pair(long long I,
                                                   const ProblemParams& params) {
  if (I < 0) throw std::invalid_argument("ktype_pair: I must be >= 0");
  // a indexes the conjugate factor, b the holomorphic one; the two level
  // indices swap roles under sigma_bar -> -sigma_bar.
  long long a = I;
  long long b = I + params.abs_sigma();
  if (params.sigma_bar < 0) std::swap(a, b);
  return {conjugate_type_weight(a, params.n),
          holomorphic_type_weight(b, params.n)};
}

std::vector<HalfInt> hw_label(const ProblemParams& params) {
  const int n = params.n;
  if (params.sigma_bar < 0) {
    // Exact mirror: negate and reverse the label of -sigma_bar.
    std::vector<HalfInt> mirrored =
        hw_label(ProblemParams(n, -params.sigma_bar));
    std::vector<HalfInt> out(mirrored.rbegin(), mirrored.rend());
    for (HalfInt& e : out) e = -e;
    return out;
  }
  std::vector<HalfInt> label(static_cast<std::size_t>(2 * n),
                             HalfInt::from_twice(1));
  for (int i = 0; i < n; ++i) label[static_cast<std::size_t>(i)] = HalfInt::from_twice(-1);
  label[static_cast<std::size_t>(n)] =
      HalfInt::from_twice(1 + 2 * params.sigma_bar);
  return label;
}

SpectrumTable build_table(const ProblemParams& params, long long level_count) {
  if (level_count < 0)
    throw std::invalid_argument("build_table: level_count must be >= 0");
  SpectrumTable table{params, {}, hw_label(params)};
  table.levels.reserve(static_cast<std::size_t>(level_count));
  Int degeneracy = 0;
  for (long long I = 0; I < level_count; ++I) {
    degeneracy += repcore::sector_from_l(I, params).dim;
    auto [left, right] = ktype_pair(I, params);
    table.levels.push_back(
        {I, energy(I, params), degeneracy, std::move(left), std::move(right)});
  }
  return table;
}

CheckReport verify_ktype_dimensions(const ProblemParams& params, long long I_max) {
  CheckReport report;
  report.suite = "ktype-dimensions";
  const std::string prefix = "n=" + std::to_string(params.n) +
                             " sigma=" + std::to_string(params.sigma_bar) + " ";
  for (long long I = 0; I <= I_max; ++I) {
    const auto [left, right] = ktype_pair(I, params);
    const Int product =
        repcore::dim_highest_weight(left) * repcore::dim_highest_weight(right);
    const Int direct = level_degeneracy(I, params);
    report.add(prefix + "I=" + std::to_string(I), product.str(), direct.str(),
               product == direct);
  }
  // Shell eigenvalue 2I + |s| + n matches the K-type ledger value
  // 2I + |s| + 2n*kappa only at kappa = 1/2 (scan nearby half-integers).
  long long solutions = 0;
  bool half_works = false;
  for (long long twice_kappa = -4; twice_kappa <= 6; ++twice_kappa) {
    if (params.n * twice_kappa == params.n) {
      ++solutions;
      if (twice_kappa == 1) half_works = true;
    }
  }
  report.add(prefix + "kappa", half_works && solutions == 1 ? "1/2" : "ambiguous",
             "1/2", half_works && solutions == 1);
  return report;
}

CheckReport oscillator_shell_check(int n, long long k) {
  if (n < 2) throw std::invalid_argument("oscillator_shell_check: n must be >= 2");
  if (k < 0) throw std::invalid_argument("oscillator_shell_check: k must be >= 0");
  CheckReport report;
  report.suite = "oscillator-shell";
  Int sum = 0;
  for (long long s = -k; s <= k; ++s) {
    const long long abs_s = s < 0 ? -s : s;
    if ((k - abs_s) % 2 != 0) continue;
    sum += level_degeneracy((k - abs_s) / 2, ProblemParams(n, s));
  }
  const Int rhs = binomial(2 * n + k - 1, 2 * n - 1);
  report.add("n=" + std::to_string(n) + " shell k=" + std::to_string(k),
             sum.str(), rhs.str(), sum == rhs);
  return report;
}

}  // namespace u1kepler::spectra
