#include "u1kepler/repcore.hpp"

#include <stdexcept>
#include <utility>

namespace u1kepler::repcore {

ProblemParams::ProblemParams(int n_value, long long sigma_bar_value)
    : n(n_value), sigma_bar(sigma_bar_value) {
  if (n < 2) throw std::invalid_argument("ProblemParams: n must be >= 2");
}

HighestWeight::HighestWeight(std::vector<HalfInt> entries)
    : entries_(std::move(entries)) {
  if (entries_.empty())
    throw std::invalid_argument("HighestWeight: empty weight");
  for (std::size_t i = 0; i + 1 < entries_.size(); ++i) {
    if (entries_[i] < entries_[i + 1])
      throw std::invalid_argument("HighestWeight: entries must be weakly decreasing");
  }
  const long long parity = ((entries_[0].twice() % 2) + 2) % 2;
  for (const HalfInt e : entries_) {
    if (((e.twice() % 2) + 2) % 2 != parity)
      throw std::invalid_argument("HighestWeight: inconsistent integer/half-odd parity");
  }
}

HighestWeight HighestWeight::sector_weight(long long p, long long q, int n) {
  if (p < 0 || q < 0) throw std::invalid_argument("sector_weight: p, q must be >= 0");
  if (n < 2) throw std::invalid_argument("sector_weight: n must be >= 2");
  std::vector<HalfInt> entries(static_cast<std::size_t>(n), HalfInt(0));
  entries.front() = HalfInt(p);
  entries.back() = HalfInt(-q);
  return HighestWeight(std::move(entries));
}

HighestWeight HighestWeight::shifted(HalfInt c) const {
  std::vector<HalfInt> entries = entries_;
  for (HalfInt& e : entries) e = e + c;
  return HighestWeight(std::move(entries));
}

std::string HighestWeight::str() const {
  std::string out = "[";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i > 0) out += ' ';
    out += entries_[i].str();
  }
  out += ']';
  return out;
}

AngularSector sector_from_pq(long long p, long long q, int n) {
  if (p < 0 || q < 0) throw std::invalid_argument("sector_from_pq: p, q must be >= 0");
  if (n < 2) throw std::invalid_argument("sector_from_pq: n must be >= 2");
  AngularSector s;
  s.p = p;
  s.q = q;
  s.n = n;
  s.l = (p - q >= 0) ? q : p;
  s.dim = dim_sector(p, q, n);
  s.casimir = casimir_u_n(HighestWeight::sector_weight(p, q, n));
  const long long sb = p - q;
  s.angular_eigenvalue = 2 * (s.casimir - Rat(sb) * sb);
  return s;
}

AngularSector sector_from_l(long long l, const ProblemParams& params) {
  if (l < 0) throw std::invalid_argument("sector_from_l: l must be >= 0");
  if (params.sigma_bar < 0) {
    AngularSector mirror =
        sector_from_l(l, ProblemParams(params.n, -params.sigma_bar));
    std::swap(mirror.p, mirror.q);  // dim, casimir, eigenvalue are symmetric
    return mirror;
  }
  return sector_from_pq(l + params.sigma_bar, l, params.n);
}

Int dim_sector(long long p, long long q, int n) {
  if (n < 2) throw std::invalid_argument("dim_sector: n must be >= 2");
  if (p < 0 || q < 0) throw std::invalid_argument("dim_sector: p, q must be >= 0");
  Rat value = Rat(p + q + n - 1, n - 1);
  value *= binomial(p + n - 2, n - 2);
  value *= binomial(q + n - 2, n - 2);
  if (boost::multiprecision::denominator(value) != 1)
    throw std::logic_error("dim_sector: non-integral dimension");
  return boost::multiprecision::numerator(value);
}

Int dim_highest_weight(const HighestWeight& lambda) {
  const std::size_t rank = lambda.rank();
  Int numerator = 1;
  Int denominator = 1;
  for (std::size_t i = 0; i < rank; ++i) {
    for (std::size_t j = i + 1; j < rank; ++j) {
      // Consistent parity makes every difference an integer.
      const long long diff = (lambda[i].twice() - lambda[j].twice()) / 2;
      const long long gap = static_cast<long long>(j - i);
      numerator *= diff + gap;
      denominator *= gap;
    }
  }
  Int quotient, remainder;
  boost::multiprecision::divide_qr(numerator, denominator, quotient, remainder);
  if (remainder != 0)
    throw std::logic_error("dim_highest_weight: Weyl product not integral");
  return quotient;
}

Rat casimir_u_n(const HighestWeight& lambda) {
  const long long rank = static_cast<long long>(lambda.rank());
  Rat value = 0;
  for (long long i = 0; i < rank; ++i) {
    const Rat entry = lambda[static_cast<std::size_t>(i)].to_rat();
    value += entry * entry + (rank + 1 - 2 * (i + 1)) * entry;
  }
  return value;
}

Rat angular_laplacian_eigenvalue(const AngularSector& sector) {
  const long long sb = sector.sigma_bar();
  return 2 * (casimir_u_n(sector.weight()) - Rat(sb) * sb);
}

Int angular_eigenvalue_closed_form(long long p, long long q, int n) {
  return Int(4) * p * q + Int(2) * (n - 1) * (p + q);
}

namespace {

// Exact shell sum of sector dimensions at oscillator shell k, enumerated
// in the canonical order: ascending character s = p - q, then ascending l.
Int shell_dimension_sum(int n, long long k) {
  Int sum = 0;
  for (long long s = -k; s <= k; ++s) {
    const long long spread = s < 0 ? -s : s;
    if ((k - spread) % 2 != 0) continue;
    const long long level = (k - spread) / 2;  // l runs over min(p, q) <= level
    for (long long l = 0; l <= level; ++l) {
      const long long p = s >= 0 ? l + s : l;
      const long long q = s >= 0 ? l : l - s;
      sum += dim_sector(p, q, n);
    }
  }
  return sum;
}

}  // namespace

CheckReport verify_dimension_equality(int n, long long k_max) {
  if (n < 2) throw std::invalid_argument("verify_dimension_equality: n must be >= 2");
  if (k_max < 0) throw std::invalid_argument("verify_dimension_equality: k_max must be >= 0");
  CheckReport report;
  report.suite = "dimension-equality";
  for (long long k = 0; k <= k_max; ++k) {
    const Int lhs = shell_dimension_sum(n, k);
    const Int rhs = binomial(2 * n + k - 1, 2 * n - 1);
    report.add("n=" + std::to_string(n) + " k=" + std::to_string(k), lhs.str(),
               rhs.str(), lhs == rhs);
  }
  return report;
}

std::vector<Int> inverse_power_series_coefficients(int n, long long k_max) {
  if (n < 2) throw std::invalid_argument("inverse_power_series_coefficients: n must be >= 2");
  // (1-t)^{-1} has all-ones coefficients; convolving with it is a running
  // sum, applied 2n-1 more times to reach (1-t)^{-2n}.
  std::vector<Int> coeff(static_cast<std::size_t>(k_max) + 1, Int(1));
  for (int pass = 1; pass < 2 * n; ++pass) {
    for (std::size_t i = 1; i < coeff.size(); ++i) coeff[i] += coeff[i - 1];
  }
  return coeff;
}

CheckReport verify_generating_function(int n, long long k_max) {
  const std::vector<Int> coeff = inverse_power_series_coefficients(n, k_max);
  CheckReport report;
  report.suite = "generating-function";
  for (long long k = 0; k <= k_max; ++k) {
    const Int lhs = shell_dimension_sum(n, k);
    const Int& rhs = coeff[static_cast<std::size_t>(k)];
    report.add("n=" + std::to_string(n) + " t^" + std::to_string(k), lhs.str(),
               rhs.str(), lhs == rhs);
  }
  return report;
}

}  // namespace u1kepler::repcore
