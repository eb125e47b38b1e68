// Exact representation-theoretic kernel: highest weights of U(n) and its
// double cover, Weyl dimensions, Casimir values, twisted-Laplacian angular
// eigenvalues on CP^{n-1}, and the shell-dimension identities.
//
// Everything in this module is arbitrary-precision integer/rational
// arithmetic; floating point is deliberately absent so every identity
// check is bit-exact.

#pragma once

#include <vector>

#include "u1kepler/exact.hpp"
#include "u1kepler/report.hpp"

namespace u1kepler::repcore {

// Dimension parameter n >= 2 together with the integer infinitesimal
// character of the U(1) magnetic charge.
struct ProblemParams {
  int n;
  long long sigma_bar;

  ProblemParams(int n_value, long long sigma_bar_value);

  long long abs_sigma() const { return sigma_bar < 0 ? -sigma_bar : sigma_bar; }
};

// Weakly decreasing tuple of half-integers with consistent parity
// (all integers or all half-odd), labeling an irreducible module of the
// metaplectic double cover of U(rank).
class HighestWeight {
 public:
  explicit HighestWeight(std::vector<HalfInt> entries);

  // (p, 0, ..., 0, -q) of rank n
  static HighestWeight sector_weight(long long p, long long q, int n);

  std::size_t rank() const { return entries_.size(); }
  const std::vector<HalfInt>& entries() const { return entries_; }
  HalfInt operator[](std::size_t i) const { return entries_[i]; }

  HighestWeight shifted(HalfInt c) const;  // add c to every entry

  // comma-free bracketed rendering, e.g. "[3/2 1/2 1/2]"
  std::string str() const;

  friend bool operator==(const HighestWeight&, const HighestWeight&) = default;

 private:
  std::vector<HalfInt> entries_;
};

// The (p, q) label of one angular sector over CP^{n-1}, with its l-index
// and the derived exact data.
struct AngularSector {
  long long p = 0;
  long long q = 0;
  int n = 2;
  long long l = 0;
  Int dim;
  Rat casimir;
  Rat angular_eigenvalue;

  long long sigma_bar() const { return p - q; }
  HighestWeight weight() const { return HighestWeight::sector_weight(p, q, n); }
};

// Sector with l-index l for the given (n, sigma_bar): p - q = sigma_bar and
// l = q when sigma_bar >= 0, l = p when sigma_bar <= 0. Negative sigma_bar
// goes through the exact mirror (p,q,s) -> (q,p,-s) rather than a second
// formula branch.
AngularSector sector_from_l(long long l, const ProblemParams& params);

// Sector directly from its weight label (p, 0, ..., 0, -q).
AngularSector sector_from_pq(long long p, long long q, int n);

// dim of the U(n)-module with highest weight (p, 0, ..., 0, -q), via the
// closed product form ((p+q+n-1)/(n-1)) C(p+n-2, n-2) C(q+n-2, n-2).
Int dim_sector(long long p, long long q, int n);

// Weyl dimension: product over i < j of (l_i - l_j + j - i)/(j - i).
Int dim_highest_weight(const HighestWeight& lambda);

// <lambda, lambda + 2 rho> in the trace form:
// sum l_i^2 + sum (n + 1 - 2i) l_i.  On (p, 0, ..., 0, -q) this equals
// p^2 + q^2 + (n-1)(p+q); the U(1) value at character s is s^2.
Rat casimir_u_n(const HighestWeight& lambda);

// Eigenvalue of the twisted Laplacian restricted to CP^{n-1} on the sector:
// 2 (c2[U(n)] - sigma_bar^2), evaluated through casimir_u_n.
Rat angular_laplacian_eigenvalue(const AngularSector& sector);

// Independent algebraic route: 4 p q + 2 (n-1)(p+q).
Int angular_eigenvalue_closed_form(long long p, long long q, int n);

// For every shell 0 <= k <= k_max, enumerates all (p, q, I) with
// 2I + |p-q| = k and I >= min(p, q), sums the sector dimensions exactly,
// and compares against C(2n+k-1, 2n-1).
CheckReport verify_dimension_equality(int n, long long k_max);

// Exact power-series coefficients of (1-t)^{-2n} through order k_max,
// built by repeated convolution with the geometric series.
std::vector<Int> inverse_power_series_coefficients(int n, long long k_max);

// Checks that coefficient k of (1-t)^{-2n} equals the shell sum of
// verify_dimension_equality for every k <= k_max.
CheckReport verify_generating_function(int n, long long k_max);

}  // namespace u1kepler::repcore
