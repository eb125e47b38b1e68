// Bound-state spectrum of the U(1)-Kepler problem: exact energies,
// level degeneracies, the K-type pair of each level, the U(n,n) highest
// weight label, and the theta-correspondence shell bookkeeping.

#pragma once

#include <utility>
#include <vector>

#include "u1kepler/repcore.hpp"

namespace u1kepler::spectra {

using repcore::HighestWeight;
using repcore::ProblemParams;

struct SpectrumLevel {
  long long I = 0;
  Rat energy;          // -(1/2) / (I + (n+|s|)/2)^2, exact
  Int degeneracy;      // sum of sector dimensions for l = 0..I
  HighestWeight left_ktype;
  HighestWeight right_ktype;
};

struct SpectrumTable {
  ProblemParams params;
  std::vector<SpectrumLevel> levels;
  std::vector<HalfInt> hw_label;  // the 2n-entry U(n,n) highest weight
};

// Exact level energy -2 / (2I + n + |sigma_bar|)^2.
Rat energy(long long I, const ProblemParams& params);

// Exact dimension of the level-I eigenspace: sum_{l<=I} dim of sector l.
Int level_degeneracy(long long I, const ProblemParams& params);

// K-type pair of level I: left weight (-1/2,...,-1/2,-(1/2+a)) and right
// weight (1/2+b, 1/2,...,1/2), with (a, b) = (I, I+|s|) for s >= 0 and the
// mirrored pair for s <= 0.  Both branches agree at s = 0.
std::pair<HighestWeight, HighestWeight> ktype_pair(long long I,
                                                   const ProblemParams& params);

// 2n-entry highest weight of the bound-state module:
// (-1/2 x n, 1/2+s, 1/2 x (n-1)) for s >= 0, mirrored for s <= 0.
std::vector<HalfInt> hw_label(const ProblemParams& params);

// First `level_count` levels plus the module label; energies strictly
// increase toward zero.
SpectrumTable build_table(const ProblemParams& params, long long level_count);

// For each I <= I_max checks dim(left) * dim(right) = level_degeneracy(I)
// exactly, and that the shell bookkeeping 2I + |s| + n = 2I + |s| + 2n*kappa
// forces kappa = 1/2.
CheckReport verify_ktype_dimensions(const ProblemParams& params, long long I_max);

// Theta-correspondence bookkeeping at oscillator shell k: the sum of
// level degeneracies over all characters s with |s| <= k, k - |s| even,
// at level I = (k - |s|)/2 equals C(2n+k-1, 2n-1).
CheckReport oscillator_shell_check(int n, long long k);

}  // namespace u1kepler::spectra
