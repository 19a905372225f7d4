#pragma once

#include <optional>
#include <vector>

#include "zeta.hpp"

namespace chz {

// Indexing follows D_n := det H_{n+1}(L, eta) for n >= 0, with D_{-1} := 1.
// Hence D_{n-1} D_n = det H_n * det H_{n+1} (det H_0 := 1), and the sequence
// index n runs from 0.

// Closed product for D_{n-1} D_n, n >= 0. Uses the eta = 0 form when eta is 0.
Rational dd_product_closed(const CoulombParams& p, int n);

// True when the Grommer-Chebotarev count is defined: eta != 0 excludes
// L in -(N+1)/2, eta = 0 excludes L in -N-1/2.
bool classifiable(const CoulombParams& p);

struct ZeroClassification {
  CoulombParams params;
  int pair_count = 0;
  // sign of D_{n-1} D_n for n = 0..nmax; entries are -1 or +1.
  std::vector<int> sign_sequence;
  bool all_real = true;
  int nmax = 0;
  // floor(-L-1/2) for L < -3/2, 0 otherwise.
  int predicted_pairs = 0;
};

// nmax <= 0 selects max(ceil(-L)+2, 3). Signs come from the closed product,
// never from determinants. Raises ExcludedParameter on the singular sets and
// VerificationFailed if the negative count disagrees with floor(-L-1/2).
ZeroClassification classify(const CoulombParams& p, int nmax = 0);
int auto_nmax(const Rational& L);
int predicted_pair_count(const Rational& L);

struct HurwitzCounts {
  int complex_zeros = 0;
  // Whether two of the complex zeros are purely imaginary; nullopt when there
  // are no complex zeros.
  std::optional<bool> imaginary_pair;
};

// Complex-zero count of J_nu by Hurwitz' trichotomy, cross-checked against
// 2 * classify(nu - 1/2, 0).pair_count. Negative integers raise BoundaryParameter.
HurwitzCounts hurwitz_counts(const Rational& nu);

}  // namespace chz
