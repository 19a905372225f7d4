#pragma once

#include <vector>

#include "rational.hpp"

namespace chz {

// Angular momentum L and Sommerfeld parameter eta of the regular Coulomb wave
// function, both exact.
struct CoulombParams {
  Rational L;
  Rational eta;

  // L not in {-1, -3/2, -2, -5/2, ...}.
  bool valid_general() const;
  // eta = 0 branch: only the half-integers L in {-3/2, -5/2, ...} are excluded.
  bool valid_bessel() const;
  // valid_bessel() when eta = 0, valid_general() otherwise.
  bool valid() const;
  bool bessel_branch() const { return eta.is_zero(); }
};

// Throws Error(singular_parameter) naming the violated set when !p.valid().
void require_valid(const CoulombParams& p);

// zeta_L(2) = (1 + eta^2/(L+1)^2) / (2L+3).
Rational zeta_base(const CoulombParams& p);

// Memoized spectral zeta values zeta_L(2..kmax). Only ever grows; each new
// entry comes from the convolution recurrence over the stored ones.
// The recurrence carries +2 eta/(L+1), so the values are the power sums of
// -rho_n where rho_n are the zeros of phi_L(eta, .) as evaluated numerically
// (equivalently the zeros at -eta). Odd k differ in sign from sum rho_n^-k;
// Hankel determinants and classification do not see the difference.
class ZetaTable {
 public:
  explicit ZetaTable(CoulombParams params, int kmax = 2);

  void extend(int kmax);

  int kmax() const { return static_cast<int>(values_.size()) + 1; }
  const CoulombParams& params() const { return params_; }
  // k in [2, kmax()].
  const Rational& at(int k) const;
  const Rational& operator[](int k) const { return at(k); }

 private:
  CoulombParams params_;
  std::vector<Rational> values_;  // values_[k-2] = zeta_L(k)
};

ZetaTable zeta_extend(ZetaTable table, int kmax);

// Rayleigh function sigma_{2k}(nu) for nu not a negative integer, via
// zeta_{nu-1/2}(2k) = 2 sigma_{2k}(nu) at eta = 0.
class RayleighSequence {
 public:
  explicit RayleighSequence(const Rational& nu);

  const Rational& nu() const { return nu_; }
  // sigma_{2k}(nu), k >= 1.
  Rational sigma(int k);

 private:
  Rational nu_;
  ZetaTable table_;
};

Rational rayleigh(const Rational& nu, int k);
bool is_negative_integer(const Rational& x);

// B_{2n} and G_{2n} for n >= 1, read off sigma_{2n}(1/2) and sigma_{2n}(-1/2).
Rational bernoulli(int n);
// G_{2n} = 2(1 - 2^{2n}) B_{2n}.
Rational genocchi(int n);
// G_{2n} = (-1)^n (2n)! 2^{2-2n} sigma_{2n}(-1/2); the second route to genocchi().
Rational genocchi_via_rayleigh(int n);

}  // namespace chz
