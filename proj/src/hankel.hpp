#pragma once

#include <vector>

#include "matrix.hpp"
#include "zeta.hpp"

namespace chz {

// H_n(L, eta): (i,j) entry zeta_L(i+j+2), i,j = 0..n-1.
struct CoulombHankel {
  CoulombParams params;
  int n;
  ExactMatrix matrix;
};

// H_n^(ell)(nu): (i,j) entry sigma_{2ell+2+2(i+j)}(nu).
struct RayleighHankel {
  Rational nu;
  int ell;
  int n;
  ExactMatrix matrix;
};

// Three-term recurrence coefficients of the orthogonal polynomials whose
// moments are zeta_L(k+2)/zeta_L(2). a[0] is unused (a_n is defined for n >= 1).
struct RecurrenceCoeffs {
  std::vector<Rational> a;
  std::vector<Rational> b;
};

CoulombHankel build_coulomb_hankel(const CoulombParams& p, int n);
Rational det_coulomb_closed(const CoulombParams& p, int n);
RecurrenceCoeffs recurrence_coeffs(const CoulombParams& p, int nmax);
// (zeta_L(2))^n times the double product of a_j.
Rational det_coulomb_via_moments(const CoulombParams& p, int n);

// All three routes to det H_n(L, eta).
struct CoulombDetRoutes {
  Rational direct;
  Rational closed;
  Rational moments;
  bool agree() const { return direct == closed && closed == moments; }
};
CoulombDetRoutes coulomb_det_routes(const CoulombParams& p, int n);

RayleighHankel build_rayleigh_hankel(const Rational& nu, int ell, int n);
Rational det_rayleigh_direct(const Rational& nu, int ell, int n);
// Closed product for ell in {0, 1}; other ell raise UnsupportedEll.
Rational det_rayleigh_closed(const Rational& nu, int ell, int n);
// The same product evaluated for any ell >= 0 without the ell check. Only valid
// for ell in {0, 1}; exposed to exhibit its failure beyond that.
Rational rayleigh_product_formula(const Rational& nu, int ell, int n);
Rational det_rayleigh_ell2(const Rational& nu, int n);
Rational det_rayleigh_ell3(const Rational& nu, int n);

struct DjOptions {
  // Raise DegenerateRecursion instead of falling back to a direct determinant.
  bool strict = false;
};
// det H_n^(ell)(nu) by stepping the Desnanot-Jacobi identity upward in ell,
// seeded by the ell in {0, 1} closed forms.
Rational det_rayleigh_dj(const Rational& nu, int ell, int n, DjOptions options = {});

// Witness that the ell in {0,1} product does not extend to ell >= 2.
struct EllFailureWitness {
  Rational nu;
  int ell;
  int n;
  Rational formula;
  Rational direct;
};
EllFailureWitness ell_failure_witness(const Rational& nu, int ell, int n);

// det(B_{2(i+j+ell-1)} / (2(i+j+ell-1))!)_{i,j=1..n} and the Genocchi analogue.
struct SpecialHankelDet {
  Rational direct;
  Rational closed;
};
ExactMatrix bernoulli_hankel_matrix(int ell, int n);
ExactMatrix genocchi_hankel_matrix(int ell, int n);
Rational bernoulli_hankel_closed(int ell, int n);
Rational genocchi_hankel_closed(int ell, int n);
// Direct determinant checked against the closed form (VerificationFailed on mismatch).
SpecialHankelDet bernoulli_hankel_det(int ell, int n);
SpecialHankelDet genocchi_hankel_det(int ell, int n);
// The Bernoulli/Genocchi matrices as c * D(alpha) H_n^(ell)(+-1/2) D(alpha).
Rational bernoulli_hankel_det_via_scaling(int ell, int n);
Rational genocchi_hankel_det_via_scaling(int ell, int n);

// det H_{2n+1}(nu-1/2,0) = 2^{2n+1} det H_{n+1}^(0) det H_n^(1) and
// det H_{2n}(nu-1/2,0) = 2^{2n} det H_n^(0) det H_n^(1).
struct ParitySplit {
  Rational odd_lhs;
  Rational odd_rhs;
  Rational even_lhs;
  Rational even_rhs;
  bool holds() const { return odd_lhs == odd_rhs && even_lhs == even_rhs; }
};
ParitySplit parity_split_check(const Rational& nu, int n);

}  // namespace chz
