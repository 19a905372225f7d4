#include "hankel.hpp"

#include <string>
#include <utility>

#include "error.hpp"

namespace chz {

namespace {

void require_positive(int n, const char* what) {
  if (n < 1) fail(Errc::invalid_argument, std::string(what) + " must be >= 1");
}

// 1 + eta^2/x^2 as a single fraction; exactly 1 when eta = 0.
Rational eta_factor(const Rational& eta, const Rational& x) {
  if (eta.is_zero()) return Rational(1);
  if (x.is_zero()) fail(Errc::singular_parameter, "L+n-k = 0 with eta != 0");
  const Rational x2 = x * x;
  return (x2 + eta * eta) / x2;
}

Rational nonzero(const Rational& x, const char* what) {
  if (x.is_zero()) fail(Errc::singular_parameter, std::string(what) + " vanishes");
  return x;
}

void require_nu(const Rational& nu) {
  if (is_negative_integer(nu)) fail(Errc::singular_parameter, "nu=" + nu.str() + " is a negative integer");
}

}  // namespace

CoulombHankel build_coulomb_hankel(const CoulombParams& p, int n) {
  require_positive(n, "n");
  ZetaTable table(p, 2 * n);
  std::vector<Rational> seq;
  for (int k = 2; k <= 2 * n; ++k) seq.push_back(table[k]);
  return CoulombHankel{p, n, ExactMatrix::hankel(static_cast<std::size_t>(n), seq)};
}

Rational det_coulomb_closed(const CoulombParams& p, int n) {
  require_positive(n, "n");
  require_valid(p);
  Rational result(1);
  for (int k = 0; k < n; ++k) {
    const Rational odd = nonzero(Rational(2) * p.L + Rational(2 * n - 2 * k + 1), "2L+2n-2k+1");
    result *= pow(odd, -(2 * k + 1)) * pow(eta_factor(p.eta, p.L + Rational(n - k)), k + 1);
  }
  return result;
}

RecurrenceCoeffs recurrence_coeffs(const CoulombParams& p, int nmax) {
  require_positive(nmax, "nmax");
  require_valid(p);
  RecurrenceCoeffs c;
  c.a.emplace_back(0);
  for (int n = 1; n <= nmax; ++n) {
    const Rational s = p.L + Rational(n + 1);
    const Rational lower = nonzero(Rational(2 * n) + Rational(2) * p.L + Rational(1), "2n+2L+1");
    const Rational upper = nonzero(Rational(2 * n) + Rational(2) * p.L + Rational(3), "2n+2L+3");
    c.a.push_back(eta_factor(p.eta, s) / (lower * upper));
  }
  for (int n = 0; n <= nmax; ++n) {
    if (p.eta.is_zero()) {
      c.b.emplace_back(0);
      continue;
    }
    const Rational s1 = nonzero(p.L + Rational(n + 1), "n+L+1");
    const Rational s2 = nonzero(p.L + Rational(n + 2), "n+L+2");
    c.b.push_back(-p.eta / (s1 * s2));
  }
  return c;
}

Rational det_coulomb_via_moments(const CoulombParams& p, int n) {
  require_positive(n, "n");
  const Rational z2 = zeta_base(p);
  Rational result = pow(z2, n);
  if (n == 1) return result;
  const RecurrenceCoeffs c = recurrence_coeffs(p, n - 1);
  // prod_{m=1}^{n-1} prod_{j=1}^{m} a_j = prod_{j=1}^{n-1} a_j^{n-j}
  for (int j = 1; j <= n - 1; ++j) result *= pow(c.a[static_cast<std::size_t>(j)], n - j);
  return result;
}

CoulombDetRoutes coulomb_det_routes(const CoulombParams& p, int n) {
  return CoulombDetRoutes{det_exact(build_coulomb_hankel(p, n).matrix), det_coulomb_closed(p, n),
                          det_coulomb_via_moments(p, n)};
}

RayleighHankel build_rayleigh_hankel(const Rational& nu, int ell, int n) {
  require_positive(n, "n");
  if (ell < 0) fail(Errc::invalid_argument, "ell must be >= 0");
  RayleighSequence seq(nu);
  std::vector<Rational> values;
  for (int m = 0; m <= 2 * n - 2; ++m) values.push_back(seq.sigma(ell + 1 + m));
  return RayleighHankel{nu, ell, n, ExactMatrix::hankel(static_cast<std::size_t>(n), values)};
}

Rational det_rayleigh_direct(const Rational& nu, int ell, int n) {
  return det_exact(build_rayleigh_hankel(nu, ell, n).matrix);
}

Rational rayleigh_product_formula(const Rational& nu, int ell, int n) {
  require_positive(n, "n");
  require_nu(nu);
  if (ell < 0) fail(Errc::invalid_argument, "ell must be >= 0");
  Rational result = pow(Rational(2), -2L * n * (n + ell));
  for (int k = 1; k <= 2 * n + ell - 1; ++k) result *= pow(nu + Rational(k), k - 2 * n - ell);
  return result;
}

Rational det_rayleigh_closed(const Rational& nu, int ell, int n) {
  if (ell != 0 && ell != 1)
    fail(Errc::unsupported_ell, "closed Rayleigh Hankel formula holds only for ell in {0,1}, got " + std::to_string(ell));
  return rayleigh_product_formula(nu, ell, n);
}

Rational det_rayleigh_ell2(const Rational& nu, int n) {
  require_positive(n, "n");
  require_nu(nu);
  Rational result = pow(Rational(2), -2L * n * (n + 2)) * Rational(n + 1) * (nu + Rational(n + 1));
  for (int k = 1; k <= 2 * n + 1; ++k) result *= pow(nu + Rational(k), k - 2 * n - 2);
  return result;
}

Rational det_rayleigh_ell3(const Rational& nu, int n) {
  require_positive(n, "n");
  require_nu(nu);
  Rational result = pow(Rational(2), -2L * n * (n + 3));
  for (int k = 1; k <= 2 * n + 2; ++k) result *= pow(nu + Rational(k), k - 2 * n - 3);
  const Rational bracket = Rational(2L * n * n + 6L * n + 3) + nu * Rational(2 * n + 3);
  result *= Rational(1, 6) * Rational(n + 1) * Rational(n + 2) * (nu + Rational(n + 1)) * (nu + Rational(n + 2)) *
            bracket;
  return result;
}

Rational det_rayleigh_dj(const Rational& nu, int ell, int n, DjOptions options) {
  require_positive(n, "n");
  require_nu(nu);
  if (ell < 0) fail(Errc::invalid_argument, "ell must be >= 0");
  if (ell <= 1) return det_rayleigh_closed(nu, ell, n);

  // Level l needs sizes up to reach(l); the identity
  //   d(l,m) = (d(l-2,m+1) d(l,m-1) + d(l-1,m)^2) / d(l-2,m)
  // pulls one extra size from two levels down.
  auto reach = [&](int l) { return n + (ell - l + 1) / 2; };
  std::vector<std::vector<Rational>> d(static_cast<std::size_t>(ell + 1));
  RayleighSequence seq(nu);
  for (int l = 0; l <= ell; ++l) {
    auto& row = d[static_cast<std::size_t>(l)];
    row.emplace_back(1);  // empty determinant
    for (int m = 1; m <= reach(l); ++m) {
      if (l <= 1) {
        row.push_back(det_rayleigh_closed(nu, l, m));
        continue;
      }
      if (m == 1) {
        row.push_back(seq.sigma(l + 1));
        continue;
      }
      const auto& two_down = d[static_cast<std::size_t>(l - 2)];
      const auto& one_down = d[static_cast<std::size_t>(l - 1)];
      const Rational& divisor = two_down[static_cast<std::size_t>(m)];
      if (divisor.is_zero()) {
        if (options.strict)
          fail(Errc::degenerate_recursion, "det H_" + std::to_string(m) + "^(" + std::to_string(l - 2) +
                                               ") vanishes; Desnanot-Jacobi step undefined");
        row.push_back(det_rayleigh_direct(nu, l, m));
        continue;
      }
      const Rational& side = one_down[static_cast<std::size_t>(m)];
      row.push_back((two_down[static_cast<std::size_t>(m + 1)] * row[static_cast<std::size_t>(m - 1)] + side * side) /
                    divisor);
    }
  }
  return d[static_cast<std::size_t>(ell)][static_cast<std::size_t>(n)];
}

EllFailureWitness ell_failure_witness(const Rational& nu, int ell, int n) {
  return EllFailureWitness{nu, ell, n, rayleigh_product_formula(nu, ell, n), det_rayleigh_direct(nu, ell, n)};
}

namespace {

void require_ell01(int ell) {
  if (ell != 0 && ell != 1)
    fail(Errc::unsupported_ell, "Bernoulli/Genocchi Hankel formulas hold only for ell in {0,1}, got " + std::to_string(ell));
}

// Entries x_{i+j+ell-1}/(2(i+j+ell-1))!, i,j = 1..n, for x = B_{2m} or G_{2m}.
template <class Number>
ExactMatrix factorial_normalized_hankel(int ell, int n, Number number) {
  require_positive(n, "n");
  require_ell01(ell);
  std::vector<Rational> seq;
  for (int m = ell + 1; m <= 2 * n + ell - 1; ++m)
    seq.push_back(number(m) / Rational(factorial(static_cast<unsigned>(2 * m))));
  return ExactMatrix::hankel(static_cast<std::size_t>(n), seq);
}

}  // namespace

ExactMatrix bernoulli_hankel_matrix(int ell, int n) {
  return factorial_normalized_hankel(ell, n, [](int m) { return bernoulli(m); });
}

ExactMatrix genocchi_hankel_matrix(int ell, int n) {
  return factorial_normalized_hankel(ell, n, [](int m) { return genocchi(m); });
}

Rational bernoulli_hankel_closed(int ell, int n) {
  require_positive(n, "n");
  require_ell01(ell);
  Rational result = pow(Rational(2), -1L * n * (4 * n + 4 * ell - 1));
  if ((n * ell) % 2 == 1) result = -result;
  for (int k = 1; k <= 2 * n + ell - 1; ++k) result *= pow(Rational(2 * k + 1, 2), k - 2 * n - ell);
  return result;
}

Rational genocchi_hankel_closed(int ell, int n) {
  require_positive(n, "n");
  require_ell01(ell);
  Rational result = pow(Rational(2), -1L * n * (4 * n + 4 * ell - 2));
  if ((n * (ell + 1)) % 2 == 1) result = -result;
  for (int k = 1; k <= 2 * n + ell - 1; ++k) result *= pow(Rational(2 * k - 1, 2), k - 2 * n - ell);
  return result;
}

namespace {

SpecialHankelDet checked(Rational direct, Rational closed, const char* family, int ell, int n) {
  if (direct != closed)
    fail(Errc::verification_failed, std::string(family) + " Hankel determinant mismatch at ell=" + std::to_string(ell) +
                                        ", n=" + std::to_string(n) + ": direct " + direct.str() + " vs closed " +
                                        closed.str());
  return SpecialHankelDet{std::move(direct), std::move(closed)};
}

}  // namespace

SpecialHankelDet bernoulli_hankel_det(int ell, int n) {
  return checked(det_exact(bernoulli_hankel_matrix(ell, n)), bernoulli_hankel_closed(ell, n), "Bernoulli", ell, n);
}

SpecialHankelDet genocchi_hankel_det(int ell, int n) {
  return checked(det_exact(genocchi_hankel_matrix(ell, n)), genocchi_hankel_closed(ell, n), "Genocchi", ell, n);
}

// B_{2m}/(2m)! = (-1)^{m+1} 2^{1-2m} sigma_{2m}(1/2) and
// G_{2m}/(2m)! = (-1)^m 2^{2-2m} sigma_{2m}(-1/2); with m = i+j+ell-1 both are
// c * (-1/4)^i (-1/4)^j * (H_n^(ell)(+-1/2))_{ij}.
Rational bernoulli_hankel_det_via_scaling(int ell, int n) {
  require_ell01(ell);
  const ExactMatrix scaled = diag_scale(build_rayleigh_hankel(Rational(1, 2), ell, n).matrix, Rational(-1, 4));
  const Rational c = Rational(ell == 0 ? 2 : -2) * pow(Rational(4), 1 - ell);
  return pow(c, n) * det_exact(scaled);
}

Rational genocchi_hankel_det_via_scaling(int ell, int n) {
  require_ell01(ell);
  const ExactMatrix scaled = diag_scale(build_rayleigh_hankel(Rational(-1, 2), ell, n).matrix, Rational(-1, 4));
  const Rational c = Rational(ell == 0 ? -4 : 4) * pow(Rational(4), 1 - ell);
  return pow(c, n) * det_exact(scaled);
}

ParitySplit parity_split_check(const Rational& nu, int n) {
  require_positive(n, "n");
  require_nu(nu);
  const CoulombParams p{nu - Rational(1, 2), Rational(0)};
  ParitySplit s;
  s.odd_lhs = det_exact(build_coulomb_hankel(p, 2 * n + 1).matrix);
  s.odd_rhs = pow(Rational(2), 2 * n + 1) * det_rayleigh_direct(nu, 0, n + 1) * det_rayleigh_direct(nu, 1, n);
  s.even_lhs = det_exact(build_coulomb_hankel(p, 2 * n).matrix);
  s.even_rhs = pow(Rational(2), 2 * n) * det_rayleigh_direct(nu, 0, n) * det_rayleigh_direct(nu, 1, n);
  return s;
}

}  // namespace chz
