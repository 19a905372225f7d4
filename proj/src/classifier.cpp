#include "classifier.hpp"

#include <string>

#include "error.hpp"

namespace chz {

namespace {

Rational eta_factor(const Rational& eta, const Rational& x) {
  if (eta.is_zero()) return Rational(1);
  if (x.is_zero()) fail(Errc::singular_parameter, "L+n-k = 0 with eta != 0");
  const Rational x2 = x * x;
  return (x2 + eta * eta) / x2;
}

void require_classifiable(const CoulombParams& p) {
  if (classifiable(p)) return;
  if (p.bessel_branch())
    fail(Errc::excluded_parameter, "L=" + p.L.str() + " on excluded set -N-1/2 (eta=0)");
  fail(Errc::excluded_parameter, "L=" + p.L.str() + " on excluded set -(N+1)/2 (eta!=0)");
}

}  // namespace

bool classifiable(const CoulombParams& p) { return p.valid(); }

Rational dd_product_closed(const CoulombParams& p, int n) {
  if (n < 0) fail(Errc::invalid_argument, "n must be >= 0");
  require_valid(p);
  const Rational lead = Rational(2) * p.L + Rational(2 * n + 3);
  if (lead.is_zero()) fail(Errc::singular_parameter, "2L+2n+3 = 0");
  Rational result = eta_factor(p.eta, p.L + Rational(n + 1)) / lead;
  for (int k = 0; k < n; ++k) {
    const Rational odd = Rational(2) * p.L + Rational(2 * n - 2 * k + 1);
    if (odd.is_zero()) fail(Errc::singular_parameter, "2L+2n-2k+1 = 0");
    result *= pow(odd, -(4 * k + 4));
    if (!p.eta.is_zero()) result *= pow(eta_factor(p.eta, p.L + Rational(n - k)), 2 * k + 3);
  }
  return result;
}

int auto_nmax(const Rational& L) {
  const mpz_class c = ceil(-L) + 2;
  return c > 3 ? static_cast<int>(c.get_si()) : 3;
}

int predicted_pair_count(const Rational& L) {
  if (L >= Rational(-3, 2)) return 0;
  return static_cast<int>(floor(-L - Rational(1, 2)).get_si());
}

ZeroClassification classify(const CoulombParams& p, int nmax) {
  require_classifiable(p);
  ZeroClassification c;
  c.params = p;
  c.nmax = nmax > 0 ? nmax : auto_nmax(p.L);
  // sign(D_{n-1} D_n) = sign(2L+2n+3); negatives only for n < -(2L+3)/2.
  const int last_negative_bound = auto_nmax(p.L) - 2;
  for (int n = 0; n <= c.nmax; ++n) {
    const int s = dd_product_closed(p, n).sign();
    c.sign_sequence.push_back(s);
    if (s < 0) {
      ++c.pair_count;
      if (n > last_negative_bound)
        fail(Errc::verification_failed, "negative D_{n-1}D_n beyond the 2L+2n+3 bound at n=" + std::to_string(n));
    }
  }
  c.all_real = c.pair_count == 0;
  c.predicted_pairs = predicted_pair_count(p.L);
  if (c.nmax >= last_negative_bound && c.pair_count != c.predicted_pairs)
    fail(Errc::verification_failed, "sign count " + std::to_string(c.pair_count) + " disagrees with floor(-L-1/2) = " +
                                        std::to_string(c.predicted_pairs));
  return c;
}

HurwitzCounts hurwitz_counts(const Rational& nu) {
  if (is_negative_integer(nu)) fail(Errc::boundary_parameter, "nu=" + nu.str() + " is a negative integer");
  HurwitzCounts h;
  if (nu > Rational(-1)) {
    h.complex_zeros = 0;
  } else {
    // -nu in (k, k+1) with k >= 1; k odd <=> nu in (-2s-2, -2s-1).
    const mpz_class k = floor(-nu);
    const long kk = k.get_si();
    if (kk % 2 == 1) {
      const long s = (kk - 1) / 2;
      h.complex_zeros = static_cast<int>(4 * s + 2);
      h.imaginary_pair = true;
    } else {
      const long s = kk / 2;
      h.complex_zeros = static_cast<int>(4 * s);
      h.imaginary_pair = false;
    }
  }
  const ZeroClassification c = classify(CoulombParams{nu - Rational(1, 2), Rational(0)});
  if (h.complex_zeros != 2 * c.pair_count)
    fail(Errc::verification_failed, "Hurwitz count " + std::to_string(h.complex_zeros) +
                                        " disagrees with 2m = " + std::to_string(2 * c.pair_count));
  return h;
}

}  // namespace chz
