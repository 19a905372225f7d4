// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "classifier.hpp"
#include "error.hpp"
#include "hankel.hpp"
#include "matrix.hpp"
#include "numeric.hpp"
#include "oracles.hpp"
#include "zeta.hpp"

using namespace chz;

namespace {

// Pinned tolerances.
constexpr double kZeroDigitsTol = 5e-4;
constexpr double kImaginaryTol = 1e-7;
constexpr double kRealZeroTol = 1e-8;
constexpr double kPhiTol = 1e-12;
constexpr double kConjugateFactor = 10.0;
constexpr double kBesselRelTol = 1e-10;

Rational q(const char* s) { return Rational::parse(s); }

struct Outcome {
  bool ok = true;
  std::size_t checks = 0;
  std::string first_failure;

  void expect(bool cond, const std::function<std::string()>& what) {
    ++checks;
    if (!cond && ok) first_failure = what();
    ok = ok && cond;
  }
};

std::string str(const Rational& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

const std::vector<Rational> kCoulombL{q("-5/4"), q("-1/2"), q("0"), q("1/3"), q("1"), q("7/2")};
const std::vector<Rational> kCoulombEta{q("0"), q("1/2"), q("1"), q("2")};
const std::vector<Rational> kNu{q("1/2"), q("1"), q("5/2"), q("4")};

Outcome criterion1() {
  Outcome o;
  for (const auto& L : kCoulombL)
    for (const auto& eta : kCoulombEta)
      for (int n = 1; n <= 8; ++n) {
        const auto r = coulomb_det_routes({L, eta}, n);
        o.expect(r.agree(), [&] { return "L=" + str(L) + " eta=" + str(eta) + " n=" + std::to_string(n); });
      }
  return o;
}

Outcome criterion2() {
  Outcome o;
  for (const auto& nu : kNu)
    for (int ell : {0, 1})
      for (int n = 1; n <= 6; ++n) {
        // 2^{-2n(n+ell)} prod_{k=1}^{2n+ell-1} (nu+k)^{k-2n-ell}, written out here independently.
        Rational expected = pow(Rational(2), -2L * n * (n + ell));
        for (int k = 1; k <= 2 * n + ell - 1; ++k) expected *= pow(nu + Rational(k), k - 2 * n - ell);
        const Rational direct = det_rayleigh_direct(nu, ell, n);
        o.expect(direct == expected && det_rayleigh_closed(nu, ell, n) == expected,
                 [&] { return "nu=" + str(nu) + " ell=" + std::to_string(ell) + " n=" + std::to_string(n); });
      }
  return o;
}

Outcome criterion3() {
  Outcome o;
  for (const auto& nu : kNu)
    for (int n = 1; n <= 4; ++n) {
      o.expect(det_rayleigh_ell2(nu, n) == det_rayleigh_direct(nu, 2, n),
               [&] { return "ell=2 nu=" + str(nu) + " n=" + std::to_string(n); });
      o.expect(det_rayleigh_ell3(nu, n) == det_rayleigh_direct(nu, 3, n),
               [&] { return "ell=3 nu=" + str(nu) + " n=" + std::to_string(n); });
    }
  const auto w = ell_failure_witness(q("1"), 2, 1);
  o.expect(w.ell == 2 && w.formula != w.direct && w.direct == det_rayleigh_direct(w.nu, w.ell, w.n) &&
               w.formula == rayleigh_product_formula(w.nu, w.ell, w.n),
           [] { return std::string("no ell=2 witness"); });
  return o;
}

Outcome criterion4() {
  Outcome o;
  for (const auto& nu : kNu)
    for (int ell = 0; ell <= 6; ++ell)
      for (int n = 1; n <= 4; ++n)
        o.expect(det_rayleigh_dj(nu, ell, n, {.strict = true}) == det_rayleigh_direct(nu, ell, n),
                 [&] { return "nu=" + str(nu) + " ell=" + std::to_string(ell) + " n=" + std::to_string(n); });
  return o;
}

Outcome criterion5() {
  Outcome o;
  for (int ell : {0, 1})
    for (int n = 1; n <= 6; ++n) {
      for (const auto& [name, d] : {std::pair{"B", bernoulli_hankel_det(ell, n)}, std::pair{"G", genocchi_hankel_det(ell, n)}}) {
        const Rational& v = d.direct;
        const bool reciprocal = abs(v).numerator() == 1;
        o.expect(d.direct == d.closed && reciprocal,
                 [&] { return std::string(name) + " ell=" + std::to_string(ell) + " n=" + std::to_string(n) + " value " + str(v); });
      }
    }
  return o;
}

Outcome criterion6() {
  Outcome o;
  for (const auto& L : kCoulombL)
    for (const auto& eta : kCoulombEta) {
      Rational prev(1);
      for (int n = 0; n <= 5; ++n) {
        const Rational next = det_exact(build_coulomb_hankel({L, eta}, n + 1).matrix);
        const Rational dd = dd_product_closed({L, eta}, n);
        const int expected_sign = (2 * L + Rational(2 * n + 3)).sign();
        o.expect(dd == prev * next && dd.sign() == expected_sign,
                 [&] { return "L=" + str(L) + " eta=" + str(eta) + " n=" + std::to_string(n); });
        prev = next;
      }
    }
  return o;
}

Outcome criterion7() {
  Outcome o;
  for (const char* L : {"-5/4", "-1/2", "0", "2"})
    for (const char* eta : {"1/2", "1"}) {
      const auto c = classify({q(L), q(eta)});
      o.expect(c.pair_count == 0 && c.all_real, [&] { return std::string("L=") + L + " eta=" + eta; });
    }
  const std::vector<std::pair<const char*, int>> complex_cases{{"-7/4", 1}, {"-11/4", 2}, {"-15/4", 3}};
  for (const auto& [L, m] : complex_cases) {
    const auto c = classify({q(L), q("3/2")});
    o.expect(c.pair_count == m && c.pair_count == floor(-q(L) - q("1/2")),
             [&] { return std::string("L=") + L + " got " + std::to_string(c.pair_count); });
  }
  return o;
}

std::vector<Complex> upper_non_real(const ZeroReport& r) {
  std::vector<Complex> out;
  for (const auto& z : r.zeros)
    if (!z.real && z.point.imag() > 0) out.push_back(z.point);
  return out;
}

Outcome criterion8() {
  Outcome o;
  const std::vector<std::pair<double, std::vector<Complex>>> cases{
      {-1.75, {{0.1500, 0.2520}}},
      {-2.75, {{-0.2147, 0.8230}, {0.5887, 0.4090}}},
      {-3.75, {{-0.8719, 1.2916}, {0.3538, 1.2646}, {1.1374, 0.5345}}}};
  for (const auto& [L, listed] : cases) {
    const auto found = upper_non_real(find_complex_zeros({L, 1.5}));
    o.expect(found.size() == listed.size(), [&] { return "L=" + std::to_string(L) + " pair count " + std::to_string(found.size()); });
    for (const Complex& want : listed) {
      bool hit = false;
      for (const Complex& z : found)
        hit = hit || (std::abs(z.real() - want.real()) <= kZeroDigitsTol && std::abs(z.imag() - want.imag()) <= kZeroDigitsTol);
      o.expect(hit, [&] { return "L=" + std::to_string(L) + " missing " + std::to_string(want.real()) + "+" + std::to_string(want.imag()) + "i"; });
    }
  }
  return o;
}

Outcome criterion9() {
  Outcome o;
  // nu = L + 1/2 at eta = 0.
  const auto a = find_complex_zeros({-2.0, 0.0});
  const auto za = upper_non_real(a);
  o.expect(a.counts.complex_pairs == 1 && za.size() == 1 && std::abs(za[0].real()) < kImaginaryTol,
           [] { return std::string("nu=-3/2"); });

  const auto b = find_complex_zeros({-3.0, 0.0});
  const auto zb = upper_non_real(b);
  bool none_imaginary = true;
  for (const Complex& z : zb) none_imaginary = none_imaginary && std::abs(z.real()) >= kImaginaryTol;
  o.expect(b.counts.complex_pairs == 2 && zb.size() == 2 && none_imaginary, [] { return std::string("nu=-5/2"); });

  const auto c = find_complex_zeros({0.0, 0.0});
  o.expect(c.counts.complex_pairs == 0, [] { return std::string("nu=1/2 has complex zeros"); });
  int reals = 0;
  for (const auto& z : c.zeros) {
    if (!z.real) continue;
    ++reals;
    const double k = std::round(z.point.real() / std::numbers::pi);
    o.expect(k != 0 && std::abs(z.point.real() - k * std::numbers::pi) < kRealZeroTol && z.point.imag() == 0.0,
             [&] { return "nu=1/2 zero at " + std::to_string(z.point.real()); });
  }
  o.expect(reals > 0 && reals == c.counts.real, [] { return std::string("nu=1/2 no real zeros"); });
  return o;
}

Outcome criterion10() {
  Outcome o;
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> coord(-4.0, 4.0), ell(-3.9, 3.0), eta(-2.0, 2.0);
  for (int i = 0; i < 100;) {
    const NumericParams p{ell(rng), eta(rng)};
    // Skip the poles of the lower parameter.
    if (std::abs(2 * p.L + 2 - std::round(2 * p.L + 2)) < 1e-3 && 2 * p.L + 2 < 0.5) continue;
    const Complex z{coord(rng), coord(rng)};
    const double residual = std::abs(phi(p, std::conj(z), kPhiTol) - std::conj(phi(p, z, kPhiTol)));
    o.expect(residual < kConjugateFactor * kPhiTol, [&] { return "conjugate residual " + std::to_string(residual); });
    ++i;
  }

  std::uniform_real_distribution<double> radius(0.0, 10.0), angle(-std::numbers::pi, std::numbers::pi);
  for (double nu : {0.5, 1.0, 2.5, -0.3}) {
    for (int i = 0; i < 100; ++i) {
      const Complex z = std::polar(radius(rng), angle(rng));
      const Complex ref = oracle::bessel_phi(nu, z);
      const Complex got = phi({nu - 0.5, 0.0}, z);
      o.expect(std::abs(got - ref) <= kBesselRelTol * std::abs(ref), [&] { return "Bessel nu=" + std::to_string(nu); });
    }
  }

  for (int i = 0; i < 100; ++i) {
    const ExactMatrix m = oracle::random_matrix(rng, 5);
    o.expect(det_exact(m) == oracle::leibniz_det(m), [] { return std::string("det vs Leibniz"); });
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, Outcome (*)()>> criteria{
      {"Coulomb Hankel determinant: direct = closed product = moment route", criterion1},
      {"Rayleigh Hankel closed product for ell in {0,1}", criterion2},
      {"ell = 2, 3 closed forms and ell >= 2 failure witness", criterion3},
      {"Desnanot-Jacobi route equals direct determinants", criterion4},
      {"Bernoulli/Genocchi determinants: closed forms, reciprocal integers", criterion5},
      {"sign products equal det H_n det H_{n+1} with sign of 2L+2n+3", criterion6},
      {"zero classification counts", criterion7},
      {"numerical zeros at eta = 3/2 within 5e-4", criterion8},
      {"Bessel desk check nu = -3/2, -5/2, 1/2", criterion9},
      {"property suites: conjugate symmetry, Bessel reduction, det vs Leibniz", criterion10},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.ok = false;
      o.first_failure = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s criterion %zu: %s (%zu checks, %.2fs)%s%s\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first, o.checks, secs,
                o.ok ? "" : " first failure: ", o.first_failure.c_str());
    if (!o.ok) ++failed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
