#include <random>

#include "doctest.h"
#include "error.hpp"
#include "matrix.hpp"
#include "oracles.hpp"
#include "rational.hpp"

using namespace chz;
using chz::Errc;
using chz::Error;
using chz::ExactMatrix;
using chz::Rational;

namespace {

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return Errc::invalid_argument;
}

ExactMatrix mat(std::size_t n, std::initializer_list<Rational> e) { return ExactMatrix(n, std::vector<Rational>(e)); }

}  // namespace

TEST_CASE("rational parse and print") {
  CHECK(Rational::parse("-6/4").str() == "-3/2");
  CHECK(Rational::parse("12/8").str() == "3/2");
  CHECK(Rational::parse("-10/5").str() == "-2");
  CHECK(Rational::parse("+7").str() == "7");
  CHECK(Rational::parse(" 0/9 ").str() == "0");
  CHECK(Rational::parse("-0").str() == "0");
  CHECK(code_of([] { Rational::parse("0.5"); }) == Errc::parse_error);
  CHECK(code_of([] { Rational::parse("1e3"); }) == Errc::parse_error);
  CHECK(code_of([] { Rational::parse("1/0"); }) == Errc::parse_error);
  CHECK(code_of([] { Rational::parse(""); }) == Errc::parse_error);
  CHECK(code_of([] { Rational::parse("3/"); }) == Errc::parse_error);
  CHECK(code_of([] { Rational::parse("6/-4"); }) == Errc::parse_error);
  CHECK(code_of([] { Rational::parse("1/2/3"); }) == Errc::parse_error);
  CHECK(code_of([] { Rational(1) / Rational(0); }) == Errc::invalid_argument);
}

TEST_CASE("rational helpers") {
  CHECK(pow(Rational(2, 3), -2) == Rational(9, 4));
  CHECK(pow(Rational(-1, 2), 3) == Rational(-1, 8));
  CHECK(pow(Rational(5), 0) == Rational(1));
  CHECK(code_of([] { pow(Rational(0), -1); }) == Errc::invalid_argument);
  CHECK(floor(Rational(-7, 4)) == -2);
  CHECK(ceil(Rational(-7, 4)) == -1);
  CHECK(floor(Rational(3)) == 3);
  CHECK(chz::factorial(6) == 720);
  CHECK(Rational(-1, 3) < Rational(-1, 4));
}

TEST_CASE("rational field laws on random triples") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    const Rational a = oracle::random_rational(rng, 40, 30);
    const Rational b = oracle::random_rational(rng, 40, 30);
    const Rational c = oracle::random_rational(rng, 40, 30);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    for (const Rational& r : {a + b, a - c, a * b * c}) {
      CHECK(gcd(r.numerator(), r.denominator()) == 1);
      CHECK(r.denominator() > 0);
    }
  }
}

TEST_CASE("det_exact examples") {
  CHECK(det_exact(mat(1, {Rational(5, 3)})) == Rational(5, 3));
  CHECK(det_exact(mat(2, {Rational(1, 3), 0, 0, Rational(1, 45)})) == Rational(1, 135));
  // 2x2 of zeta_0(2..4) from the power-sum oracle, expanded by cofactors.
  const auto z = oracle::spectral_zeta(0, 0, 4);
  const Rational cofactor = z[2] * z[4] - z[3] * z[3];
  CHECK(cofactor == Rational(1, 135));
  CHECK(det_exact(mat(2, {z[2], z[3], z[3], z[4]})) == cofactor);
}

TEST_CASE("det_exact handles zero pivots and singular matrices") {
  CHECK(det_exact(mat(2, {0, 1, 1, 0})) == Rational(-1));
  CHECK(det_exact(mat(3, {0, 0, 1, 0, 1, 0, 1, 0, 0})) == Rational(-1));
  CHECK(det_exact(mat(3, {1, 2, 3, 2, 4, 6, Rational(1, 2), 7, 1})) == Rational(0));
  CHECK(det_exact(mat(2, {0, 0, 0, 0})) == Rational(0));
}

TEST_CASE("det_exact agrees with Leibniz on random matrices") {
  std::mt19937_64 rng(2024);
  for (std::size_t dim = 1; dim <= 5; ++dim) {
    for (int trial = 0; trial < 40; ++trial) {
      const ExactMatrix m = oracle::random_matrix(rng, dim);
      CHECK(det_exact(m) == oracle::leibniz_det(m));
    }
  }
  // Sparse matrices exercise pivot swaps.
  std::bernoulli_distribution keep(0.4);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Rational> e;
    for (int i = 0; i < 25; ++i) e.push_back(keep(rng) ? oracle::random_rational(rng) : Rational(0));
    const ExactMatrix m(5, e);
    CHECK(det_exact(m) == oracle::leibniz_det(m));
  }
}

TEST_CASE("matrix construction") {
  CHECK(code_of([] { ExactMatrix(2, {1, 2, 3}); }) == Errc::invalid_argument);
  CHECK(code_of([] { ExactMatrix(0, {}); }) == Errc::invalid_argument);
  const std::vector<Rational> seq{1, 2, 3, 4, 5};
  const ExactMatrix h = ExactMatrix::hankel(3, seq);
  CHECK(h.is_hankel());
  CHECK(h(0, 0) == Rational(1));
  CHECK(h(2, 2) == Rational(5));
  CHECK(h(1, 2) == Rational(4));
  CHECK_FALSE(mat(2, {1, 2, 3, 4}).is_hankel());
  CHECK(code_of([&] { ExactMatrix::hankel(4, seq); }) == Errc::invalid_argument);
  CHECK(ExactMatrix::identity(3) == ExactMatrix::from_function(3, [](auto i, auto j) { return Rational(i == j); }));
}

TEST_CASE("diag_scale examples") {
  const ExactMatrix s = diag_scale(ExactMatrix::identity(2), 2);
  CHECK(s == mat(2, {4, 0, 0, 16}));
  CHECK(det_exact(s) / det_exact(ExactMatrix::identity(2)) == Rational(64));
  CHECK(diag_scale(mat(1, {Rational(3, 7)}), Rational(-2, 5)) == mat(1, {Rational(12, 175)}));
  CHECK(code_of([] { diag_scale(ExactMatrix::identity(2), 0); }) == Errc::invalid_argument);

  // h_{i+j} = (1/2)^{i+j} g_{i+j} with i, j counted from 1 recovers G.
  std::vector<Rational> g{Rational(1, 3), Rational(-2, 5), 7, Rational(1, 9), 4};
  const ExactMatrix G = ExactMatrix::hankel(3, g);
  const ExactMatrix H = ExactMatrix::from_function(3, [&](auto i, auto j) {
    return pow(Rational(1, 2), static_cast<long>(i + j + 2)) * g[i + j];
  });
  CHECK(diag_scale(G, Rational(1, 2)) == H);
  CHECK(oracle::leibniz_det(H) == pow(Rational(1, 2), 12) * oracle::leibniz_det(G));
}

TEST_CASE("diag_scale determinant law on random matrices") {
  std::mt19937_64 rng(7);
  for (std::size_t dim = 1; dim <= 5; ++dim) {
    for (int trial = 0; trial < 10; ++trial) {
      const ExactMatrix m = oracle::random_matrix(rng, dim);
      Rational alpha = oracle::random_rational(rng);
      if (alpha.is_zero()) alpha = Rational(3, 2);
      CHECK(det_exact(diag_scale(m, alpha)) == pow(alpha, static_cast<long>(dim * (dim + 1))) * det_exact(m));
    }
  }
}
