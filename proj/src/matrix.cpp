#include "matrix.hpp"

#include <utility>

#include "error.hpp"

namespace chz {

ExactMatrix::ExactMatrix(std::size_t dim, std::vector<Rational> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (dim_ == 0) fail(Errc::invalid_argument, "matrix dimension must be >= 1");
  if (entries_.size() != dim_ * dim_) fail(Errc::invalid_argument, "matrix entry count does not match dim*dim");
}

ExactMatrix ExactMatrix::from_function(std::size_t dim,
                                       const std::function<Rational(std::size_t, std::size_t)>& entry) {
  std::vector<Rational> e;
  e.reserve(dim * dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) e.push_back(entry(i, j));
  return ExactMatrix(dim, std::move(e));
}

ExactMatrix ExactMatrix::identity(std::size_t dim) {
  return from_function(dim, [](std::size_t i, std::size_t j) { return Rational(i == j ? 1 : 0); });
}

ExactMatrix ExactMatrix::hankel(std::size_t dim, std::span<const Rational> seq) {
  if (dim == 0 || seq.size() < 2 * dim - 1)
    fail(Errc::invalid_argument, "Hankel sequence too short for requested dimension");
  return from_function(dim, [&](std::size_t i, std::size_t j) { return seq[i + j]; });
}

bool ExactMatrix::is_hankel() const {
  for (std::size_t i = 0; i + 1 < dim_; ++i)
    for (std::size_t j = 1; j < dim_; ++j)
      if ((*this)(i, j) != (*this)(i + 1, j - 1)) return false;
  return true;
}

Rational det_exact(const ExactMatrix& m) {
  const std::size_t n = m.dim();
  std::vector<mpz_class> a(n * n);
  mpz_class scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    mpz_class row_lcm = 1;
    for (std::size_t j = 0; j < n; ++j) {
      const mpz_class d = m(i, j).denominator();
      mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(), d.get_mpz_t());
    }
    for (std::size_t j = 0; j < n; ++j)
      a[i * n + j] = m(i, j).numerator() * (row_lcm / m(i, j).denominator());
    scale *= row_lcm;
  }

  auto at = [&](std::size_t i, std::size_t j) -> mpz_class& { return a[i * n + j]; };
  int sign = 1;
  mpz_class prev_pivot = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && at(p, k) == 0) ++p;
      if (p == n) return Rational(0);
      for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class t = at(k, k) * at(i, j) - at(i, k) * at(k, j);
        mpz_divexact(at(i, j).get_mpz_t(), t.get_mpz_t(), prev_pivot.get_mpz_t());
      }
      at(i, k) = 0;
    }
    prev_pivot = at(k, k);
  }
  mpz_class det = at(n - 1, n - 1);
  if (sign < 0) det = -det;
  return Rational(det, scale);
}

ExactMatrix diag_scale(const ExactMatrix& m, const Rational& alpha) {
  if (alpha.is_zero()) fail(Errc::invalid_argument, "diag_scale requires alpha != 0");
  std::vector<Rational> powers;
  powers.reserve(m.dim());
  Rational p = alpha;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    powers.push_back(p);
    p *= alpha;
  }
  return ExactMatrix::from_function(m.dim(),
                                    [&](std::size_t i, std::size_t j) { return powers[i] * m(i, j) * powers[j]; });
}

}  // namespace chz
