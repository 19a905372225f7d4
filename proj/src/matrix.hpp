#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "rational.hpp"

namespace chz {

// Square matrix of exact rationals. Immutable once built.
class ExactMatrix {
 public:
  // Throws Error(invalid_argument) unless entries.size() == dim*dim and dim >= 1.
  ExactMatrix(std::size_t dim, std::vector<Rational> entries);

  static ExactMatrix from_function(std::size_t dim,
                                   const std::function<Rational(std::size_t, std::size_t)>& entry);
  static ExactMatrix identity(std::size_t dim);
  // Hankel matrix with (i,j) entry seq[i+j]; needs seq.size() >= 2*dim-1.
  static ExactMatrix hankel(std::size_t dim, std::span<const Rational> seq);

  std::size_t dim() const { return dim_; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }

  bool is_hankel() const;

  friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

 private:
  std::size_t dim_;
  std::vector<Rational> entries_;
};

// Exact determinant. Each row is cleared of denominators, then the integer
// matrix is reduced by Bareiss' fraction-free elimination with row pivoting.
Rational det_exact(const ExactMatrix& m);

// D(alpha) * m * D(alpha) with D(alpha) = diag(alpha, alpha^2, ..., alpha^n).
// det of the result is alpha^{n(n+1)} det(m). Rejects alpha = 0.
ExactMatrix diag_scale(const ExactMatrix& m, const Rational& alpha);

}  // namespace chz
