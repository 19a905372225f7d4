#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace chz {

// Arbitrary-precision rational, always stored in lowest terms with a positive
// denominator (zero is 0/1).
class Rational {
 public:
  Rational() = default;
  Rational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(const mpz_class& value) : q_(value) {}
  explicit Rational(mpq_class q);

  // Accepts "p/q" or "p" with optional sign; rejects decimals and zero denominators.
  static Rational parse(std::string_view text);

  // "p/q" in lowest terms, or "p" when the denominator is 1.
  std::string str() const;
  double to_double() const { return q_.get_d(); }

  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return q_.get_den() == 1; }

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  // Division by zero throws Error(invalid_argument).
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class q_{0};
};

// Integer powers; negative exponents invert (zero base with negative exponent throws).
Rational pow(const Rational& base, long exponent);
Rational abs(const Rational& x);
// Largest integer <= x.
mpz_class floor(const Rational& x);
mpz_class ceil(const Rational& x);
mpz_class factorial(unsigned n);

std::ostream& operator<<(std::ostream& os, const Rational& x);

}  // namespace chz
