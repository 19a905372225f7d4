#include "rational.hpp"

#include <cctype>
#include <ostream>
#include <utility>

#include "error.hpp"

namespace chz {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_argument: return "InvalidArgument";
    case Errc::parse_error: return "ParseError";
    case Errc::singular_parameter: return "SingularParameter";
    case Errc::excluded_parameter: return "ExcludedParameter";
    case Errc::boundary_parameter: return "BoundaryParameter";
    case Errc::unsupported_ell: return "UnsupportedEll";
    case Errc::degenerate_recursion: return "DegenerateRecursion";
    case Errc::singular_b: return "SingularB";
    case Errc::no_convergence: return "NoConvergence";
    case Errc::contour_too_close: return "ContourTooClose";
    case Errc::newton_diverged: return "NewtonDiverged";
    case Errc::verification_failed: return "VerificationFailed";
  }
  return "Unknown";
}

Rational::Rational(long num, long den) {
  if (den == 0) fail(Errc::invalid_argument, "zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) fail(Errc::invalid_argument, "zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational::Rational(mpq_class q) : q_(std::move(q)) {
  if (q_.get_den() == 0) fail(Errc::invalid_argument, "zero denominator");
  q_.canonicalize();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s))
    fail(Errc::parse_error, "not an exact rational (expected p/q or integer): '" + std::string(whole) + "'");
  mpz_class v(std::string(s), 10);
  return negative ? mpz_class(-v) : v;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  const mpz_class num = parse_integer(text.substr(0, slash), text);
  const auto den_text = text.substr(slash + 1);
  if (!all_digits(den_text))
    fail(Errc::parse_error, "denominator must be a positive integer: '" + std::string(text) + "'");
  const mpz_class den(std::string(den_text), 10);
  if (den == 0) fail(Errc::parse_error, "zero denominator: '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string Rational::str() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& o) {
  q_ += o.q_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  q_ -= o.q_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  q_ *= o.q_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) fail(Errc::invalid_argument, "division by zero");
  q_ /= o.q_;
  return *this;
}

Rational pow(const Rational& base, long exponent) {
  if (exponent < 0) {
    if (base.is_zero()) fail(Errc::invalid_argument, "zero raised to a negative power");
    return pow(Rational(base.denominator(), base.numerator()), -exponent);
  }
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.numerator().get_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), base.denominator().get_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(num, den);
}

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

mpz_class floor(const Rational& x) {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), x.numerator().get_mpz_t(), x.denominator().get_mpz_t());
  return r;
}

mpz_class ceil(const Rational& x) {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), x.numerator().get_mpz_t(), x.denominator().get_mpz_t());
  return r;
}

mpz_class factorial(unsigned n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.str(); }

}  // namespace chz
