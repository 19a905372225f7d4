#include "zeta.hpp"

#include <string>
#include <utility>

#include "error.hpp"

namespace chz {

namespace {

// x in -(N+1)/2, i.e. 2x is an integer <= -2.
bool in_general_singular_set(const Rational& x) {
  const Rational twice = x * Rational(2);
  return twice.is_integer() && twice <= Rational(-2);
}

// x in -N - 1/2.
bool in_half_integer_singular_set(const Rational& x) {
  const Rational shifted = x + Rational(1, 2);
  return shifted.is_integer() && shifted <= Rational(-1);
}

}  // namespace

bool CoulombParams::valid_general() const { return !in_general_singular_set(L); }
bool CoulombParams::valid_bessel() const { return !in_half_integer_singular_set(L); }
bool CoulombParams::valid() const { return bessel_branch() ? valid_bessel() : valid_general(); }

void require_valid(const CoulombParams& p) {
  if (p.valid()) return;
  if (p.bessel_branch())
    fail(Errc::singular_parameter, "L=" + p.L.str() + " on excluded set -N-1/2 (eta=0)");
  fail(Errc::singular_parameter, "L=" + p.L.str() + " on excluded set -(N+1)/2");
}

bool is_negative_integer(const Rational& x) { return x.is_integer() && x.sign() < 0; }

Rational zeta_base(const CoulombParams& p) {
  const Rational denom = Rational(2) * p.L + Rational(3);
  if (denom.is_zero()) fail(Errc::singular_parameter, "2L+3 = 0 in zeta_L(2)");
  if (p.eta.is_zero()) return Rational(1) / denom;
  const Rational l1 = p.L + Rational(1);
  if (l1.is_zero()) fail(Errc::singular_parameter, "L+1 = 0 with eta != 0 in zeta_L(2)");
  return (Rational(1) + p.eta * p.eta / (l1 * l1)) / denom;
}

ZetaTable::ZetaTable(CoulombParams params, int kmax) : params_(std::move(params)) {
  require_valid(params_);
  values_.push_back(zeta_base(params_));
  extend(kmax);
}

void ZetaTable::extend(int kmax) {
  if (kmax < 2) fail(Errc::invalid_argument, "kmax must be >= 2");
  const bool bessel = params_.bessel_branch();
  const Rational two_eta_over = bessel ? Rational(0) : Rational(2) * params_.eta / (params_.L + Rational(1));
  values_.reserve(static_cast<std::size_t>(kmax - 1));
  // Entry zeta(k+1) from zeta(2..k).
  for (int k = this->kmax(); k < kmax; ++k) {
    const int target = k + 1;
    // At eta = 0 every odd-index value vanishes; the recurrence there is 0/0
    // for some negative integer L, so it is not evaluated.
    if (bessel && target % 2 == 1) {
      values_.emplace_back(0);
      continue;
    }
    const Rational denom = Rational(2) * params_.L + Rational(k + 2);
    if (denom.is_zero()) fail(Errc::singular_parameter, "2L+k+2 = 0 at k=" + std::to_string(k));
    Rational acc = bessel ? Rational(0) : two_eta_over * at(k);
    for (int l = 1; l <= k - 2; ++l) {
      const Rational& a = at(l + 1);
      const Rational& b = at(k - l);
      if (!a.is_zero() && !b.is_zero()) acc += a * b;
    }
    values_.push_back(acc / denom);
  }
}

const Rational& ZetaTable::at(int k) const {
  if (k < 2 || k > kmax())
    fail(Errc::invalid_argument, "zeta index " + std::to_string(k) + " outside table [2," + std::to_string(kmax()) + "]");
  return values_[static_cast<std::size_t>(k - 2)];
}

ZetaTable zeta_extend(ZetaTable table, int kmax) {
  table.extend(kmax);
  return table;
}

namespace {

CoulombParams bessel_params(const Rational& nu) {
  if (is_negative_integer(nu)) fail(Errc::singular_parameter, "nu=" + nu.str() + " is a negative integer");
  return CoulombParams{nu - Rational(1, 2), Rational(0)};
}

}  // namespace

RayleighSequence::RayleighSequence(const Rational& nu) : nu_(nu), table_(bessel_params(nu)) {}

Rational RayleighSequence::sigma(int k) {
  if (k < 1) fail(Errc::invalid_argument, "Rayleigh order index k must be >= 1");
  if (table_.kmax() < 2 * k) table_.extend(2 * k);
  return table_.at(2 * k) / Rational(2);
}

Rational rayleigh(const Rational& nu, int k) {
  RayleighSequence seq(nu);
  return seq.sigma(k);
}

Rational bernoulli(int n) {
  if (n < 1) fail(Errc::invalid_argument, "bernoulli(n) needs n >= 1");
  const Rational sigma = rayleigh(Rational(1, 2), n);
  const Rational sign(n % 2 == 1 ? 1 : -1);
  return sign * Rational(factorial(static_cast<unsigned>(2 * n))) * pow(Rational(2), 1 - 2 * n) * sigma;
}

Rational genocchi(int n) {
  if (n < 1) fail(Errc::invalid_argument, "genocchi(n) needs n >= 1");
  return Rational(2) * (Rational(1) - pow(Rational(2), 2 * n)) * bernoulli(n);
}

Rational genocchi_via_rayleigh(int n) {
  if (n < 1) fail(Errc::invalid_argument, "genocchi(n) needs n >= 1");
  const Rational sigma = rayleigh(Rational(-1, 2), n);
  const Rational sign(n % 2 == 0 ? 1 : -1);
  return sign * Rational(factorial(static_cast<unsigned>(2 * n))) * pow(Rational(2), 2 - 2 * n) * sigma;
}

}  // namespace chz
