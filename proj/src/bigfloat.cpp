#include "geronimus/bigfloat.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <utility>
#include <vector>

#include "geronimus/errors.hpp"

namespace geronimus {

namespace {

mpfr_prec_t checked(long precision) {
  if (precision < kMinPrecision || precision > MPFR_PREC_MAX) {
    throw DomainError("BigFloat: unsupported precision " + std::to_string(precision));
  }
  return static_cast<mpfr_prec_t>(precision);
}

long wider(const BigFloat& a, const BigFloat& b) { return std::max(a.precision(), b.precision()); }

}  // namespace

BigFloat::BigFloat(long precision) {
  mpfr_init2(v_, checked(precision));
  mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(const Rational& r, long precision) {
  mpfr_init2(v_, checked(precision));
  mpfr_set_q(v_, r.raw().get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(long value, long precision) {
  mpfr_init2(v_, checked(precision));
  mpfr_set_si(v_, value, MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_swap(v_, other.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  mpfr_swap(v_, other.v_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::exp2(long exponent, long precision) {
  BigFloat out(precision);
  mpfr_set_ui_2exp(out.v_, 1, exponent, MPFR_RNDN);
  return out;
}

Rational BigFloat::to_rational() const {
  if (!mpfr_number_p(v_)) throw DomainError("BigFloat: non-finite value");
  mpq_class q;
  mpfr_get_q(q.get_mpq_t(), v_);
  return Rational(q);
}

std::string BigFloat::str(int digits) const {
  const int n = std::max(digits, 1);
  const int size = mpfr_snprintf(nullptr, 0, "%.*Re", n - 1, v_);
  std::vector<char> buf(static_cast<std::size_t>(size) + 1);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Re", n - 1, v_);
  return std::string(buf.data(), static_cast<std::size_t>(size));
}

std::string BigFloat::str() const {
  return str(static_cast<int>(std::floor(static_cast<double>(precision()) * std::log10(2.0))));
}

BigFloat& BigFloat::operator+=(const BigFloat& o) { return *this = *this + o; }
BigFloat& BigFloat::operator-=(const BigFloat& o) { return *this = *this - o; }
BigFloat& BigFloat::operator*=(const BigFloat& o) { return *this = *this * o; }
BigFloat& BigFloat::operator/=(const BigFloat& o) { return *this = *this / o; }

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
  BigFloat out(wider(a, b));
  mpfr_add(out.v_, a.v_, b.v_, MPFR_RNDN);
  return out;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
  BigFloat out(wider(a, b));
  mpfr_sub(out.v_, a.v_, b.v_, MPFR_RNDN);
  return out;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
  BigFloat out(wider(a, b));
  mpfr_mul(out.v_, a.v_, b.v_, MPFR_RNDN);
  return out;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
  if (b.is_zero()) throw DomainError("BigFloat: division by zero");
  BigFloat out(wider(a, b));
  mpfr_div(out.v_, a.v_, b.v_, MPFR_RNDN);
  return out;
}

BigFloat BigFloat::operator-() const {
  BigFloat out(precision());
  mpfr_neg(out.v_, v_, MPFR_RNDN);
  return out;
}

BigFloat sqrt(const BigFloat& x) {
  if (x.sign() < 0) throw DomainError("BigFloat: square root of a negative value");
  BigFloat out(x.precision());
  mpfr_sqrt(out.v_, x.v_, MPFR_RNDN);
  return out;
}

BigFloat abs(const BigFloat& x) {
  BigFloat out(x.precision());
  mpfr_abs(out.v_, x.v_, MPFR_RNDN);
  return out;
}

BigFloat max(const BigFloat& a, const BigFloat& b) { return a < b ? b : a; }

std::ostream& operator<<(std::ostream& os, const BigFloat& x) { return os << x.str(); }

}  // namespace geronimus
