#pragma once

#include <mpfr.h>

#include <iosfwd>
#include <string>

#include "geronimus/rational.hpp"

namespace geronimus {

inline constexpr long kDefaultPrecision = 256;
inline constexpr long kMinPrecision = 64;

// Binary floating point at an explicit precision (bits). Every operation rounds
// to nearest; the result of a binary operation carries the larger precision of
// its operands.
class BigFloat {
 public:
  explicit BigFloat(long precision = kDefaultPrecision);
  BigFloat(const Rational& r, long precision);  // correctly rounded
  BigFloat(long value, long precision);
  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  long precision() const noexcept { return static_cast<long>(mpfr_get_prec(v_)); }

  // 2^exponent at the given precision.
  static BigFloat exp2(long exponent, long precision);

  // Exact value of the stored binary float.
  Rational to_rational() const;
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  // Scientific notation with `digits` significant decimal digits; deterministic.
  std::string str(int digits) const;
  // Digits matching the precision (floor(p * log10 2)).
  std::string str() const;

  int sign() const noexcept { return mpfr_sgn(v_); }
  bool is_zero() const noexcept { return mpfr_zero_p(v_) != 0; }

  BigFloat& operator+=(const BigFloat& o);
  BigFloat& operator-=(const BigFloat& o);
  BigFloat& operator*=(const BigFloat& o);
  BigFloat& operator/=(const BigFloat& o);

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
  BigFloat operator-() const;

  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_); }
  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_); }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.v_, b.v_); }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return b < a; }

  friend BigFloat sqrt(const BigFloat& x);
  friend BigFloat abs(const BigFloat& x);

 private:
  mpfr_t v_;
};

BigFloat max(const BigFloat& a, const BigFloat& b);

std::ostream& operator<<(std::ostream& os, const BigFloat& x);

}  // namespace geronimus
