#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <vector>

#include "geronimus/rational.hpp"

namespace geronimus {

// Dense polynomial over Q in the monomial basis: coeffs()[k] multiplies t^k.
// Trailing zeros are never stored, so the zero polynomial has no coefficients
// and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  Polynomial(std::initializer_list<Rational> coeffs);

  static Polynomial constant(const Rational& c);
  static Polynomial monomial(std::size_t k, const Rational& c = Rational(1));

  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_monic() const;
  // Coefficient of t^k; zero beyond the degree.
  Rational coeff(std::size_t k) const;
  Rational lead() const;

  Rational operator()(const Rational& x) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;

  // Multiply by t^k.
  Polynomial shifted_up(std::size_t k) const;
  // Divide by t^k; the k lowest coefficients must vanish.
  Polynomial shifted_down(std::size_t k) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

// Horner evaluation.
Rational poly_eval(const Polynomial& p, const Rational& x);
Polynomial poly_derivative(const Polynomial& p);

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace geronimus
