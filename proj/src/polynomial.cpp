#include "geronimus/polynomial.hpp"

#include <algorithm>
#include <ostream>
#include <utility>

#include "geronimus/errors.hpp"

namespace geronimus {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(std::size_t k, const Rational& c) {
  std::vector<Rational> v(k + 1);
  v[k] = c;
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

bool Polynomial::is_monic() const { return !coeffs_.empty() && coeffs_.back() == Rational(1); }

Rational Polynomial::coeff(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

Rational Polynomial::lead() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& a : coeffs_) a *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-() const {
  Polynomial out(*this);
  for (auto& a : out.coeffs_) a = -a;
  return out;
}

Polynomial Polynomial::shifted_up(std::size_t k) const {
  if (is_zero()) return {};
  std::vector<Rational> v(k);
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return Polynomial(std::move(v));
}

Polynomial Polynomial::shifted_down(std::size_t k) const {
  const std::size_t cut = std::min(k, coeffs_.size());
  for (std::size_t i = 0; i < cut; ++i) {
    if (!coeffs_[i].is_zero()) throw DomainError("shifted_down: polynomial not divisible by t^k");
  }
  return Polynomial(std::vector<Rational>(coeffs_.begin() + static_cast<long>(cut), coeffs_.end()));
}

Rational poly_eval(const Polynomial& p, const Rational& x) { return p(x); }

Polynomial poly_derivative(const Polynomial& p) {
  const auto& c = p.coeffs();
  if (c.size() <= 1) return {};
  std::vector<Rational> d(c.size() - 1);
  for (std::size_t k = 1; k < c.size(); ++k) d[k - 1] = c[k] * Rational(static_cast<long>(k));
  return Polynomial(std::move(d));
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
  if (p.is_zero()) return os << "0";
  bool first = true;
  for (long k = p.degree(); k >= 0; --k) {
    const Rational& c = p.coeffs()[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    if (!first) os << (c.sign() < 0 ? " - " : " + ");
    else if (c.sign() < 0) os << "-";
    const Rational m = abs(c);
    if (k == 0 || m != Rational(1)) os << m;
    if (k > 0) os << "t" << (k > 1 ? "^" + std::to_string(k) : "");
    first = false;
  }
  return os;
}

}  // namespace geronimus
