#include "geronimus/oracle.hpp"

#include <utility>

#include "geronimus/errors.hpp"

namespace geronimus::oracle {

Rational determinant(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv][c].is_zero()) ++piv;
    if (piv == n) return Rational(0);
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c].is_zero()) continue;
      const Rational f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

namespace {

std::vector<std::vector<Rational>> block(const GramMatrix& g, std::size_t k) {
  std::vector<std::vector<Rational>> m(k, std::vector<Rational>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) m[i][j] = g(i, j);
  return m;
}

Rational form(const GramMatrix& g, const Polynomial& f, const Polynomial& h) {
  Rational acc(0);
  for (long i = 0; i <= f.degree(); ++i)
    for (long j = 0; j <= h.degree(); ++j)
      acc += f.coeff(static_cast<std::size_t>(i)) * h.coeff(static_cast<std::size_t>(j)) *
             g(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
  return acc;
}

}  // namespace

Polynomial heine_polynomial(const GramMatrix& g, std::size_t n) {
  if (n >= g.size()) throw IndexOutOfRange(n, g.size());
  for (std::size_t k = 1; k <= n; ++k)
    if (determinant(block(g, k)).is_zero()) throw NotRegular(k);
  if (n == 0) return Polynomial::constant(Rational(1));

  // Rows k < n: (G(k, 0), ..., G(k, n)); last row: (1, t, ..., t^n).
  // Coefficient of t^j is the cofactor of the last-row entry.
  const Rational minor_n = determinant(block(g, n));
  std::vector<Rational> coeffs(n + 1);
  for (std::size_t j = 0; j <= n; ++j) {
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0, cc = 0; c <= n; ++c) {
        if (c == j) continue;
        m[r][cc++] = g(r, c);
      }
    const Rational cof = determinant(std::move(m));
    coeffs[j] = ((n + j) % 2 == 0 ? cof : -cof) / minor_n;
  }
  return Polynomial(std::move(coeffs));
}

OrthogonalityReport check_orthogonality(const GramMatrix& g, const std::vector<Polynomial>& polys) {
  OrthogonalityReport out{OracleReport(std::string("orthogonality against ") + to_string(g.source()) + " form"), {}};
  for (std::size_t n = 0; n < polys.size(); ++n) {
    const Polynomial& p = polys[n];
    if (p.degree() >= static_cast<long>(g.size())) throw IndexOutOfRange(static_cast<std::size_t>(p.degree()), g.size());
    for (std::size_t k = 0; k < n; ++k) {
      out.report.expect_equal(form(g, p, Polynomial::monomial(k)), Rational(0), "form(P_n, t^k) = 0", n, k);
    }
    out.norms_sq.push_back(form(g, p, p));
  }
  return out;
}

OracleReport dense_mul_check(const BandedMatrix<Rational>& a, const BandedMatrix<Rational>& b) {
  return dense_mul_check(a, b, band_mul(a, b));
}

OracleReport dense_mul_check(const BandedMatrix<Rational>& a, const BandedMatrix<Rational>& b,
                             const BandedMatrix<Rational>& product) {
  const std::size_t n = a.size();
  if (b.size() != n || product.size() != n) throw DimensionMismatch("dense_mul_check: sizes differ");
  OracleReport report("banded product vs dense product");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Rational acc(0);
      for (std::size_t k = 0; k < n; ++k) acc += a(i, k) * b(k, j);
      report.expect_equal(product(i, j), acc, "(A B)_ij", i, j);
    }
  }
  return report;
}

}  // namespace geronimus::oracle
