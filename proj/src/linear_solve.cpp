#include "geronimus/linear_solve.hpp"

#include <utility>

#include "geronimus/errors.hpp"

namespace geronimus {

namespace {

void swap_rows(RationalMatrix& m, std::size_t r1, std::size_t r2) {
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r1, j), m(r2, j));
}

// In-place Bareiss elimination on the first `n` columns of an n x m matrix.
// Returns the determinant sign from row swaps, or 0 if a column has no
// nonzero pivot (the index of that column is written to `failed`).
int bareiss(RationalMatrix& m, std::size_t n, std::size_t& failed) {
  int sign = 1;
  Rational prev(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m(p, k).is_zero()) ++p;
    if (p == n) {
      failed = k;
      return 0;
    }
    if (p != k) {
      swap_rows(m, p, k);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < m.cols(); ++j) {
        m(i, j) = (m(k, k) * m(i, j) - m(i, k) * m(k, j)) / prev;
      }
      m(i, k) = Rational(0);
    }
    prev = m(k, k);
  }
  return sign;
}

}  // namespace

std::vector<Rational> solve_linear(const RationalMatrix& a, const std::vector<Rational>& rhs) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw DimensionMismatch("solve_linear: matrix is not square");
  if (rhs.size() != n) throw DimensionMismatch("solve_linear: rhs length mismatch");

  RationalMatrix aug(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = rhs[i];
  }
  std::size_t failed = 0;
  if (bareiss(aug, n, failed) == 0) throw SingularMatrix(failed);

  std::vector<Rational> x(n);
  for (std::size_t ii = n; ii-- > 0;) {
    Rational acc = aug(ii, n);
    for (std::size_t j = ii + 1; j < n; ++j) acc -= aug(ii, j) * x[j];
    x[ii] = acc / aug(ii, ii);
  }
  return x;
}

Rational determinant(const RationalMatrix& a) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw DimensionMismatch("determinant: matrix is not square");
  if (n == 0) return Rational(1);
  RationalMatrix m = a;
  std::size_t failed = 0;
  const int sign = bareiss(m, n, failed);
  if (sign == 0) return Rational(0);
  return sign > 0 ? m(n - 1, n - 1) : -m(n - 1, n - 1);
}

std::vector<Rational> leading_minors(const RationalMatrix& a) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw DimensionMismatch("leading_minors: matrix is not square");
  std::vector<Rational> minors;
  minors.reserve(n);

  // Without row exchanges the k-th Bareiss pivot is the order-(k+1) leading
  // minor. Once a pivot vanishes, fall back to one determinant per order.
  RationalMatrix m = a;
  Rational prev(1);
  std::size_t k = 0;
  for (; k < n; ++k) {
    if (m(k, k).is_zero()) break;
    minors.push_back(m(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(k, k) * m(i, j) - m(i, k) * m(k, j)) / prev;
      m(i, k) = Rational(0);
    }
    prev = m(k, k);
  }
  for (; k < n; ++k) minors.push_back(determinant(a.leading(k + 1)));
  return minors;
}

std::vector<Rational> mat_vec(const RationalMatrix& a, const std::vector<Rational>& x) {
  if (a.cols() != x.size()) throw DimensionMismatch("mat_vec: dimension mismatch");
  std::vector<Rational> y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
  return y;
}

}  // namespace geronimus
