#pragma once

#include <cstddef>
#include <vector>

#include "geronimus/banded_matrix.hpp"
#include "geronimus/check_report.hpp"
#include "geronimus/orthopoly.hpp"
#include "geronimus/polynomial.hpp"

// Brute-force routes kept apart from the main construction: their own
// elimination, their own bilinear-form evaluation, their own dense product.
namespace geronimus::oracle {

using OracleReport = CheckReport;

// Determinant by plain Gaussian elimination over the rationals with row swaps.
Rational determinant(std::vector<std::vector<Rational>> m);

// Monic P_n as the bordered Gram determinant divided by the order-n leading
// minor. Throws NotRegular(k) for the first vanishing minor with k <= n.
Polynomial heine_polynomial(const GramMatrix& g, std::size_t n);

struct OrthogonalityReport {
  OracleReport report;
  std::vector<Rational> norms_sq;  // form(P_n, P_n)
};

// form(P_n, t^k) = 0 for every k < n; first failure reported at (n, k).
OrthogonalityReport check_orthogonality(const GramMatrix& g, const std::vector<Polynomial>& polys);

// band_mul(a, b) against a naive triple loop.
OracleReport dense_mul_check(const BandedMatrix<Rational>& a, const BandedMatrix<Rational>& b);
OracleReport dense_mul_check(const BandedMatrix<Rational>& a, const BandedMatrix<Rational>& b,
                             const BandedMatrix<Rational>& product);

}  // namespace geronimus::oracle
