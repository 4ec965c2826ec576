#pragma once

#include <vector>

#include "geronimus/dense_matrix.hpp"
#include "geronimus/rational.hpp"

namespace geronimus {

using RationalMatrix = DenseMatrix<Rational>;

// Exact solution of a x = rhs by fraction-free (Bareiss) elimination, pivoting
// to the first nonzero entry of each column. Throws SingularMatrix.
std::vector<Rational> solve_linear(const RationalMatrix& a, const std::vector<Rational>& rhs);

// Exact determinant via the same elimination; zero for singular input.
Rational determinant(const RationalMatrix& a);

// det of every leading principal k x k block, k = 1..n. Index k-1 holds the
// order-k minor.
std::vector<Rational> leading_minors(const RationalMatrix& a);

std::vector<Rational> mat_vec(const RationalMatrix& a, const std::vector<Rational>& x);

}  // namespace geronimus
