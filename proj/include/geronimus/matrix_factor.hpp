#pragma once

#include <cstddef>
#include <vector>

#include "geronimus/banded_matrix.hpp"
#include "geronimus/bigfloat.hpp"
#include "geronimus/check_report.hpp"
#include "geronimus/double_transform.hpp"
#include "geronimus/orthopoly.hpp"
#include "geronimus/single_transform.hpp"

namespace geronimus {

using RationalBand = BandedMatrix<Rational>;
using FloatBand = BandedMatrix<BigFloat>;

// N x N truncation of the monic Jacobi matrix: diagonal b_n, subdiagonal
// (c_{n-1})^2, superdiagonal 1. Row n is t P_n in the P basis.
struct MonicJacobi {
  std::vector<Rational> b;     // b_0 .. b_{N-1}
  std::vector<Rational> c_sq;  // (c_0)^2 .. (c_{N-2})^2

  std::size_t size() const noexcept { return b.size(); }
  RationalBand matrix() const;
};

MonicJacobi build_monic_jacobi(const MonicOPS& ops, std::size_t n);

// N x N matrix whose row n holds the coefficients of t^power * basis[n] in the
// basis. Needs basis[0 .. N - 1 + power]. Throws ExpansionResidual if a row
// has a component further than `power` below the diagonal.
RationalBand multiplication_matrix(const std::vector<Polynomial>& basis, unsigned power, std::size_t n);

enum class DarbouxKind { single, twofold };

// l_mon is unit lower triangular, u_mon upper triangular with unit outermost
// superdiagonal.
//   single:  t P_n   = P*_{n+1} + F_{n+1} P*_n
//   twofold: t^2 P_n = P**_{n+2} + D_{n+1} P**_{n+1} + E_{n+1} P**_n
struct DarbouxFactors {
  DarbouxKind kind;
  RationalBand l_mon;
  RationalBand u_mon;

  std::size_t size() const noexcept { return l_mon.size(); }
  // F_{n+1} (single) or E_{n+1} (twofold).
  const Rational& diag_u(std::size_t n) const { return u_mon(n, n); }
};

// Needs st.n_max() >= N.
DarbouxFactors darboux_factors_single(const MonicOPS& base_ops, const SingleTransform& st, std::size_t n);
// Needs dt.n_max() >= N + 1. Throws ZeroE(n + 1) if E_{n+1} = 0.
DarbouxFactors darboux_factors_double(const MonicOPS& base_ops, const DoubleTransform& dt, std::size_t n);

// Guard band g: 1 for single, 2 for twofold.
std::size_t guard_band(DarbouxKind kind) noexcept;

// Exact checks on the leading (N - g) blocks:
//   single:  U L = J_mon,   L U = target (J*_mon)
//   twofold: U L = J_mon^2, L U = target (J**_mon)
CheckReport verify_darboux(const MonicJacobi& j, const DarbouxFactors& f, const RationalBand& target);

// Lower-banded Cholesky factor of the symmetric Jacobi matrix together with
// the symmetric matrix itself, both at binary precision `precision`.
struct SymmetricBandFactor {
  FloatBand l;
  FloatBand j_sym;
  long precision;
};

struct CholeskyCheck {
  SymmetricBandFactor factor;
  CheckReport report;
};

// Requires every h_n^2 and transformed norm up to N to be positive.
// Floating checks use tolerance 2^(-p/2) on the leading (N - g) block; all
// entries of L L^T are additionally checked exactly through their rational
// numerators.
CholeskyCheck symmetric_cholesky_check(const SingleTransform& st, const MonicOPS& base_ops,
                                       const MomentFunctional& base, std::size_t n, long precision);
CholeskyCheck symmetric_cholesky_check(const DoubleTransform& dt, const MonicOPS& base_ops,
                                       const MomentFunctional& base, std::size_t n, long precision);

}  // namespace geronimus
