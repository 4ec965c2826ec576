#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "geronimus/linear_solve.hpp"
#include "geronimus/moments.hpp"
#include "geronimus/polynomial.hpp"
#include "geronimus/rational.hpp"

namespace geronimus {

enum class FormSource { base, geronimus1, geronimus2 };

const char* to_string(FormSource source);

// Gram matrix (form(t^i, t^j))_{i,j=0..n} of a symmetric bilinear form.
class GramMatrix {
 public:
  GramMatrix(RationalMatrix entries, FormSource source);

  // Number of rows (n + 1).
  std::size_t size() const noexcept { return entries_.rows(); }
  const Rational& operator()(std::size_t i, std::size_t j) const { return entries_(i, j); }
  const RationalMatrix& matrix() const noexcept { return entries_; }
  FormSource source() const noexcept { return source_; }

  // Entry (i, j) depends on i + j only.
  bool is_hankel() const;

  // form(f, g) = sum_ij f_i g_j G(i, j). Throws IndexOutOfRange when a degree
  // exceeds n.
  Rational apply(const Polynomial& f, const Polynomial& g) const;

 private:
  RationalMatrix entries_;
  FormSource source_;
};

// (n+1) x (n+1) Gram matrices in the monomial basis.
GramMatrix build_gram(const MomentFunctional& form, std::size_t n);
GramMatrix build_gram(const GeronimusMoments1& form, std::size_t n);
GramMatrix build_gram(const GeronimusMoments2& form, std::size_t n);

struct RegularityReport {
  std::vector<Rational> minors;  // minors[k-1] = order-k leading minor
  bool regular = false;
  bool positive_definite = false;
  std::optional<std::size_t> first_singular;     // smallest k with minor == 0
  std::optional<std::size_t> first_nonpositive;  // smallest k with minor <= 0
};

RegularityReport regularity_check(const GramMatrix& g);

// Monic orthogonal polynomials P_0..P_n of a regular Gram matrix of size n+1.
// b and c_sq are filled only for Hankel sources: b[k] = b_k and
// c_sq[k] = (c_k)^2 = h_{k+1}^2 / h_k^2 for k <= n-1.
struct MonicOPS {
  std::vector<Polynomial> polys;
  std::vector<Rational> norms_sq;
  std::vector<Rational> b;
  std::vector<Rational> c_sq;
  GramMatrix gram;

  std::size_t max_degree() const noexcept { return polys.size() - 1; }
  bool has_recurrence() const noexcept { return !b.empty(); }
};

// Throws NotRegular(k) at the first vanishing leading minor.
MonicOPS monic_ops(const GramMatrix& g);

// Second-kind polynomials Q_n(x) = L_t[(P_n(t) - P_n(x)) / (t - x)] with the
// values Q_n(0) and Q'_n(0).
struct SecondKindValues {
  std::vector<Polynomial> q;
  std::vector<Rational> q0;
  std::vector<Rational> qp0;
  MomentFunctional base;
};

// Apply the moment functional: sum_k p_k s_k.
Rational apply_functional(const MomentFunctional& base, const Polynomial& p);

SecondKindValues second_kind(const MomentFunctional& base, const MonicOPS& ops);

struct RValue {
  Rational value;       // R_n(0; s) = s P_n(0) + Q_n(0)
  Rational derivative;  // R'_n(0; s) = s P'_n(0) + Q'_n(0)
  friend bool operator==(const RValue&, const RValue&) = default;
};

std::vector<RValue> r_values(const SecondKindValues& sk, const MonicOPS& ops, const Rational& s);

// Coefficients of p in the monic basis `basis` (basis[k] of degree k), by
// back substitution from the top degree. Throws DomainError if deg p exceeds
// the basis.
std::vector<Rational> expand_in_basis(const Polynomial& p, const std::vector<Polynomial>& basis);

// Determinant of the n x n matrix whose first column holds polynomials and
// whose remaining n-1 columns hold `rest` (n x (n-1)), by cofactor expansion
// along the polynomial column.
Polynomial bordered_determinant(const std::vector<Polynomial>& column, const RationalMatrix& rest);

}  // namespace geronimus
