#pragma once

#include <cstddef>
#include <vector>

#include "geronimus/check_report.hpp"
#include "geronimus/errors.hpp"
#include "geronimus/moments.hpp"
#include "geronimus/orthopoly.hpp"
#include "geronimus/polynomial.hpp"

namespace geronimus {

// Result of the single Geronimus transformation
//   P*_n = P_n + A_n P_{n-1},
//   A_n = -(s0* P_n(0) + Q_n(0)) / (s0* P_{n-1}(0) + Q_{n-1}(0)).
// Vectors indexed by level n >= 1 store level n at position n - 1.
struct SingleTransform {
  Rational s0_star;
  std::vector<Rational> a;          // A_1 .. A_N
  std::vector<Rational> d_star;     // d*_1 .. d*_N, d*_n = s0* P_{n-1}(0) + Q_{n-1}(0)
  std::vector<Polynomial> p_star;   // P*_0 .. P*_N
  std::vector<Rational> h_star_sq;  // (h*_0)^2 .. (h*_N)^2

  std::size_t n_max() const noexcept { return p_star.empty() ? 0 : p_star.size() - 1; }
  const Rational& A(std::size_t n) const { return a.at(n - 1); }
  const Rational& d(std::size_t n) const { return d_star.at(n - 1); }
};

// d*_n = 0: the transformed form is not regular at level n. partial() holds
// every level below n.
class DegenerateDenominator : public Error {
 public:
  DegenerateDenominator(std::size_t level, SingleTransform partial)
      : Error("DegenerateDenominator(" + std::to_string(level) + ")"),
        level_(level),
        partial_(std::move(partial)) {}
  std::size_t level() const noexcept { return level_; }
  const SingleTransform& partial() const noexcept { return partial_; }

 private:
  std::size_t level_;
  SingleTransform partial_;
};

// Builds levels 0..n_max. Every P*_n is re-verified orthogonal against the
// [.,.]_1 Gram matrix, and each A_n is cross-checked by a one-unknown solve.
SingleTransform transform_single(const MonicOPS& ops, const SecondKindValues& sk,
                                 const Rational& s0_star, std::size_t n_max);

// A_n from [P_n + a P_{n-1}, 1]_1 = 0, solved as a 1x1 linear system over the
// [.,.]_1 Gram matrix.
Rational solve_connection_single(const GramMatrix& gram1, const MonicOPS& ops, std::size_t n);

// The 2x2 determinant representation of P*_n divided by d*_n.
Polynomial single_determinant_form(const MonicOPS& ops, const SecondKindValues& sk,
                                   const Rational& s0_star, std::size_t n);

// [f, g]_1 = int f g dmu_1 + (s0* - m_0) f(0) g(0).
Rational mass_form_eval_1(const DividedMeasure& div, const Rational& s0_star, const Polynomial& f,
                          const Polynomial& g);

// Compares the mass representation with Gram_1(i, j) for all i, j <= n.
CheckReport verify_mass_vs_gram_1(const DividedMeasure& div, const Rational& s0_star, std::size_t n);

// integral of a polynomial against a divided measure: sum_k p_k m_k.
Rational integrate(const DividedMeasure& div, const Polynomial& p);

}  // namespace geronimus
