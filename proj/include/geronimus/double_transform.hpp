#pragma once

#include <cstddef>
#include <vector>

#include "geronimus/check_report.hpp"
#include "geronimus/errors.hpp"
#include "geronimus/moments.hpp"
#include "geronimus/orthopoly.hpp"
#include "geronimus/polynomial.hpp"

namespace geronimus {

// Result of the double Geronimus transformation
//   P**_n = P_n + B_n P_{n-1} + C_n P_{n-2}.
// B_1 comes from the single condition [P**_1, 1]_2 = 0, so d**_1 = s0**.
struct DoubleTransform {
  Corner corner;
  std::vector<Rational> b2;        // B_1 .. B_N
  std::vector<Rational> c2;        // C_2 .. C_N
  std::vector<Rational> d_ss;      // d**_1 .. d**_N
  std::vector<Polynomial> p_ss;    // P**_0 .. P**_N
  std::vector<Rational> h_ss_sq;   // (h**_0)^2 .. (h**_N)^2

  std::size_t n_max() const noexcept { return p_ss.empty() ? 0 : p_ss.size() - 1; }
  const Rational& B(std::size_t n) const { return b2.at(n - 1); }
  const Rational& C(std::size_t n) const {
    if (n < 2) throw DomainError("C_n is defined for n >= 2 only");
    return c2.at(n - 2);
  }
  const Rational& d(std::size_t n) const { return d_ss.at(n - 1); }
};

// Entries of the (B_n, C_n) system: [P_k, 1]_2 and [P_k, t]_2 written through
// R_k(0; s1**) and R'_k(0; s1**).
struct DoubleSystemEntries {
  Rational with_one;  // R'_k(0; s1**) + s0** P_k(0)
  Rational with_t;    // R_k(0; s1**) + (s2** - s_0) P'_k(0), s_0 the base moment
  friend bool operator==(const DoubleSystemEntries&, const DoubleSystemEntries&) = default;
};

std::vector<DoubleSystemEntries> double_system_entries(const MonicOPS& ops, const SecondKindValues& sk,
                                                       const Corner& corner);

// Solves the 2x2 system per level (primary route), rebuilds every P**_n from
// the 3x3 determinant representation (verification route), and re-verifies
// orthogonality and the norm chain on the Gram_2 matrix.
// Throws DegenerateDeterminant(n) at the first level with d**_n = 0.
DoubleTransform transform_double(const MonicOPS& ops, const SecondKindValues& sk, const Corner& corner,
                                 std::size_t n_max);

// P**_n from the 3x3 determinant over (P_k, [P_k,1]_2, [P_k,t]_2), k = n..n-2,
// divided by d**_n. Requires n >= 2.
Polynomial double_determinant_form(const MonicOPS& ops, const std::vector<DoubleSystemEntries>& entries,
                                   std::size_t n);

struct Connection2 {
  Rational b;
  Rational c;
};

// Reads (B_n, C_n) off a monic degree-n polynomial by expanding it in the P
// basis; throws InternalError if it is not of the form P_n + B P_{n-1} + C P_{n-2}.
Connection2 read_off_connection(const Polynomial& p, const MonicOPS& ops);

// Two single steps: s0* = s1** over the base functional, then s0** over the
// spliced sequence (s1**, s_0, s_1, ...). When s2** = s_0 the result is the
// double transform. Returns the resulting monic family of degrees 0..n_max.
std::vector<Polynomial> compose_single_steps(const MomentFunctional& base, const Corner& corner,
                                             std::size_t n_max);

// M = [[s0**, s1**], [s1**, s2**]] - [[m_0, m_1], [m_1, m_2]] over the mu_2 moments.
struct SobolevMassMatrix {
  Rational m00;
  Rational m01;
  Rational m11;
  friend bool operator==(const SobolevMassMatrix&, const SobolevMassMatrix&) = default;
};

SobolevMassMatrix sobolev_mass_matrix(const DividedMeasure& div, const Corner& corner);

// [f, g]_2 = int f g dmu_2 + (f(0), f'(0)) M (g(0), g'(0))^T
Rational sobolev_eval(const DividedMeasure& div, const SobolevMassMatrix& m, const Polynomial& f,
                      const Polynomial& g);

// Compares the Sobolev representation with Gram_2(i, j) for all i, j <= n.
CheckReport verify_sobolev_vs_gram_2(const DividedMeasure& div, const Corner& corner, std::size_t n);

}  // namespace geronimus
