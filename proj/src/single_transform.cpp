#include "geronimus/single_transform.hpp"

#include <utility>

#include "geronimus/linear_solve.hpp"

namespace geronimus {

namespace {

const Polynomial kOne = Polynomial::constant(Rational(1));

void check_inputs(const MonicOPS& ops, const SecondKindValues& sk, std::size_t n_max) {
  if (ops.max_degree() < n_max) {
    throw DomainError("transform: orthogonal polynomials only reach degree " +
                      std::to_string(ops.max_degree()));
  }
  if (sk.q.size() <= n_max) throw DomainError("transform: second-kind values too short");
}

}  // namespace

Rational solve_connection_single(const GramMatrix& gram1, const MonicOPS& ops, std::size_t n) {
  RationalMatrix a(1, 1);
  a(0, 0) = gram1.apply(ops.polys.at(n - 1), kOne);
  const auto x = solve_linear(a, {-gram1.apply(ops.polys.at(n), kOne)});
  return x[0];
}

Polynomial single_determinant_form(const MonicOPS& ops, const SecondKindValues& sk,
                                   const Rational& s0_star, std::size_t n) {
  const Rational zero(0);
  const Rational rn = s0_star * ops.polys[n](zero) + sk.q0[n];
  const Rational rm = s0_star * ops.polys[n - 1](zero) + sk.q0[n - 1];
  if (rm.is_zero()) throw DegenerateDenominator(n, {});
  // | P_n      r_n     |
  // | P_{n-1}  r_{n-1} |  / r_{n-1}
  return (ops.polys[n] * rm - ops.polys[n - 1] * rn) * (Rational(1) / rm);
}

SingleTransform transform_single(const MonicOPS& ops, const SecondKindValues& sk,
                                 const Rational& s0_star, std::size_t n_max) {
  check_inputs(ops, sk, n_max);
  const Rational zero(0);
  const GramMatrix gram1 = build_gram(geronimus1_moments(sk.base, s0_star), n_max);

  const std::vector<Rational> minors = regularity_check(gram1).minors;

  std::vector<Rational> r(n_max + 1);
  for (std::size_t k = 0; k <= n_max; ++k) r[k] = s0_star * ops.polys[k](zero) + sk.q0[k];

  SingleTransform st;
  st.s0_star = s0_star;
  st.p_star.push_back(kOne);
  st.h_star_sq.push_back(s0_star);

  for (std::size_t n = 1; n <= n_max; ++n) {
    const Rational& d = r[n - 1];
    if (d.is_zero() != minors[n - 1].is_zero()) throw CertificateDivergence(n);
    if (d.is_zero()) throw DegenerateDenominator(n, st);
    // Delta_n = (-1)^(n-1) (h_0^2 ... h_{n-2}^2) d*_n.
    Rational predicted = n % 2 == 1 ? d : -d;
    for (std::size_t i = 0; i + 2 <= n; ++i) predicted *= ops.norms_sq[i];
    if (predicted != minors[n - 1]) {
      throw InternalError("transform_single: minor/certificate relation fails at n = " + std::to_string(n));
    }
    const Rational a = -r[n] / d;
    if (a != solve_connection_single(gram1, ops, n)) {
      throw InternalError("transform_single: quotient formula and direct solve disagree at n = " +
                          std::to_string(n));
    }
    Polynomial ps = ops.polys[n] + a * ops.polys[n - 1];
    if (ps != single_determinant_form(ops, sk, s0_star, n)) {
      throw InternalError("transform_single: determinant form mismatch at n = " + std::to_string(n));
    }
    for (std::size_t k = 0; k < n; ++k) {
      if (!gram1.apply(ps, Polynomial::monomial(k)).is_zero()) {
        throw InternalError("transform_single: P*_" + std::to_string(n) + " not orthogonal to t^" +
                            std::to_string(k));
      }
    }
    const Rational h_sq = a * ops.norms_sq[n - 1];
    if (h_sq != gram1.apply(ps, ps)) {
      throw InternalError("transform_single: norm chain mismatch at n = " + std::to_string(n));
    }
    st.a.push_back(a);
    st.d_star.push_back(d);
    st.h_star_sq.push_back(h_sq);
    st.p_star.push_back(std::move(ps));
  }
  return st;
}

Rational integrate(const DividedMeasure& div, const Polynomial& p) {
  Rational acc(0);
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    if (!p.coeffs()[k].is_zero()) acc += p.coeffs()[k] * div.moment(k);
  }
  return acc;
}

Rational mass_form_eval_1(const DividedMeasure& div, const Rational& s0_star, const Polynomial& f,
                          const Polynomial& g) {
  if (div.order() != 1) throw DomainError("mass_form_eval_1: divided measure must have order 1");
  const Rational zero(0);
  return integrate(div, f * g) + (s0_star - div.moment(0)) * f(zero) * g(zero);
}

CheckReport verify_mass_vs_gram_1(const DividedMeasure& div, const Rational& s0_star, std::size_t n) {
  CheckReport report("mass form vs Gram_1");
  const GeronimusMoments1 form = geronimus1_moments(div.base(), s0_star);
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = 0; j <= n; ++j) {
      const Rational lhs =
          mass_form_eval_1(div, s0_star, Polynomial::monomial(i), Polynomial::monomial(j));
      report.expect_equal(lhs, form.gram_entry(i, j), "mass form [t^i,t^j]_1", i, j);
    }
  }
  return report;
}

}  // namespace geronimus
