#include "geronimus/double_transform.hpp"

#include <utility>

#include "geronimus/linear_solve.hpp"
#include "geronimus/single_transform.hpp"

namespace geronimus {

std::vector<DoubleSystemEntries> double_system_entries(const MonicOPS& ops, const SecondKindValues& sk,
                                                       const Corner& corner) {
  const auto r = r_values(sk, ops, corner.s1);
  const Rational zero(0);
  const Rational s0 = sk.base.moment(0);
  std::vector<DoubleSystemEntries> out;
  out.reserve(r.size());
  for (std::size_t k = 0; k < r.size(); ++k) {
    const Polynomial& p = ops.polys[k];
    out.push_back({r[k].derivative + corner.s0 * p(zero),
                   r[k].value + (corner.s2 - s0) * poly_derivative(p)(zero)});
  }
  return out;
}

Polynomial double_determinant_form(const MonicOPS& ops, const std::vector<DoubleSystemEntries>& entries,
                                   std::size_t n) {
  if (n < 2) throw DomainError("double_determinant_form: n must be at least 2");
  RationalMatrix rest(3, 2);
  RationalMatrix lower(2, 2);
  for (std::size_t r = 0; r < 3; ++r) {
    rest(r, 0) = entries.at(n - r).with_one;
    rest(r, 1) = entries.at(n - r).with_t;
  }
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c) lower(r, c) = rest(r + 1, c);
  const Rational d = determinant(lower);
  if (d.is_zero()) throw DegenerateDeterminant(n);
  return bordered_determinant({ops.polys[n], ops.polys[n - 1], ops.polys[n - 2]}, rest) *
         (Rational(1) / d);
}

Connection2 read_off_connection(const Polynomial& p, const MonicOPS& ops) {
  const long n = p.degree();
  if (n < 2) throw DomainError("read_off_connection: degree must be at least 2");
  const auto coeffs = expand_in_basis(p, ops.polys);
  const auto un = static_cast<std::size_t>(n);
  if (coeffs[un] != Rational(1)) throw InternalError("read_off_connection: polynomial is not monic");
  for (std::size_t k = 0; k + 2 < un; ++k) {
    if (!coeffs[k].is_zero()) {
      throw InternalError("read_off_connection: component along P_" + std::to_string(k));
    }
  }
  return {coeffs[un - 1], coeffs[un - 2]};
}

DoubleTransform transform_double(const MonicOPS& ops, const SecondKindValues& sk, const Corner& corner,
                                 std::size_t n_max) {
  if (n_max < 1) throw DomainError("transform_double: n_max must be positive");
  if (ops.max_degree() < n_max || sk.q.size() <= n_max) {
    throw DomainError("transform_double: base data too short for n_max = " + std::to_string(n_max));
  }
  const GramMatrix gram2 = build_gram(GeronimusMoments2(sk.base, corner), n_max);
  const RegularityReport reg = regularity_check(gram2);
  const auto entries = double_system_entries(ops, sk, corner);

  const Polynomial one = Polynomial::constant(Rational(1));
  const Polynomial t = Polynomial::monomial(1);
  for (std::size_t k = 0; k <= n_max; ++k) {
    if (entries[k].with_one != gram2.apply(ops.polys[k], one) ||
        entries[k].with_t != gram2.apply(ops.polys[k], t)) {
      throw InternalError("transform_double: R-value entries disagree with Gram_2 at k = " +
                          std::to_string(k));
    }
  }

  DoubleTransform dt;
  dt.corner = corner;
  dt.p_ss.push_back(one);
  dt.h_ss_sq.push_back(corner.s0);

  const Rational s1_over_s0 = sk.base.moment(1) / sk.base.moment(0);
  for (std::size_t n = 1; n <= n_max; ++n) {
    Rational d;
    Polynomial pss;
    if (n == 1) {
      d = entries[0].with_one;
    } else {
      d = entries[n - 1].with_one * entries[n - 2].with_t - entries[n - 2].with_one * entries[n - 1].with_t;
    }
    const bool minor_zero = reg.minors[n - 1].is_zero();
    if (d.is_zero() != minor_zero) throw CertificateDivergence(n);
    if (d.is_zero()) throw DegenerateDeterminant(n);
    // Delta_n = -(h_0^2 ... h_{n-3}^2) d**_n for n >= 2, Delta_1 = d**_1.
    Rational predicted = n == 1 ? d : -d;
    for (std::size_t i = 0; i + 3 <= n; ++i) predicted *= ops.norms_sq[i];
    if (predicted != reg.minors[n - 1]) {
      throw InternalError("transform_double: minor/certificate relation fails at n = " + std::to_string(n));
    }

    if (n == 1) {
      RationalMatrix a(1, 1);
      a(0, 0) = entries[0].with_one;
      const Rational b = solve_linear(a, {-entries[1].with_one})[0];
      dt.b2.push_back(b);
      pss = ops.polys[1] + b * ops.polys[0];
    } else {
      RationalMatrix a(2, 2);
      a(0, 0) = entries[n - 1].with_one;
      a(0, 1) = entries[n - 2].with_one;
      a(1, 0) = entries[n - 1].with_t;
      a(1, 1) = entries[n - 2].with_t;
      const auto x = solve_linear(a, {-entries[n].with_one, -entries[n].with_t});
      dt.b2.push_back(x[0]);
      dt.c2.push_back(x[1]);
      pss = ops.polys[n] + x[0] * ops.polys[n - 1] + x[1] * ops.polys[n - 2];

      const Polynomial via_det = double_determinant_form(ops, entries, n);
      if (via_det != pss) {
        throw InternalError("transform_double: determinant form mismatch at n = " + std::to_string(n));
      }
      const Connection2 read = read_off_connection(via_det, ops);
      if (read.b != x[0] || read.c != x[1]) {
        throw InternalError("transform_double: route disagreement at n = " + std::to_string(n));
      }
    }
    dt.d_ss.push_back(d);

    for (std::size_t k = 0; k < n; ++k) {
      if (!gram2.apply(pss, Polynomial::monomial(k)).is_zero()) {
        throw InternalError("transform_double: P**_" + std::to_string(n) + " not orthogonal to t^" +
                            std::to_string(k));
      }
    }
    Rational h_sq;
    if (n == 1) h_sq = corner.s2 + corner.s1 * (dt.B(1) - s1_over_s0);
    else h_sq = dt.C(n) * ops.norms_sq[n - 2];
    if (h_sq != gram2.apply(pss, pss)) {
      throw InternalError("transform_double: norm chain mismatch at n = " + std::to_string(n));
    }
    dt.h_ss_sq.push_back(h_sq);
    dt.p_ss.push_back(std::move(pss));
  }
  return dt;
}

std::vector<Polynomial> compose_single_steps(const MomentFunctional& base, const Corner& corner,
                                             std::size_t n_max) {
  const MonicOPS ops0 = monic_ops(build_gram(base, n_max));
  const SingleTransform first = transform_single(ops0, second_kind(base, ops0), corner.s1, n_max);

  const MomentFunctional spliced = geronimus1_moments(base, corner.s1).as_functional();
  const MonicOPS ops1 = monic_ops(build_gram(spliced, n_max));
  if (ops1.polys != first.p_star) {
    throw InternalError("compose_single_steps: first step disagrees with the spliced orthogonal family");
  }
  return transform_single(ops1, second_kind(spliced, ops1), corner.s0, n_max).p_star;
}

SobolevMassMatrix sobolev_mass_matrix(const DividedMeasure& div, const Corner& corner) {
  if (div.order() != 2) throw DomainError("sobolev_mass_matrix: divided measure must have order 2");
  return {corner.s0 - div.moment(0), corner.s1 - div.moment(1), corner.s2 - div.moment(2)};
}

Rational sobolev_eval(const DividedMeasure& div, const SobolevMassMatrix& m, const Polynomial& f,
                      const Polynomial& g) {
  if (div.order() != 2) throw DomainError("sobolev_eval: divided measure must have order 2");
  const Rational zero(0);
  const Rational f0 = f(zero), f1 = poly_derivative(f)(zero);
  const Rational g0 = g(zero), g1 = poly_derivative(g)(zero);
  const Rational mass = f0 * (m.m00 * g0 + m.m01 * g1) + f1 * (m.m01 * g0 + m.m11 * g1);
  return integrate(div, f * g) + mass;
}

CheckReport verify_sobolev_vs_gram_2(const DividedMeasure& div, const Corner& corner, std::size_t n) {
  CheckReport report("Sobolev form vs Gram_2");
  const SobolevMassMatrix m = sobolev_mass_matrix(div, corner);
  const GeronimusMoments2 form(div.base(), corner);
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = 0; j <= n; ++j) {
      const Rational lhs = sobolev_eval(div, m, Polynomial::monomial(i), Polynomial::monomial(j));
      report.expect_equal(lhs, form.gram_entry(i, j), "Sobolev form [t^i,t^j]_2", i, j);
    }
  }
  return report;
}

}  // namespace geronimus
