#include "geronimus/matrix_factor.hpp"

#include <functional>
#include <string>

#include "geronimus/errors.hpp"

namespace geronimus {

RationalBand MonicJacobi::matrix() const {
  const std::size_t n = size();
  RationalBand m(n, 1, 1, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    m.set(i, i, b[i]);
    if (i + 1 < n) {
      m.set(i, i + 1, Rational(1));
      m.set(i + 1, i, c_sq[i]);
    }
  }
  return m;
}

MonicJacobi build_monic_jacobi(const MonicOPS& ops, std::size_t n) {
  if (n == 0) throw DomainError("build_monic_jacobi: N must be positive");
  if (!ops.has_recurrence() || ops.b.size() < n || ops.c_sq.size() + 1 < n) {
    throw DomainError("build_monic_jacobi: recurrence data does not reach N = " + std::to_string(n));
  }
  MonicJacobi j;
  j.b.assign(ops.b.begin(), ops.b.begin() + static_cast<long>(n));
  j.c_sq.assign(ops.c_sq.begin(), ops.c_sq.begin() + static_cast<long>(n - 1));
  return j;
}

RationalBand multiplication_matrix(const std::vector<Polynomial>& basis, unsigned power, std::size_t n) {
  if (basis.size() < n + power) {
    throw DomainError("multiplication_matrix: basis too short for N = " + std::to_string(n));
  }
  RationalBand m(n, power, power, Rational(0));
  for (std::size_t row = 0; row < n; ++row) {
    const auto coeffs = expand_in_basis(basis[row].shifted_up(power), basis);
    for (std::size_t col = 0; col < coeffs.size(); ++col) {
      if (coeffs[col].is_zero()) continue;
      if (col + power < row) {
        throw ExpansionResidual("multiplication_matrix: t^" + std::to_string(power) + " * basis[" +
                                std::to_string(row) + "] has a component along basis[" +
                                std::to_string(col) + "]");
      }
      if (col < n) m.set(row, col, coeffs[col]);
    }
  }
  return m;
}

std::size_t guard_band(DarbouxKind kind) noexcept { return kind == DarbouxKind::single ? 1 : 2; }

DarbouxFactors darboux_factors_single(const MonicOPS& base_ops, const SingleTransform& st, std::size_t n) {
  if (n == 0) throw DomainError("darboux_factors_single: N must be positive");
  if (st.n_max() < n || base_ops.max_degree() + 1 < n) {
    throw DomainError("darboux_factors_single: transform must reach level N = " + std::to_string(n));
  }
  DarbouxFactors f{DarbouxKind::single, RationalBand(n, 1, 0, Rational(0)), RationalBand(n, 0, 1, Rational(0))};
  for (std::size_t i = 0; i < n; ++i) {
    f.l_mon.set(i, i, Rational(1));
    if (i >= 1) f.l_mon.set(i, i - 1, st.A(i));

    const Polynomial tp = base_ops.polys[i].shifted_up(1);
    const auto coeffs = expand_in_basis(tp, st.p_star);
    const Polynomial rest = tp - st.p_star[i + 1] - coeffs[i] * st.p_star[i];
    if (coeffs[i + 1] != Rational(1) || !rest.is_zero()) {
      throw ExpansionResidual("t P_" + std::to_string(i) + " - P*_" + std::to_string(i + 1) + " - F_" +
                              std::to_string(i + 1) + " P*_" + std::to_string(i) + " != 0");
    }
    f.u_mon.set(i, i, coeffs[i]);
    if (i + 1 < n) f.u_mon.set(i, i + 1, Rational(1));
  }
  return f;
}

DarbouxFactors darboux_factors_double(const MonicOPS& base_ops, const DoubleTransform& dt, std::size_t n) {
  if (n == 0) throw DomainError("darboux_factors_double: N must be positive");
  if (dt.n_max() < n + 1 || base_ops.max_degree() + 1 < n) {
    throw DomainError("darboux_factors_double: transform must reach level N + 1 = " + std::to_string(n + 1));
  }
  DarbouxFactors f{DarbouxKind::twofold, RationalBand(n, 2, 0, Rational(0)), RationalBand(n, 0, 2, Rational(0))};
  for (std::size_t i = 0; i < n; ++i) {
    f.l_mon.set(i, i, Rational(1));
    if (i >= 1) f.l_mon.set(i, i - 1, dt.B(i));
    if (i >= 2) f.l_mon.set(i, i - 2, dt.C(i));

    const Polynomial t2p = base_ops.polys[i].shifted_up(2);
    const auto coeffs = expand_in_basis(t2p, dt.p_ss);
    const Polynomial rest =
        t2p - dt.p_ss[i + 2] - coeffs[i + 1] * dt.p_ss[i + 1] - coeffs[i] * dt.p_ss[i];
    if (coeffs[i + 2] != Rational(1) || !rest.is_zero()) {
      throw ExpansionResidual("t^2 P_" + std::to_string(i) + " - P**_" + std::to_string(i + 2) + " - D_" +
                              std::to_string(i + 1) + " P**_" + std::to_string(i + 1) + " - E_" +
                              std::to_string(i + 1) + " P**_" + std::to_string(i) + " != 0");
    }
    if (coeffs[i].is_zero()) throw ZeroE(i + 1);
    f.u_mon.set(i, i, coeffs[i]);
    if (i + 1 < n) f.u_mon.set(i, i + 1, coeffs[i + 1]);
    if (i + 2 < n) f.u_mon.set(i, i + 2, Rational(1));
  }
  return f;
}

namespace {

void compare_block(CheckReport& report, const RationalBand& lhs, const RationalBand& rhs, std::size_t k,
                   const std::string& identity) {
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) report.expect_equal(lhs(i, j), rhs(i, j), identity, i, j);
}

}  // namespace

CheckReport verify_darboux(const MonicJacobi& j, const DarbouxFactors& f, const RationalBand& target) {
  const std::size_t n = f.size();
  const std::size_t g = guard_band(f.kind);
  if (j.size() != n || target.size() != n) throw DimensionMismatch("verify_darboux: sizes differ");
  if (n <= g) {
    throw DomainError("verify_darboux: N = " + std::to_string(n) + " does not exceed the guard band " +
                      std::to_string(g));
  }
  const std::size_t k = n - g;
  const RationalBand jm = j.matrix();
  const RationalBand ul = band_mul(f.u_mon, f.l_mon);
  const RationalBand lu = band_mul(f.l_mon, f.u_mon);

  CheckReport report(f.kind == DarbouxKind::single ? "Darboux (tridiagonal)" : "Darboux (pentadiagonal)");
  if (f.kind == DarbouxKind::single) {
    compare_block(report, ul, jm, k, "J_mon = U_mon L_mon");
    compare_block(report, lu, target, k, "J*_mon = L_mon U_mon");
  } else {
    compare_block(report, ul, band_mul(jm, jm), k, "J_mon^2 = U_mon L_mon");
    compare_block(report, lu, target, k, "J**_mon = L_mon U_mon");
  }
  return report;
}

namespace {

struct CholeskyInputs {
  std::size_t g;
  std::string tag;                                       // "*" or "**"
  std::function<Rational(std::size_t, std::size_t)> coef;  // P^tag_i = sum_k coef(i, k) P_k
  std::vector<Rational> h_sq;                            // h_k^2
  std::vector<Rational> ht_sq;                           // transformed norms
  const std::vector<Polynomial>* basis;                  // transformed family
  GramMatrix gram_t;                                     // transformed form
  GramMatrix gram_0;                                     // base form
  RationalBand jt_mon;                                   // monic transformed matrix
};

CholeskyCheck run_cholesky(const CholeskyInputs& in, std::size_t n, long p) {
  if (p < kMinPrecision) throw DomainError("symmetric_cholesky_check: precision below " +
                                           std::to_string(kMinPrecision));
  for (std::size_t k = 0; k < n; ++k) {
    if (in.h_sq[k].sign() <= 0 || in.ht_sq[k].sign() <= 0) throw NotPositiveDefinite(
        "symmetric_cholesky_check: nonpositive norm at level " + std::to_string(k));
  }
  const unsigned power = static_cast<unsigned>(in.g);
  const std::string fam = "P" + in.tag;
  const std::string tname = power == 1 ? "t" : "t^2";
  const BigFloat zero(p);
  std::vector<BigFloat> h, ht;
  for (std::size_t k = 0; k < n; ++k) {
    h.push_back(sqrt(BigFloat(in.h_sq[k], p)));
    ht.push_back(sqrt(BigFloat(in.ht_sq[k], p)));
  }

  CholeskyCheck out{{FloatBand(n, in.g, 0, zero), FloatBand(n, in.g, in.g, zero), p},
                    CheckReport("Cholesky structure (" + fam + ")")};
  CheckReport& rep = out.report;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = (i >= in.g ? i - in.g : 0); k <= i; ++k)
      out.factor.l.set(i, k, BigFloat(in.coef(i, k), p) * h[k] / ht[i]);

  const Polynomial tpow = Polynomial::monomial(power);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = (i >= in.g ? i - in.g : 0); j < std::min(n, i + in.g + 1); ++j) {
      const Polynomial& pi = (*in.basis)[i];
      const Polynomial& pj = (*in.basis)[j];
      const Rational gij = in.gram_t.apply(tpow * pi, pj);
      out.factor.j_sym.set(i, j, BigFloat(gij, p) / (ht[i] * ht[j]));

      rep.expect_equal(gij, in.gram_0.apply(pi, pj), "[" + tname + " " + fam + "_i, " + fam + "_j] = (" + fam +
                                                         "_i, " + fam + "_j)_0", i, j);
      Rational num(0);
      for (std::size_t k = 0; k <= std::min(i, j); ++k) num += in.coef(i, k) * in.coef(j, k) * in.h_sq[k];
      rep.expect_equal(num, gij, "(L L^T) numerator", i, j);
      // (L L^T)(i,j)^2 = J_mon(i,j) J_mon(j,i), both sides rational.
      rep.expect_equal(num * num / (in.ht_sq[i] * in.ht_sq[j]), in.jt_mon(i, j) * in.jt_mon(j, i),
                       "((L L^T)_ij)^2 = J" + in.tag + "_mon(i,j) J" + in.tag + "_mon(j,i)", i, j);
      rep.expect(num.sign() == in.jt_mon(i, j).sign(), "sign of (L L^T)_ij", i, j);
    }
  }

  const std::size_t k = n > in.g ? n - in.g : 0;
  const BigFloat tol = BigFloat::exp2(-(p / 2), p);
  const FloatBand llt = band_mul(out.factor.l, out.factor.l.transpose());
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      rep.expect_within(abs(out.factor.j_sym(i, j) - llt(i, j)), tol, "J" + in.tag + " = L L^T", i, j);
      // Psi = diag(1, c_0, c_0 c_1, ...) with Psi_n = h_n / h_0 in the transformed family.
      const BigFloat sim = BigFloat(in.jt_mon(i, j), p) * (ht[j] / ht[0]) / (ht[i] / ht[0]);
      const BigFloat sim_t = BigFloat(in.jt_mon(j, i), p) * (ht[i] / ht[0]) / (ht[j] / ht[0]);
      rep.expect_within(abs(sim - sim_t), tol, "Psi^-1 J" + in.tag + "_mon Psi symmetric", i, j);
      rep.expect_within(abs(sim - out.factor.j_sym(i, j)), tol, "Psi^-1 J" + in.tag + "_mon Psi = J" + in.tag, i, j);
    }
  }
  return out;
}

}  // namespace

CholeskyCheck symmetric_cholesky_check(const SingleTransform& st, const MonicOPS& base_ops,
                                       const MomentFunctional& base, std::size_t n, long precision) {
  if (n < 2 || st.n_max() < n || base_ops.max_degree() + 1 < n) {
    throw DomainError("symmetric_cholesky_check: transform must reach level N = " + std::to_string(n));
  }
  CholeskyInputs in{1,
                    "*",
                    [&st](std::size_t i, std::size_t k) {
                      if (k == i) return Rational(1);
                      if (k + 1 == i) return st.A(i);
                      return Rational(0);
                    },
                    {base_ops.norms_sq.begin(), base_ops.norms_sq.begin() + static_cast<long>(n)},
                    {st.h_star_sq.begin(), st.h_star_sq.begin() + static_cast<long>(n)},
                    &st.p_star,
                    build_gram(geronimus1_moments(base, st.s0_star), n),
                    build_gram(base, n),
                    multiplication_matrix(st.p_star, 1, n)};
  CholeskyCheck out = run_cholesky(in, n, precision);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    out.report.expect_equal(st.h_star_sq[k + 1], st.A(k + 1) * base_ops.norms_sq[k], "(h*_{n+1})^2 = A_{n+1} h_n^2",
                            k + 1, k);
  }
  out.report.expect_equal(st.h_star_sq[0], st.s0_star, "(h*_0)^2 = s0*");
  return out;
}

CholeskyCheck symmetric_cholesky_check(const DoubleTransform& dt, const MonicOPS& base_ops,
                                       const MomentFunctional& base, std::size_t n, long precision) {
  if (n < 3 || dt.n_max() + 1 < n + 2 || base_ops.max_degree() + 1 < n) {
    throw DomainError("symmetric_cholesky_check: transform must reach level N + 1 = " + std::to_string(n + 1));
  }
  CholeskyInputs in{2,
                    "**",
                    [&dt](std::size_t i, std::size_t k) {
                      if (k == i) return Rational(1);
                      if (k + 1 == i) return dt.B(i);
                      if (k + 2 == i) return dt.C(i);
                      return Rational(0);
                    },
                    {base_ops.norms_sq.begin(), base_ops.norms_sq.begin() + static_cast<long>(n)},
                    {dt.h_ss_sq.begin(), dt.h_ss_sq.begin() + static_cast<long>(n)},
                    &dt.p_ss,
                    build_gram(GeronimusMoments2(base, dt.corner), n + 1),
                    build_gram(base, n),
                    multiplication_matrix(dt.p_ss, 2, n)};
  CholeskyCheck out = run_cholesky(in, n, precision);
  for (std::size_t k = 0; k + 2 < n; ++k) {
    out.report.expect_equal(dt.h_ss_sq[k + 2], dt.C(k + 2) * base_ops.norms_sq[k],
                            "(h**_{n+2})^2 = C_{n+2} h_n^2", k + 2, k);
  }
  const Rational s1_over_s0 = base.moment(1) / base.moment(0);
  out.report.expect_equal(dt.h_ss_sq[1], dt.corner.s2 + dt.corner.s1 * (dt.B(1) - s1_over_s0),
                          "(h**_1)^2 = s2** + s1** (B_1 - s_1/s_0)", 1, 1);
  out.report.expect_equal(dt.h_ss_sq[0], dt.corner.s0, "(h**_0)^2 = s0**");
  return out;
}

}  // namespace geronimus
