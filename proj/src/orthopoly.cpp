#include "geronimus/orthopoly.hpp"

#include <utility>

#include "geronimus/errors.hpp"

namespace geronimus {

const char* to_string(FormSource source) {
  switch (source) {
    case FormSource::base: return "base";
    case FormSource::geronimus1: return "geronimus1";
    case FormSource::geronimus2: return "geronimus2";
  }
  return "unknown";
}

GramMatrix::GramMatrix(RationalMatrix entries, FormSource source)
    : entries_(std::move(entries)), source_(source) {
  if (entries_.rows() != entries_.cols()) throw DimensionMismatch("GramMatrix: not square");
}

bool GramMatrix::is_hankel() const {
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j + 1 < size() && i >= 1; ++j)
      if (entries_(i, j) != entries_(i - 1, j + 1)) return false;
  return true;
}

Rational GramMatrix::apply(const Polynomial& f, const Polynomial& g) const {
  const std::size_t limit = size();
  if (f.degree() >= static_cast<long>(limit)) throw IndexOutOfRange(static_cast<std::size_t>(f.degree()), limit);
  if (g.degree() >= static_cast<long>(limit)) throw IndexOutOfRange(static_cast<std::size_t>(g.degree()), limit);
  Rational acc(0);
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    if (f.coeffs()[i].is_zero()) continue;
    Rational row(0);
    for (std::size_t j = 0; j < g.coeffs().size(); ++j) row += entries_(i, j) * g.coeffs()[j];
    acc += f.coeffs()[i] * row;
  }
  return acc;
}

namespace {

template <class Entry>
GramMatrix gram_from(std::size_t n, FormSource source, Entry entry) {
  RationalMatrix m(n + 1, n + 1);
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = i; j <= n; ++j) m(i, j) = m(j, i) = entry(i, j);
  return GramMatrix(std::move(m), source);
}

}  // namespace

GramMatrix build_gram(const MomentFunctional& form, std::size_t n) {
  return gram_from(n, FormSource::base, [&](std::size_t i, std::size_t j) { return form.moment(i + j); });
}

GramMatrix build_gram(const GeronimusMoments1& form, std::size_t n) {
  return gram_from(n, FormSource::geronimus1,
                   [&](std::size_t i, std::size_t j) { return form.gram_entry(i, j); });
}

GramMatrix build_gram(const GeronimusMoments2& form, std::size_t n) {
  return gram_from(n, FormSource::geronimus2,
                   [&](std::size_t i, std::size_t j) { return form.gram_entry(i, j); });
}

RegularityReport regularity_check(const GramMatrix& g) {
  RegularityReport r;
  r.minors = leading_minors(g.matrix());
  for (std::size_t k = 0; k < r.minors.size(); ++k) {
    if (!r.first_singular && r.minors[k].is_zero()) r.first_singular = k + 1;
    if (!r.first_nonpositive && r.minors[k].sign() <= 0) r.first_nonpositive = k + 1;
  }
  r.regular = !r.first_singular.has_value();
  r.positive_definite = !r.first_nonpositive.has_value();
  return r;
}

MonicOPS monic_ops(const GramMatrix& g) {
  const RegularityReport reg = regularity_check(g);
  if (!reg.regular) throw NotRegular(*reg.first_singular);

  const std::size_t size = g.size();
  MonicOPS ops{{}, {}, {}, {}, g};
  ops.polys.reserve(size);
  ops.norms_sq.reserve(size);
  for (std::size_t n = 0; n < size; ++n) {
    // form(P_n, t^k) = 0 for k < n, with P_n = t^n + sum_{j<n} x_j t^j.
    std::vector<Rational> coeffs(n + 1);
    coeffs[n] = Rational(1);
    if (n > 0) {
      RationalMatrix a(n, n);
      std::vector<Rational> rhs(n);
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t j = 0; j < n; ++j) a(k, j) = g(j, k);
        rhs[k] = -g(n, k);
      }
      const auto x = solve_linear(a, rhs);
      for (std::size_t j = 0; j < n; ++j) coeffs[j] = x[j];
    }
    Polynomial p(std::move(coeffs));
    ops.norms_sq.push_back(g.apply(p, p));
    ops.polys.push_back(std::move(p));
  }

  if (!g.is_hankel()) return ops;

  for (std::size_t n = 0; n + 1 < size; ++n) {
    const Polynomial tp = ops.polys[n].shifted_up(1);
    ops.b.push_back(g.apply(tp, ops.polys[n]) / ops.norms_sq[n]);
    ops.c_sq.push_back(ops.norms_sq[n + 1] / ops.norms_sq[n]);
  }
  for (std::size_t n = 0; n + 1 < size; ++n) {
    Polynomial residual = ops.polys[n].shifted_up(1) - ops.polys[n + 1] - ops.b[n] * ops.polys[n];
    if (n >= 1) residual -= ops.c_sq[n - 1] * ops.polys[n - 1];
    if (!residual.is_zero()) {
      throw InternalError("monic_ops: three-term recurrence residual at n = " + std::to_string(n));
    }
  }
  return ops;
}

Rational apply_functional(const MomentFunctional& base, const Polynomial& p) {
  Rational acc(0);
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    if (!p.coeffs()[k].is_zero()) acc += p.coeffs()[k] * base.moment(k);
  }
  return acc;
}

SecondKindValues second_kind(const MomentFunctional& base, const MonicOPS& ops) {
  SecondKindValues sk{{}, {}, {}, base};
  for (const Polynomial& p : ops.polys) {
    const auto& c = p.coeffs();
    // Divided-difference expansion: coefficient of x^j is sum_{k>j} p_k s_{k-1-j}.
    std::vector<Rational> q(c.size() > 0 ? c.size() - 1 : 0);
    for (std::size_t j = 0; j < q.size(); ++j)
      for (std::size_t k = j + 1; k < c.size(); ++k) q[j] += c[k] * base.moment(k - 1 - j);
    Polynomial qn(std::move(q));

    const Rational q0 = qn(Rational(0));
    const Rational qp0 = poly_derivative(qn)(Rational(0));

    // Second route: apply the functional to the divided differences at 0.
    const Polynomial p0 = Polynomial::constant(p(Rational(0)));
    const Polynomial dp0 = Polynomial::monomial(1, poly_derivative(p)(Rational(0)));
    const Rational q0_alt = apply_functional(base, (p - p0).shifted_down(1));
    const Rational qp0_alt = apply_functional(base, (p - p0 - dp0).shifted_down(2));
    if (q0 != q0_alt || qp0 != qp0_alt) {
      throw InternalError("second_kind: Q_n(0)/Q'_n(0) routes disagree at degree " +
                          std::to_string(p.degree()));
    }
    sk.q.push_back(std::move(qn));
    sk.q0.push_back(q0);
    sk.qp0.push_back(qp0);
  }
  return sk;
}

std::vector<RValue> r_values(const SecondKindValues& sk, const MonicOPS& ops, const Rational& s) {
  if (sk.q.size() > ops.polys.size()) throw DimensionMismatch("r_values: second-kind data exceeds ops");
  std::vector<RValue> out;
  out.reserve(sk.q.size());
  for (std::size_t n = 0; n < sk.q.size(); ++n) {
    const Polynomial& p = ops.polys[n];
    out.push_back({s * p(Rational(0)) + sk.q0[n], s * poly_derivative(p)(Rational(0)) + sk.qp0[n]});
  }
  return out;
}

std::vector<Rational> expand_in_basis(const Polynomial& p, const std::vector<Polynomial>& basis) {
  if (p.degree() >= static_cast<long>(basis.size())) {
    throw DomainError("expand_in_basis: degree exceeds the basis");
  }
  std::vector<Rational> out(p.is_zero() ? 0 : static_cast<std::size_t>(p.degree()) + 1);
  Polynomial rest = p;
  for (std::size_t kk = out.size(); kk-- > 0;) {
    const Rational c = rest.coeff(kk) / basis[kk].lead();
    out[kk] = c;
    if (!c.is_zero()) rest -= c * basis[kk];
  }
  if (!rest.is_zero()) throw InternalError("expand_in_basis: nonzero remainder");
  return out;
}

Polynomial bordered_determinant(const std::vector<Polynomial>& column, const RationalMatrix& rest) {
  const std::size_t n = column.size();
  if (rest.rows() != n || rest.cols() + 1 != n) {
    throw DimensionMismatch("bordered_determinant: shape mismatch");
  }
  Polynomial out;
  for (std::size_t i = 0; i < n; ++i) {
    RationalMatrix minor(n - 1, n - 1);
    for (std::size_t r = 0, rr = 0; r < n; ++r) {
      if (r == i) continue;
      for (std::size_t c = 0; c + 1 < n; ++c) minor(rr, c) = rest(r, c);
      ++rr;
    }
    const Rational cof = determinant(minor);
    if (i % 2 == 0) out += cof * column[i];
    else out -= cof * column[i];
  }
  return out;
}

}  // namespace geronimus
