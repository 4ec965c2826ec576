// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff every
// criterion passes. All tolerances, sizes and seeds are fixed below.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "geronimus/double_transform.hpp"
#include "geronimus/matrix_factor.hpp"
#include "geronimus/oracle.hpp"
#include "geronimus/single_transform.hpp"
#include "support/instances.hpp"

using namespace geronimus;
namespace fs = std::filesystem;

namespace {

constexpr long kPrecision = 256;
constexpr long kToleranceExponent = -128;  // 2^-128
constexpr double kRuntimeLimitSeconds = 10.0;
constexpr std::size_t kLaguerreLevels = 15;
constexpr std::size_t kCompositionLevels = 12;
constexpr std::size_t kDarbouxN = 12;
constexpr std::size_t kCholeskyN = 10;
constexpr std::size_t kRepresentationN = 12;
constexpr std::size_t kHeineN = 8;
constexpr int kRandomMeasures = 5;
constexpr std::uint64_t kMeasureSeed = 20240601;
constexpr std::uint64_t kParameterSeed = 777;

// A detail line is appended after PASS/FAIL; a criterion fails by returning
// false or throwing.
struct Outcome {
  bool pass = true;
  std::string detail;
};

class Checker {
 public:
  void expect(bool cond, const std::string& what) {
    ++count_;
    if (!cond && first_.empty()) first_ = what;
  }
  void merge(const CheckReport& r, const std::string& where) {
    count_ += r.checks();
    if (!r.ok() && first_.empty()) first_ = where + ": " + r.summary();
  }
  Outcome outcome(const std::string& extra = {}) const {
    std::string d = std::to_string(count_) + " checks";
    if (!extra.empty()) d += ", " + extra;
    if (!first_.empty()) d += "; first failure: " + first_;
    return {first_.empty(), d};
  }

 private:
  std::size_t count_ = 0;
  std::string first_;
};

std::string lag_label(const Rational& alpha) { return "laguerre(" + alpha.str() + ")"; }

struct Measure {
  std::string label;
  MomentFunctional base;
  std::optional<std::vector<Rational>> head1;
  std::optional<std::vector<Rational>> head2;
};

// Laguerre alpha in {1, 2, 1/2} and the random discrete measures, the latter
// exposed as finite custom moment lists.
std::vector<Measure> shared_measures() {
  std::vector<Measure> out;
  for (const Rational& alpha : {Rational(1), Rational(2), Rational(1, 2)}) {
    Measure m{lag_label(alpha), laguerre_moments(alpha), laguerre_divided_head(alpha, 1), std::nullopt};
    if (alpha > Rational(1)) m.head2 = laguerre_divided_head(alpha, 2);
    out.push_back(std::move(m));
  }
  testing::Rng rng(kMeasureSeed);
  for (int i = 0; i < kRandomMeasures; ++i) {
    const auto inst = testing::random_discrete(rng);
    const std::string label = "custom#" + std::to_string(i + 1);
    out.push_back({label, custom_moments(inst.base.take(48), label), inst.head1, inst.head2});
  }
  return out;
}

const std::vector<Measure>& measures() {
  static const std::vector<Measure> m = shared_measures();
  return m;
}

// Regular parameters drawn once per measure so that criteria 3, 4 and 7 see the
// same instances.
struct Params {
  Rational s0_star;
  Corner corner;
};

const std::vector<Params>& regular_params() {
  static const std::vector<Params> p = [] {
    std::vector<Params> out;
    testing::Rng rng(kParameterSeed);
    for (const Measure& m : measures()) {
      const auto b = testing::base_data(m.base, kDarbouxN + 3);
      const Rational s = testing::regular_s0_star(rng, b, kDarbouxN + 1);
      const Corner c = testing::regular_corner(rng, b, kDarbouxN + 2);
      out.push_back({s, c});
    }
    return out;
  }();
  return p;
}

Outcome criterion_laguerre_single() {
  const auto start = std::chrono::steady_clock::now();
  Checker ck;
  for (const long a : {1L, 2L, 3L}) {
    const Rational alpha(a);
    const auto base = laguerre_moments(alpha);
    const auto b = testing::base_data(base, kLaguerreLevels);
    const Rational s0 = laguerre_divided_head(alpha, 1)[0];
    ck.expect(s0 == Rational(1, a), "s0* = 1/alpha");
    const auto st = transform_single(b.ops, b.sk, s0, kLaguerreLevels);
    for (std::size_t n = 1; n <= kLaguerreLevels; ++n) {
      ck.expect(st.A(n) == Rational(static_cast<long>(n)), "A_" + std::to_string(n) + " = n, alpha " + alpha.str());
    }
    const auto target = monic_ops(build_gram(laguerre_moments(alpha - 1), kLaguerreLevels));
    for (std::size_t n = 0; n <= kLaguerreLevels; ++n) {
      ck.expect(st.p_star[n] == target.polys[n], "P*_" + std::to_string(n) + " = Laguerre(alpha-1), alpha " + alpha.str());
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  ck.expect(secs < kRuntimeLimitSeconds, "runtime under limit");
  char buf[64];
  std::snprintf(buf, sizeof buf, "runtime %.3f s (limit %.0f s)", secs, kRuntimeLimitSeconds);
  return ck.outcome(buf);
}

Outcome criterion_composition() {
  Checker ck;
  for (const long a : {2L, 3L}) {
    const Rational alpha(a);
    const auto base = laguerre_moments(alpha);
    const auto head = laguerre_divided_head(alpha, 2);
    const Corner corner{head[0], head[1], base.moment(0)};
    const auto b = testing::base_data(base, kCompositionLevels);
    const auto dt = transform_double(b.ops, b.sk, corner, kCompositionLevels);
    const auto composed = compose_single_steps(base, corner, kCompositionLevels);
    const auto target = monic_ops(build_gram(laguerre_moments(alpha - 2), kCompositionLevels));
    for (std::size_t n = 1; n <= kCompositionLevels; ++n) {
      const std::string tag = "n = " + std::to_string(n) + ", alpha " + alpha.str();
      ck.expect(dt.B(n) == Rational(static_cast<long>(2 * n)), "B_n = 2n, " + tag);
      if (n >= 2) ck.expect(dt.C(n) == Rational(static_cast<long>(n * (n - 1))), "C_n = n(n-1), " + tag);
    }
    for (std::size_t n = 0; n <= kCompositionLevels; ++n) {
      const std::string tag = "n = " + std::to_string(n) + ", alpha " + alpha.str();
      ck.expect(dt.p_ss[n] == composed[n], "P**_n = two single steps, " + tag);
      ck.expect(dt.p_ss[n] == target.polys[n], "P**_n = Laguerre(alpha-2), " + tag);
    }
  }
  return ck.outcome();
}

Outcome criterion_darboux_single() {
  Checker ck;
  const std::size_t n = kDarbouxN;
  for (std::size_t i = 0; i < measures().size(); ++i) {
    const Measure& m = measures()[i];
    const Rational s = regular_params()[i].s0_star;
    const auto b = testing::base_data(m.base, n + 2);
    const auto st = transform_single(b.ops, b.sk, s, n + 1);
    const auto f = darboux_factors_single(b.ops, st, n);
    const auto j = build_monic_jacobi(b.ops, n);
    const auto target = multiplication_matrix(st.p_star, 1, n);
    ck.merge(verify_darboux(j, f, target), m.label);
    ck.merge(oracle::dense_mul_check(f.u_mon, f.l_mon), m.label + " U L");
    ck.merge(oracle::dense_mul_check(f.l_mon, f.u_mon), m.label + " L U");
    ck.expect(target.lower_bandwidth() == 1 && target.upper_bandwidth() == 1, m.label + " J*_mon tridiagonal");
    for (std::size_t k = 0; k < n; ++k) {
      ck.expect(!f.diag_u(k).is_zero(), m.label + " F_n != 0");
      ck.expect(f.diag_u(k) * st.h_star_sq[k] == b.ops.norms_sq[k], m.label + " F_{n+1} (h*_n)^2 = h_n^2");
    }
  }
  return ck.outcome(std::to_string(measures().size()) + " measures, N = " + std::to_string(n) + ", leading " +
                    std::to_string(n - 1) + " blocks");
}

Outcome criterion_darboux_double() {
  Checker ck;
  const std::size_t n = kDarbouxN;
  for (std::size_t i = 0; i < measures().size(); ++i) {
    const Measure& m = measures()[i];
    const Corner& c = regular_params()[i].corner;
    const auto b = testing::base_data(m.base, n + 3);
    const auto dt = transform_double(b.ops, b.sk, c, n + 2);
    const auto f = darboux_factors_double(b.ops, dt, n);
    const auto j = build_monic_jacobi(b.ops, n);
    const auto target = multiplication_matrix(dt.p_ss, 2, n);
    ck.merge(verify_darboux(j, f, target), m.label);
    ck.merge(oracle::dense_mul_check(f.u_mon, f.l_mon), m.label + " U L");
    ck.merge(oracle::dense_mul_check(f.l_mon, f.u_mon), m.label + " L U");
    ck.merge(oracle::dense_mul_check(j.matrix(), j.matrix()), m.label + " J J");
    ck.expect(target.lower_bandwidth() == 2 && target.upper_bandwidth() == 2, m.label + " J**_mon pentadiagonal");
    for (std::size_t k = 0; k < n; ++k) {
      ck.expect(!f.diag_u(k).is_zero(), m.label + " E_n != 0");
      ck.expect(f.diag_u(k) * dt.h_ss_sq[k] == b.ops.norms_sq[k], m.label + " E_{n+1} (h**_n)^2 = h_n^2");
    }
  }
  return ck.outcome(std::to_string(measures().size()) + " measures, N = " + std::to_string(n) + ", leading " +
                    std::to_string(n - 2) + " blocks");
}

Outcome criterion_cholesky() {
  Checker ck;
  const std::size_t n = kCholeskyN;
  const BigFloat tol = BigFloat::exp2(kToleranceExponent, kPrecision);
  BigFloat worst(0L, kPrecision);
  std::size_t instances = 0;
  testing::Rng rng(kParameterSeed + 1);
  auto track = [&](const CholeskyCheck& chk, const std::string& where) {
    ck.merge(chk.report, where);
    ck.expect(chk.factor.precision == kPrecision, where + " precision");
    if (chk.report.max_residual()) {
      worst = max(worst, *chk.report.max_residual());
      ck.expect(*chk.report.max_residual() <= tol, where + " residual <= 2^-128");
    }
    ++instances;
  };
  for (const Measure& m : measures()) {
    const auto b = testing::base_data(m.base, n + 3);
    const Rational s = testing::positive_s0_star(rng, m.base, n, m.head1 ? &*m.head1 : nullptr);
    const auto st = transform_single(b.ops, b.sk, s, n + 1);
    track(symmetric_cholesky_check(st, b.ops, m.base, n, kPrecision), m.label + " single");
    for (std::size_t k = 0; k < n; ++k) {
      ck.expect(st.h_star_sq[k + 1] == st.A(k + 1) * b.ops.norms_sq[k], m.label + " (h*_{n+1})^2 = A_{n+1} h_n^2");
    }

    const Corner c = testing::positive_corner(rng, m.base, n, m.head2 ? &*m.head2 : nullptr);
    const auto dt = transform_double(b.ops, b.sk, c, n + 2);
    track(symmetric_cholesky_check(dt, b.ops, m.base, n, kPrecision), m.label + " double");
    for (std::size_t k = 0; k + 2 <= n; ++k) {
      ck.expect(dt.h_ss_sq[k + 2] == dt.C(k + 2) * b.ops.norms_sq[k], m.label + " (h**_{n+2})^2 = C_{n+2} h_n^2");
    }
    const Rational s0 = m.base.moment(0), s1 = m.base.moment(1);
    ck.expect(dt.h_ss_sq[1] == c.s2 + c.s1 * (dt.B(1) - s1 / s0), m.label + " (h**_1)^2 = s2** + s1** (B_1 - s_1/s_0)");
  }
  return ck.outcome(std::to_string(instances) + " instances, p = " + std::to_string(kPrecision) +
                    ", N = " + std::to_string(n) + ", max residual " + worst.str(6) + " (tolerance 2^-128)");
}

Outcome criterion_representation() {
  Checker ck;
  const std::size_t n = kRepresentationN;
  for (std::size_t i = 0; i < measures().size(); ++i) {
    const Measure& m = measures()[i];
    const Rational s = regular_params()[i].s0_star;
    const Corner& c = regular_params()[i].corner;
    const std::vector<Rational> h1 = m.head1.value_or(std::vector<Rational>{0});
    const std::vector<Rational> h2 = m.head2.value_or(std::vector<Rational>{0, 0});
    ck.merge(verify_mass_vs_gram_1(divided_measure(m.base, 1, h1), s, n), m.label + " mass form");
    ck.merge(verify_mass_vs_gram_1(divided_measure(m.base, 1, {h1[0] + Rational(5, 3)}), s, n),
             m.label + " mass form, second head");
    ck.merge(verify_sobolev_vs_gram_2(divided_measure(m.base, 2, h2), c, n), m.label + " Sobolev form");
    ck.merge(verify_sobolev_vs_gram_2(divided_measure(m.base, 2, {h2[0] - 2, h2[1] + Rational(1, 7)}), c, n),
             m.label + " Sobolev form, second head");
  }
  // Diagonal case: alpha = 2 with corner (m_0 + l1, m_1, m_2 + l2).
  const auto base = laguerre_moments(2);
  const auto head = laguerre_divided_head(2, 2);
  const auto div = divided_measure(base, 2, head);
  const auto b = testing::base_data(base, n + 1);
  for (const auto& [l1, l2] : {std::pair{Rational(0), Rational(3)}, std::pair{Rational(2, 5), Rational(1, 4)}}) {
    const Corner c{head[0] + l1, head[1], base.moment(0) + l2};
    ck.expect(sobolev_mass_matrix(div, c) == SobolevMassMatrix{l1, 0, l2}, "M = diag(l1, l2), l1 = " + l1.str());
    ck.merge(verify_sobolev_vs_gram_2(div, c, n), "diagonal Sobolev, l1 = " + l1.str());
    const auto dt = transform_double(b.ops, b.sk, c, n);
    ck.expect(regularity_check(build_gram(GeronimusMoments2(base, c), n)).positive_definite,
              "diagonal Sobolev form positive definite, l1 = " + l1.str());
    ck.expect(dt.n_max() == n, "diagonal case transform, l1 = " + l1.str());
  }
  return ck.outcome("i, j <= " + std::to_string(n));
}

Outcome criterion_routes() {
  Checker ck;
  const std::size_t n = kDarbouxN;
  for (std::size_t i = 0; i < measures().size(); ++i) {
    const Measure& m = measures()[i];
    const auto& p = regular_params()[i];
    const auto b = testing::base_data(m.base, n + 2);
    const auto st = transform_single(b.ops, b.sk, p.s0_star, n + 1);
    const auto g1 = build_gram(geronimus1_moments(m.base, p.s0_star), n + 1);
    for (std::size_t k = 1; k <= n + 1; ++k) {
      ck.expect(solve_connection_single(g1, b.ops, k) == st.A(k), m.label + " A_n quotient = solve");
      ck.expect(single_determinant_form(b.ops, b.sk, p.s0_star, k) == st.p_star[k], m.label + " P*_n determinant form");
    }
    const auto dt = transform_double(b.ops, b.sk, p.corner, n + 2);
    const auto e = double_system_entries(b.ops, b.sk, p.corner);
    for (std::size_t k = 2; k <= n + 2; ++k) {
      const Connection2 rd = read_off_connection(double_determinant_form(b.ops, e, k), b.ops);
      ck.expect(rd.b == dt.B(k), m.label + " B_" + std::to_string(k) + " system = determinant");
      ck.expect(rd.c == dt.C(k), m.label + " C_" + std::to_string(k) + " system = determinant");
    }
  }
  return ck.outcome();
}

Outcome criterion_oracle() {
  Checker ck;
  std::vector<std::pair<std::string, MomentFunctional>> all;
  for (const Rational& alpha : {Rational(0), Rational(1, 2), Rational(1), Rational(2), Rational(3)})
    all.emplace_back(lag_label(alpha), laguerre_moments(alpha));
  for (const Measure& m : measures())
    if (m.label.rfind("custom", 0) == 0) all.emplace_back(m.label, m.base);
  for (const auto& [label, base] : all) {
    const auto g = build_gram(base, kHeineN);
    const auto ops = monic_ops(g);
    for (std::size_t n = 0; n <= kHeineN; ++n) {
      ck.expect(oracle::heine_polynomial(g, n) == ops.polys[n], label + " Heine P_" + std::to_string(n));
    }
    ck.merge(oracle::check_orthogonality(g, ops.polys).report, label + " P");
  }
  testing::Rng rng(kParameterSeed + 2);
  for (std::size_t i = 0; i < measures().size(); ++i) {
    const Measure& m = measures()[i];
    const auto& p = regular_params()[i];
    const auto b = testing::base_data(m.base, kHeineN + 2);
    const auto st = transform_single(b.ops, b.sk, p.s0_star, kHeineN);
    const auto g1 = build_gram(geronimus1_moments(m.base, p.s0_star), kHeineN);
    const auto o1 = oracle::check_orthogonality(g1, st.p_star);
    ck.merge(o1.report, m.label + " P*");
    ck.expect(o1.norms_sq == st.h_star_sq, m.label + " (h*_n)^2 oracle");
    const auto dt = transform_double(b.ops, b.sk, p.corner, kHeineN);
    const auto g2 = build_gram(GeronimusMoments2(m.base, p.corner), kHeineN);
    const auto o2 = oracle::check_orthogonality(g2, dt.p_ss);
    ck.merge(o2.report, m.label + " P**");
    ck.expect(o2.norms_sq == dt.h_ss_sq, m.label + " (h**_n)^2 oracle");
    for (std::size_t n = 0; n <= kHeineN; ++n) {
      ck.expect(oracle::heine_polynomial(g1, n) == st.p_star[n], m.label + " Heine P*_" + std::to_string(n));
      ck.expect(oracle::heine_polynomial(g2, n) == dt.p_ss[n], m.label + " Heine P**_" + std::to_string(n));
    }
  }
  return ck.outcome(std::to_string(all.size()) + " base measures, n <= " + std::to_string(kHeineN));
}

template <class E>
std::optional<std::size_t> level_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const E& e) {
    return e.level();
  }
  return std::nullopt;
}

Outcome criterion_negative() {
  Checker ck;
  // s0* = 0.
  {
    const auto b = testing::base_data(laguerre_moments(1), 6);
    const auto lvl = level_of<DegenerateDenominator>([&] { (void)transform_single(b.ops, b.sk, 0, 6); });
    ck.expect(lvl == 1u, "s0* = 0 -> DegenerateDenominator(1)");
  }
  // Constructed singular systems: d**_L vanishes for the solved s2**.
  const auto base = laguerre_moments(Rational(1, 2));
  const auto b = testing::base_data(base, 10);
  {
    const auto lvl = level_of<DegenerateDeterminant>([&] { (void)transform_double(b.ops, b.sk, {1, 1, 1}, 6); });
    ck.expect(lvl == 2u, "corner (1,1,1) -> DegenerateDeterminant(2)");
  }
  auto det2 = [&](const Corner& c, std::size_t n) {
    const auto e = double_system_entries(b.ops, b.sk, c);
    return e[n - 1].with_one * e[n - 2].with_t - e[n - 2].with_one * e[n - 1].with_t;
  };
  testing::Rng rng(kParameterSeed + 3);
  for (std::size_t level = 3; level <= 6; ++level) {
    // d**_L is affine in s2**; pick (s0**, s1**) with a nonconstant d**_L and
    // nonzero lower levels at the root.
    Corner c;
    for (;;) {
      const Rational s0 = testing::random_nonzero(rng), s1 = testing::random_rational(rng);
      const Rational d0 = det2({s0, s1, 0}, level), d1 = det2({s0, s1, 1}, level);
      if (d0 == d1) continue;
      c = {s0, s1, d0 / (d0 - d1)};
      bool lower = true;
      for (std::size_t k = 2; k < level; ++k) lower = lower && !det2(c, k).is_zero();
      if (lower) break;
    }
    const auto lvl = level_of<DegenerateDeterminant>([&] { (void)transform_double(b.ops, b.sk, c, 8); });
    ck.expect(lvl == level, "constructed corner -> DegenerateDeterminant(" + std::to_string(level) + ")");
    const auto slvl = level_of<DegenerateDenominator>([&] {
      const Rational s = -b.sk.q0[level - 1] / poly_eval(b.ops.polys[level - 1], 0);
      (void)transform_single(b.ops, b.sk, s, 8);
    });
    ck.expect(slvl == level, "constructed s0* -> DegenerateDenominator(" + std::to_string(level) + ")");
  }
  // Fault injection: the first mismatch sits at the predicted entry.
  const std::size_t n = kDarbouxN;
  for (std::size_t i = 0; i < measures().size(); ++i) {
    const Measure& m = measures()[i];
    const auto& p = regular_params()[i];
    const auto bd = testing::base_data(m.base, n + 3);
    const auto st = transform_single(bd.ops, bd.sk, p.s0_star, n + 1);
    const auto j = build_monic_jacobi(bd.ops, n);
    const auto fs = darboux_factors_single(bd.ops, st, n);
    const auto ts = multiplication_matrix(st.p_star, 1, n);
    auto located = [&](const CheckReport& r, std::size_t row, std::size_t col) {
      return !r.ok() && r.failure()->row == row && r.failure()->col == col;
    };
    for (std::size_t k = 1; k + 1 < n; ++k) {
      DarbouxFactors f = fs;
      f.l_mon.set(k, k - 1, f.l_mon(k, k - 1) + 1);
      ck.expect(located(verify_darboux(j, f, ts), k - 1, k - 1), m.label + " A_" + std::to_string(k) + " located");
    }
    const auto dt = transform_double(bd.ops, bd.sk, p.corner, n + 2);
    const auto fd = darboux_factors_double(bd.ops, dt, n);
    const auto td = multiplication_matrix(dt.p_ss, 2, n);
    {
      DarbouxFactors f = fd;
      f.l_mon.set(1, 0, f.l_mon(1, 0) + 1);
      ck.expect(located(verify_darboux(j, f, td), 0, 0), m.label + " B_1 located");
    }
    for (std::size_t k = 2; k + 2 < n; ++k) {
      DarbouxFactors fb = fd;
      fb.l_mon.set(k, k - 1, fb.l_mon(k, k - 1) + 1);
      ck.expect(located(verify_darboux(j, fb, td), k - 2, k - 1), m.label + " B_" + std::to_string(k) + " located");
      DarbouxFactors fc = fd;
      fc.l_mon.set(k, k - 2, fc.l_mon(k, k - 2) + 1);
      ck.expect(located(verify_darboux(j, fc, td), k - 2, k - 2), m.label + " C_" + std::to_string(k) + " located");
    }
  }
  return ck.outcome();
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Every regular file below `dir`, keyed by relative path.
std::vector<std::pair<std::string, std::string>> snapshot(const fs::path& dir) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& e : fs::recursive_directory_iterator(dir))
    if (e.is_regular_file()) out.emplace_back(fs::relative(e.path(), dir).string(), slurp(e.path()));
  std::sort(out.begin(), out.end());
  return out;
}

Outcome criterion_determinism() {
  Checker ck;
  const std::string cli = GERONIMUS_CLI_PATH;
  const std::vector<std::string> configs = {
      "transform --measure laguerre --alpha 1 --single --s0star 1 --n 10 --format csv",
      "transform --measure laguerre --alpha 2 --double --corner 1/2,1/2,1 --n 10 --format json",
      "transform --measure laguerre --alpha 1/2 --single --s0star 3/7 --n 8 --format latex",
      "transform --measure laguerre --alpha 3 --double --corner 2,1/3,5 --n 8 --format csv --decimal 128",
      "factorize --measure laguerre --alpha 1 --single --s0star 1 --n 8",
      "factorize --measure laguerre --alpha 2 --double --corner 1/2,1/2,1 --n 8",
      "verify --measure laguerre --alpha 2 --double --corner 3/2,1/2,2 --n 8",
      "verify --measure laguerre --alpha 1 --single --s0star 1 --n 8 --corrupt a:3",
  };
  const fs::path root = fs::temp_directory_path() / "geronimus_acceptance_determinism";
  fs::remove_all(root);
  std::size_t files = 0;
  for (std::size_t i = 0; i < configs.size(); ++i) {
    std::vector<std::pair<std::string, std::string>> runs[2];
    int codes[2];
    for (int r = 0; r < 2; ++r) {
      const fs::path dir = root / ("config" + std::to_string(i)) / ("run" + std::to_string(r));
      fs::create_directories(dir);
      std::string cmd = "\"" + cli + "\" " + configs[i];
      if (configs[i].rfind("factorize", 0) == 0) cmd += " --output-dir \"" + (dir / "matrices").string() + "\"";
      cmd += " > \"" + (dir / "stdout.txt").string() + "\" 2> \"" + (dir / "stderr.txt").string() + "\"";
      codes[r] = std::system(cmd.c_str());
      runs[r] = snapshot(dir);
    }
    ck.expect(codes[0] == codes[1], configs[i] + ": exit status differs");
    ck.expect(runs[0] == runs[1], configs[i] + ": outputs differ");
    ck.expect(runs[0].size() >= 2 && !runs[0][runs[0].size() - 1].second.empty(), configs[i] + ": no output");
    files += runs[0].size();
  }
  fs::remove_all(root);
  return ck.outcome(std::to_string(configs.size()) + " configurations, " + std::to_string(files) + " files compared");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"Laguerre single step: A_n = n, P*_n = Laguerre(alpha-1), n <= 15", criterion_laguerre_single},
      {"double step composition: B_n = 2n, C_n = n(n-1), two single steps, n <= 12", criterion_composition},
      {"tridiagonal Darboux: J_mon = U L, J*_mon = L U", criterion_darboux_single},
      {"pentadiagonal Darboux: J_mon^2 = U L, J**_mon = L U", criterion_darboux_double},
      {"Cholesky structure at p = 256", criterion_cholesky},
      {"mass and Sobolev representations", criterion_representation},
      {"route agreement", criterion_routes},
      {"oracle equivalence", criterion_oracle},
      {"negative paths and fault location", criterion_negative},
      {"CLI determinism", criterion_determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << (i + 1) << "] " << criteria[i].first << " (" << o.detail
              << ")" << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
