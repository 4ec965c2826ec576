#pragma once

// Random instance generators shared by the unit tests and the acceptance
// binary. All randomness comes from std::mt19937_64 with fixed seeds.

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "geronimus/banded_matrix.hpp"
#include "geronimus/double_transform.hpp"
#include "geronimus/linear_solve.hpp"
#include "geronimus/moments.hpp"
#include "geronimus/orthopoly.hpp"
#include "geronimus/single_transform.hpp"

namespace geronimus::testing {

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline Rational random_rational(Rng& rng, long num_bound = 9, long den_max = 7) {
  return Rational(uniform(rng, -num_bound, num_bound), uniform(rng, 1, den_max));
}

inline Rational random_nonzero(Rng& rng, long num_bound = 9, long den_max = 7) {
  for (;;) {
    Rational r = random_rational(rng, num_bound, den_max);
    if (!r.is_zero()) return r;
  }
}

inline BandedMatrix<Rational> random_banded(Rng& rng, std::size_t n, std::size_t lo, std::size_t hi) {
  BandedMatrix<Rational> m(n, lo, hi, Rational(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = m.band_begin(i); j < m.band_end(i); ++j) m.set(i, j, random_rational(rng));
  return m;
}

inline RationalMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
  RationalMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_rational(rng);
  return m;
}

// Positive discrete measure mu_2 = sum_j w_j delta_{x_j} with positive rational
// nodes; the base functional is mu = t^2 mu_2, so the heads of mu_1 = t mu_2
// and mu_2 are known exactly.
struct DiscreteInstance {
  std::vector<Rational> nodes;
  std::vector<Rational> weights;
  MomentFunctional base;
  std::vector<Rational> head1;  // m_0(mu_1)
  std::vector<Rational> head2;  // m_0(mu_2), m_1(mu_2)
};

inline Rational weighted_power_sum(const std::vector<Rational>& x, const std::vector<Rational>& w, std::size_t k) {
  Rational acc(0);
  for (std::size_t j = 0; j < x.size(); ++j) acc += w[j] * pow(x[j], static_cast<unsigned>(k));
  return acc;
}

inline DiscreteInstance random_discrete(Rng& rng, std::size_t support = 22, const std::string& tag = "discrete") {
  std::set<long> nums;
  while (nums.size() < support) nums.insert(uniform(rng, 1, 64));
  std::vector<Rational> x, w;
  for (long p : nums) {
    x.emplace_back(p, 8);
    w.emplace_back(uniform(rng, 1, 9), uniform(rng, 1, 4));
  }
  MomentFunctional base(tag, [x, w](std::size_t k, std::span<const Rational>) {
    return weighted_power_sum(x, w, k + 2);
  });
  return {x, w, base, {weighted_power_sum(x, w, 1)}, {weighted_power_sum(x, w, 0), weighted_power_sum(x, w, 1)}};
}

struct BaseData {
  MonicOPS ops;
  SecondKindValues sk;
};

inline BaseData base_data(const MomentFunctional& m, std::size_t levels) {
  MonicOPS ops = monic_ops(build_gram(m, levels));
  SecondKindValues sk = second_kind(m, ops);
  return {std::move(ops), std::move(sk)};
}

// Random s0* for which the single transform is regular up to `levels`.
inline Rational regular_s0_star(Rng& rng, const BaseData& b, std::size_t levels) {
  for (;;) {
    const Rational s = random_nonzero(rng, 12, 5);
    try {
      (void)transform_single(b.ops, b.sk, s, levels);
      return s;
    } catch (const DegenerateDenominator&) {
    }
  }
}

inline Corner regular_corner(Rng& rng, const BaseData& b, std::size_t levels) {
  for (;;) {
    const Corner c{random_nonzero(rng, 12, 5), random_rational(rng, 12, 5), random_rational(rng, 12, 5)};
    try {
      (void)transform_double(b.ops, b.sk, c, levels);
      return c;
    } catch (const DegenerateDeterminant&) {
    }
  }
}

// Parameters whose transformed Gram matrix is positive definite up to
// `order`. With a known head the mass added at the origin is positive
// semidefinite; otherwise candidates are drawn until the minors are positive.
inline Rational positive_s0_star(Rng& rng, const MomentFunctional& base, std::size_t order,
                                 const std::vector<Rational>* head1 = nullptr) {
  for (;;) {
    const Rational lambda(uniform(rng, 0, 40), uniform(rng, 1, 6));
    const Rational s = head1 ? (*head1)[0] + lambda : lambda;
    if (!s.is_zero() && regularity_check(build_gram(geronimus1_moments(base, s), order)).positive_definite) return s;
  }
}

inline Corner positive_corner(Rng& rng, const MomentFunctional& base, std::size_t order,
                              const std::vector<Rational>* head2 = nullptr) {
  for (;;) {
    // Without a head the divided measure may have infinite mass, and the
    // corner has to dominate a bound that grows with the order.
    const long range = head2 ? 40 : 4000;
    const Rational l1(uniform(rng, head2 ? 0 : 1, range), uniform(rng, 1, 6));
    const Rational l2(uniform(rng, 1, range), uniform(rng, 1, 6));
    Rational mu = random_rational(rng, 12, 5);
    if (mu * mu > l1 * l2) mu = Rational(0);
    const Corner c = head2 ? Corner{(*head2)[0] + l1, (*head2)[1] + mu, base.moment(0) + l2} : Corner{l1, mu, l2};
    if (regularity_check(build_gram(GeronimusMoments2(base, c), order)).positive_definite) return c;
  }
}

}  // namespace geronimus::testing
