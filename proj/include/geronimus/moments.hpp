#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "geronimus/rational.hpp"

namespace geronimus {

// Moment sequence s_k = (t^k, 1)_0 of the initial form, generated lazily and
// cached. Copies share the cache; concurrent reads are serialized internally.
class MomentFunctional {
 public:
  // gen(k, previous) returns s_k; `previous` holds s_0 .. s_{k-1}.
  using Generator = std::function<Rational(std::size_t, std::span<const Rational>)>;

  MomentFunctional(std::string label, Generator gen, std::optional<std::size_t> length = std::nullopt);

  // s_k. Throws IndexOutOfRange beyond the length of a finite functional.
  Rational moment(std::size_t k) const;
  std::vector<Rational> take(std::size_t count) const;

  // Number of moments available; nullopt for an infinite sequence.
  std::optional<std::size_t> length() const;
  const std::string& label() const;

  // True when every leading principal minor of (s_{i+j}) up to `order` is > 0.
  bool hankel_positive(std::size_t order) const;

 private:
  struct State;
  std::shared_ptr<State> state_;
};

// Probability-normalized Laguerre moments (alpha+1)_k of t^alpha e^{-t} dt on
// (0, inf). Requires alpha > -1.
MomentFunctional laguerre_moments(const Rational& alpha);

// Finite moment functional from explicit values (non-empty).
MomentFunctional custom_moments(std::vector<Rational> values, std::string label = "custom");

// Free parameters of the double transform: the top-left 2x2 Gram block.
struct Corner {
  Rational s0;
  Rational s1;
  Rational s2;
  friend bool operator==(const Corner&, const Corner&) = default;
};

// Moments of [.,.]_1 with [t f, g]_1 = (f, g)_0: the Hankel sequence
// (s0*, s_0, s_1, ...).
class GeronimusMoments1 {
 public:
  GeronimusMoments1(MomentFunctional base, Rational s0_star);

  // k-th element of the spliced sequence.
  Rational moment(std::size_t k) const;
  Rational gram_entry(std::size_t i, std::size_t j) const { return moment(i + j); }

  const MomentFunctional& base() const noexcept { return base_; }
  const Rational& s0_star() const noexcept { return s0_star_; }
  // The spliced sequence viewed as a moment functional in its own right.
  MomentFunctional as_functional() const;

 private:
  MomentFunctional base_;
  Rational s0_star_;
};

// Gram entries of [.,.]_2 with [t^2 f, g]_2 = (f, g)_0: s_{i+j-2} whenever
// max(i, j) >= 2, and the free corner on {0,1} x {0,1}.
class GeronimusMoments2 {
 public:
  GeronimusMoments2(MomentFunctional base, Corner corner);

  Rational gram_entry(std::size_t i, std::size_t j) const;

  const MomentFunctional& base() const noexcept { return base_; }
  const Corner& corner() const noexcept { return corner_; }

 private:
  MomentFunctional base_;
  Corner corner_;
};

GeronimusMoments1 geronimus1_moments(const MomentFunctional& base, const Rational& s0_star);
GeronimusMoments2 geronimus2_moments(const MomentFunctional& base, const Rational& s0_ss,
                                     const Rational& s1_ss, const Rational& s2_ss);

// Moments m_k of mu_1 (order 1, dmu = t dmu_1) or mu_2 (order 2, dmu = t^2 dmu_2):
// m_k = head[k] for k < order, m_{k+order} = s_k.
class DividedMeasure {
 public:
  DividedMeasure(MomentFunctional base, unsigned order, std::vector<Rational> head);

  Rational moment(std::size_t k) const;
  unsigned order() const noexcept { return order_; }
  const std::vector<Rational>& head() const noexcept { return head_; }
  const MomentFunctional& base() const noexcept { return base_; }

 private:
  MomentFunctional base_;
  unsigned order_;
  std::vector<Rational> head_;
};

DividedMeasure divided_measure(const MomentFunctional& base, unsigned order, std::vector<Rational> head);

// Head of the divided Laguerre measure t^{alpha-order} e^{-t} / Gamma(alpha+1):
// order 1 -> (1/alpha), order 2 -> (1/(alpha(alpha-1)), 1/alpha).
// Requires alpha > order - 1 so that the divided measure is finite.
std::vector<Rational> laguerre_divided_head(const Rational& alpha, unsigned order);

}  // namespace geronimus
