#include "geronimus/moments.hpp"

#include <mutex>
#include <utility>

#include "geronimus/errors.hpp"
#include "geronimus/linear_solve.hpp"

namespace geronimus {

struct MomentFunctional::State {
  std::string label;
  Generator gen;
  std::optional<std::size_t> length;
  std::mutex mutex;
  std::vector<Rational> cache;
};

MomentFunctional::MomentFunctional(std::string label, Generator gen,
                                   std::optional<std::size_t> length)
    : state_(std::make_shared<State>()) {
  state_->label = std::move(label);
  state_->gen = std::move(gen);
  state_->length = length;
}

Rational MomentFunctional::moment(std::size_t k) const {
  if (state_->length && k >= *state_->length) throw IndexOutOfRange(k, *state_->length);
  std::lock_guard<std::mutex> lock(state_->mutex);
  auto& cache = state_->cache;
  while (cache.size() <= k) {
    Rational next = state_->gen(cache.size(), std::span<const Rational>(cache));
    cache.push_back(std::move(next));
  }
  return cache[k];
}

std::vector<Rational> MomentFunctional::take(std::size_t count) const {
  std::vector<Rational> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) out.push_back(moment(k));
  return out;
}

std::optional<std::size_t> MomentFunctional::length() const { return state_->length; }

const std::string& MomentFunctional::label() const { return state_->label; }

bool MomentFunctional::hankel_positive(std::size_t order) const {
  RationalMatrix h(order, order);
  for (std::size_t i = 0; i < order; ++i)
    for (std::size_t j = 0; j < order; ++j) h(i, j) = moment(i + j);
  for (const auto& m : leading_minors(h))
    if (m.sign() <= 0) return false;
  return true;
}

MomentFunctional laguerre_moments(const Rational& alpha) {
  if (alpha <= Rational(-1)) throw DomainError("laguerre_moments: alpha must exceed -1");
  return MomentFunctional(
      "laguerre(alpha=" + alpha.str() + ")",
      [alpha](std::size_t k, std::span<const Rational> prev) {
        if (k == 0) return Rational(1);
        return prev[k - 1] * (alpha + Rational(static_cast<long>(k)));
      });
}

MomentFunctional custom_moments(std::vector<Rational> values, std::string label) {
  if (values.empty()) throw DomainError("custom_moments: empty moment list");
  const std::size_t n = values.size();
  return MomentFunctional(
      std::move(label),
      [v = std::move(values)](std::size_t k, std::span<const Rational>) { return v.at(k); }, n);
}

GeronimusMoments1::GeronimusMoments1(MomentFunctional base, Rational s0_star)
    : base_(std::move(base)), s0_star_(std::move(s0_star)) {}

Rational GeronimusMoments1::moment(std::size_t k) const {
  return k == 0 ? s0_star_ : base_.moment(k - 1);
}

MomentFunctional GeronimusMoments1::as_functional() const {
  std::optional<std::size_t> len;
  if (base_.length()) len = *base_.length() + 1;
  return MomentFunctional(
      "geronimus1(" + base_.label() + ", s0*=" + s0_star_.str() + ")",
      [self = *this](std::size_t k, std::span<const Rational>) { return self.moment(k); }, len);
}

GeronimusMoments2::GeronimusMoments2(MomentFunctional base, Corner corner)
    : base_(std::move(base)), corner_(std::move(corner)) {}

Rational GeronimusMoments2::gram_entry(std::size_t i, std::size_t j) const {
  if (i >= 2 || j >= 2) return base_.moment(i + j - 2);
  if (i == 0 && j == 0) return corner_.s0;
  if (i == 1 && j == 1) return corner_.s2;
  return corner_.s1;
}

GeronimusMoments1 geronimus1_moments(const MomentFunctional& base, const Rational& s0_star) {
  return GeronimusMoments1(base, s0_star);
}

GeronimusMoments2 geronimus2_moments(const MomentFunctional& base, const Rational& s0_ss,
                                     const Rational& s1_ss, const Rational& s2_ss) {
  return GeronimusMoments2(base, Corner{s0_ss, s1_ss, s2_ss});
}

DividedMeasure::DividedMeasure(MomentFunctional base, unsigned order, std::vector<Rational> head)
    : base_(std::move(base)), order_(order), head_(std::move(head)) {
  if (order_ != 1 && order_ != 2) throw DomainError("divided_measure: order must be 1 or 2");
  if (head_.size() != order_) {
    throw DomainError("divided_measure: head must supply exactly " + std::to_string(order_) +
                      " leading moments");
  }
}

Rational DividedMeasure::moment(std::size_t k) const {
  return k < order_ ? head_[k] : base_.moment(k - order_);
}

DividedMeasure divided_measure(const MomentFunctional& base, unsigned order, std::vector<Rational> head) {
  return DividedMeasure(base, order, std::move(head));
}

std::vector<Rational> laguerre_divided_head(const Rational& alpha, unsigned order) {
  if (order != 1 && order != 2) throw DomainError("laguerre_divided_head: order must be 1 or 2");
  if (alpha <= Rational(static_cast<long>(order) - 1)) {
    throw DomainError("laguerre_divided_head: divided measure has infinite mass for alpha <= " +
                      std::to_string(order - 1));
  }
  // m_k = Gamma(alpha + 1 - order + k) / Gamma(alpha + 1)
  if (order == 1) return {Rational(1) / alpha};
  return {Rational(1) / (alpha * (alpha - Rational(1))), Rational(1) / alpha};
}

}  // namespace geronimus
