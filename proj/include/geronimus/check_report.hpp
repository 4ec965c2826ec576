#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "geronimus/bigfloat.hpp"
#include "geronimus/rational.hpp"

namespace geronimus {

struct Mismatch {
  std::string identity;
  std::size_t row = 0;
  std::size_t col = 0;
  std::string lhs;
  std::string rhs;
};

// Outcome of a batch of exact (and optionally floating) identity checks. Only
// the first failure is kept.
class CheckReport {
 public:
  explicit CheckReport(std::string name = {}) : name_(std::move(name)) {}

  // Returns whether the pair matched.
  bool expect_equal(const Rational& lhs, const Rational& rhs, const std::string& identity,
                    std::size_t row = 0, std::size_t col = 0);
  bool expect(bool condition, const std::string& identity, std::size_t row = 0,
              std::size_t col = 0, const std::string& detail = {});
  // |residual| <= tolerance; tracks the largest residual seen.
  bool expect_within(const BigFloat& residual, const BigFloat& tolerance,
                     const std::string& identity, std::size_t row = 0, std::size_t col = 0);

  void merge(const CheckReport& other);

  const std::string& name() const noexcept { return name_; }
  bool ok() const noexcept { return !failure_.has_value(); }
  std::size_t checks() const noexcept { return checks_; }
  const std::optional<Mismatch>& failure() const noexcept { return failure_; }
  const std::optional<BigFloat>& max_residual() const noexcept { return max_residual_; }

  // Throws MismatchAt (or ToleranceExceeded for floating checks) on failure.
  void require() const;
  std::string summary() const;

 private:
  void fail(Mismatch m, bool tolerance);

  std::string name_;
  std::size_t checks_ = 0;
  std::optional<Mismatch> failure_;
  bool tolerance_failure_ = false;
  std::optional<BigFloat> max_residual_;
};

}  // namespace geronimus
