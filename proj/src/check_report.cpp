#include "geronimus/check_report.hpp"

#include <utility>

#include "geronimus/errors.hpp"

namespace geronimus {

void CheckReport::fail(Mismatch m, bool tolerance) {
  if (failure_) return;
  failure_ = std::move(m);
  tolerance_failure_ = tolerance;
}

bool CheckReport::expect_equal(const Rational& lhs, const Rational& rhs, const std::string& identity,
                               std::size_t row, std::size_t col) {
  ++checks_;
  if (lhs == rhs) return true;
  fail({identity, row, col, lhs.str(), rhs.str()}, false);
  return false;
}

bool CheckReport::expect(bool condition, const std::string& identity, std::size_t row,
                         std::size_t col, const std::string& detail) {
  ++checks_;
  if (condition) return true;
  fail({identity, row, col, detail.empty() ? "false" : detail, "true"}, false);
  return false;
}

bool CheckReport::expect_within(const BigFloat& residual, const BigFloat& tolerance,
                                const std::string& identity, std::size_t row, std::size_t col) {
  ++checks_;
  const BigFloat r = abs(residual);
  max_residual_ = max_residual_ ? max(*max_residual_, r) : r;
  if (r <= tolerance) return true;
  fail({identity, row, col, r.str(12), tolerance.str(12)}, true);
  return false;
}

void CheckReport::merge(const CheckReport& other) {
  checks_ += other.checks_;
  if (other.failure_) fail(*other.failure_, other.tolerance_failure_);
  if (other.max_residual_) {
    max_residual_ = max_residual_ ? max(*max_residual_, *other.max_residual_) : *other.max_residual_;
  }
}

void CheckReport::require() const {
  if (!failure_) return;
  if (tolerance_failure_) throw ToleranceExceeded(failure_->identity, failure_->lhs);
  throw MismatchAt(failure_->identity, failure_->row, failure_->col, failure_->lhs, failure_->rhs);
}

std::string CheckReport::summary() const {
  std::string s = name_ + ": " + std::to_string(checks_) + " checks, ";
  if (!failure_) return s + "ok";
  return s + "FAILED " + failure_->identity + " at (" + std::to_string(failure_->row) + "," +
         std::to_string(failure_->col) + "): " + failure_->lhs + " vs " + failure_->rhs;
}

}  // namespace geronimus
