#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace geronimus {

// Base of every library error. Regularity failures carry the level at which
// the construction broke down.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  IndexOutOfRange(std::size_t index, std::size_t available)
      : Error("IndexOutOfRange(" + std::to_string(index) + "): only " +
              std::to_string(available) + " values available"),
        index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  explicit SingularMatrix(std::size_t column)
      : Error("SingularMatrix: no nonzero pivot in column " + std::to_string(column)),
        column_(column) {}
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t column_;
};

// Level-tagged failure: the k-th leading principal minor of a Gram matrix is zero.
class NotRegular : public Error {
 public:
  explicit NotRegular(std::size_t order)
      : Error("NotRegular(" + std::to_string(order) + ")"), order_(order) {}
  std::size_t order() const noexcept { return order_; }

 private:
  std::size_t order_;
};

class DegenerateDeterminant : public Error {
 public:
  explicit DegenerateDeterminant(std::size_t level)
      : Error("DegenerateDeterminant(" + std::to_string(level) + ")"), level_(level) {}
  std::size_t level() const noexcept { return level_; }

 private:
  std::size_t level_;
};

// The transform certificate (d*_n or d**_n) and the n-th leading minor of the
// transformed Gram matrix disagree on whether level n is regular.
class CertificateDivergence : public Error {
 public:
  explicit CertificateDivergence(std::size_t level)
      : Error("CertificateDivergence(" + std::to_string(level) +
              "): certificate and Gram minor disagree on regularity"),
        level_(level) {}
  std::size_t level() const noexcept { return level_; }

 private:
  std::size_t level_;
};

class ExpansionResidual : public Error {
 public:
  using Error::Error;
};

class ZeroE : public Error {
 public:
  explicit ZeroE(std::size_t n)
      : Error("ZeroE(" + std::to_string(n) + ")"), n_(n) {}
  std::size_t n() const noexcept { return n_; }

 private:
  std::size_t n_;
};

class MismatchAt : public Error {
 public:
  MismatchAt(std::string identity, std::size_t row, std::size_t col, std::string lhs,
             std::string rhs)
      : Error("MismatchAt(" + std::to_string(row) + "," + std::to_string(col) + ") in " +
              identity + ": " + lhs + " != " + rhs),
        row_(row),
        col_(col) {}
  std::size_t row() const noexcept { return row_; }
  std::size_t col() const noexcept { return col_; }

 private:
  std::size_t row_;
  std::size_t col_;
};

class ToleranceExceeded : public Error {
 public:
  ToleranceExceeded(std::string identity, std::string residual)
      : Error("ToleranceExceeded in " + identity + ": max residual " + residual) {}
};

// Raised when a positive-definiteness precondition (square roots of norms) fails.
class NotPositiveDefinite : public Error {
 public:
  using Error::Error;
};

// Two independent computational routes disagreed. Always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace geronimus
