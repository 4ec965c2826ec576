#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "geronimus/dense_matrix.hpp"
#include "geronimus/errors.hpp"

namespace geronimus {

// Square n x n matrix with `lo` sub- and `hi` super-diagonals, stored by
// diagonal. Entries outside the band read as zero and cannot be written.
// Diagonal offset d = j - i ranges over [-lo, hi]; diagonal d holds n - |d|
// entries indexed by min(i, j).
template <class T>
class BandedMatrix {
 public:
  BandedMatrix() = default;
  BandedMatrix(std::size_t n, std::size_t lo, std::size_t hi, const T& zero = T{})
      : n_(n),
        lo_(n == 0 ? 0 : std::min(lo, n - 1)),
        hi_(n == 0 ? 0 : std::min(hi, n - 1)),
        zero_(zero) {
    diags_.resize(lo_ + hi_ + 1);
    for (long d = -static_cast<long>(lo_); d <= static_cast<long>(hi_); ++d) {
      diags_[slot(d)].assign(n_ - static_cast<std::size_t>(d < 0 ? -d : d), zero_);
    }
  }

  std::size_t size() const noexcept { return n_; }
  std::size_t lower_bandwidth() const noexcept { return lo_; }
  std::size_t upper_bandwidth() const noexcept { return hi_; }
  const T& zero() const noexcept { return zero_; }

  bool in_band(std::size_t i, std::size_t j) const noexcept {
    return i < n_ && j < n_ && (j <= i || j - i <= hi_) && (i <= j || i - j <= lo_);
  }

  const T& operator()(std::size_t i, std::size_t j) const {
    check_index(i, j);
    if (!in_band(i, j)) return zero_;
    return diags_[slot(offset(i, j))][std::min(i, j)];
  }

  void set(std::size_t i, std::size_t j, const T& value) {
    check_index(i, j);
    if (!in_band(i, j)) {
      throw DimensionMismatch("BandedMatrix: (" + std::to_string(i) + "," + std::to_string(j) +
                              ") outside declared band");
    }
    diags_[slot(offset(i, j))][std::min(i, j)] = value;
  }

  // Diagonal at offset d = j - i.
  const std::vector<T>& diagonal(long d) const {
    if (d < -static_cast<long>(lo_) || d > static_cast<long>(hi_)) {
      throw DimensionMismatch("BandedMatrix: diagonal outside band");
    }
    return diags_[slot(d)];
  }

  BandedMatrix transpose() const {
    BandedMatrix out(n_, hi_, lo_, zero_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = band_begin(i); j < band_end(i); ++j) out.set(j, i, (*this)(i, j));
    return out;
  }

  // Leading k x k block with the same declared bandwidths.
  BandedMatrix leading(std::size_t k) const {
    BandedMatrix out(k, lo_, hi_, zero_);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = band_begin(i); j < std::min(band_end(i), k); ++j) out.set(i, j, (*this)(i, j));
    return out;
  }

  DenseMatrix<T> to_dense() const {
    DenseMatrix<T> out(n_, n_, zero_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = band_begin(i); j < band_end(i); ++j) out(i, j) = (*this)(i, j);
    return out;
  }

  bool is_symmetric() const {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = band_begin(i); j < band_end(i); ++j)
        if (!((*this)(i, j) == (*this)(j, i))) return false;
    return true;
  }

  // Column range [begin, end) of row i that lies inside the band.
  std::size_t band_begin(std::size_t i) const noexcept { return i > lo_ ? i - lo_ : 0; }
  std::size_t band_end(std::size_t i) const noexcept { return std::min(n_, i + hi_ + 1); }

 private:
  static long offset(std::size_t i, std::size_t j) {
    return static_cast<long>(j) - static_cast<long>(i);
  }
  std::size_t slot(long d) const { return static_cast<std::size_t>(d + static_cast<long>(lo_)); }
  void check_index(std::size_t i, std::size_t j) const {
    if (i >= n_ || j >= n_) {
      throw IndexOutOfRange(std::max(i, j), n_);
    }
  }

  std::size_t n_ = 0;
  std::size_t lo_ = 0;
  std::size_t hi_ = 0;
  T zero_{};
  std::vector<std::vector<T>> diags_;
};

// Product of banded matrices; bandwidths add (clipped to n - 1).
template <class T>
BandedMatrix<T> band_mul(const BandedMatrix<T>& a, const BandedMatrix<T>& b) {
  if (a.size() != b.size()) throw DimensionMismatch("band_mul: dimension mismatch");
  const std::size_t n = a.size();
  BandedMatrix<T> out(n, a.lower_bandwidth() + b.lower_bandwidth(),
                      a.upper_bandwidth() + b.upper_bandwidth(), a.zero());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = out.band_begin(i); j < out.band_end(i); ++j) {
      const std::size_t hb = b.upper_bandwidth();
      const std::size_t k0 = std::max(a.band_begin(i), j >= hb ? j - hb : std::size_t{0});
      const std::size_t k1 = std::min(a.band_end(i), std::min(n, j + b.lower_bandwidth() + 1));
      T acc = a.zero();
      bool any = false;
      for (std::size_t k = k0; k < k1; ++k) {
        if (!b.in_band(k, j)) continue;
        acc = any ? acc + a(i, k) * b(k, j) : a(i, k) * b(k, j);
        any = true;
      }
      if (any) out.set(i, j, acc);
    }
  }
  return out;
}

}  // namespace geronimus
