#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace cgr {

/// Linear system over GF(2): each equation is an XOR of unknowns equal to a bit.
///
/// Rows are packed into 64-bit words with the right-hand side stored in the
/// bit just past the last unknown. eliminate() brings the matrix to reduced
/// row echelon form in place.
class Gf2System {
 public:
  explicit Gf2System(std::size_t unknowns)
      : unknowns_(unknowns), words_((unknowns + 1 + 63) / 64) {}

  std::size_t unknowns() const { return unknowns_; }
  std::size_t equations() const { return rows_; }

  template <typename Index>
  void add_equation(std::span<const Index> members, std::uint8_t rhs) {
    data_.resize(data_.size() + words_, 0);
    std::uint64_t* row = data_.data() + rows_ * words_;
    for (Index m : members) {
      const auto bit = static_cast<std::size_t>(m);
      row[bit / 64] ^= std::uint64_t{1} << (bit % 64);
    }
    if (rhs & 1U) {
      row[unknowns_ / 64] ^= std::uint64_t{1} << (unknowns_ % 64);
    }
    ++rows_;
    eliminated_ = false;
  }

  std::size_t rank() {
    eliminate();
    return pivots_.size();
  }

  bool consistent() {
    eliminate();
    for (std::size_t r = pivots_.size(); r < rows_; ++r) {
      if (bit(r, unknowns_)) return false;
    }
    return true;
  }

  /// The unique solution, or nullopt when the system is rank deficient or inconsistent.
  std::optional<std::vector<std::uint8_t>> solve() {
    eliminate();
    if (pivots_.size() != unknowns_ || !consistent()) return std::nullopt;
    std::vector<std::uint8_t> x(unknowns_, 0);
    for (std::size_t r = 0; r < pivots_.size(); ++r) {
      x[pivots_[r]] = bit(r, unknowns_) ? 1 : 0;
    }
    return x;
  }

  /// Row XORs performed by the last elimination.
  std::size_t row_ops() const { return row_ops_; }

 private:
  bool bit(std::size_t row, std::size_t col) const {
    return (data_[row * words_ + col / 64] >> (col % 64)) & 1U;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    std::swap_ranges(data_.begin() + static_cast<std::ptrdiff_t>(a * words_),
                     data_.begin() + static_cast<std::ptrdiff_t>((a + 1) * words_),
                     data_.begin() + static_cast<std::ptrdiff_t>(b * words_));
  }

  void xor_into(std::size_t dst, std::size_t src) {
    std::uint64_t* d = data_.data() + dst * words_;
    const std::uint64_t* s = data_.data() + src * words_;
    for (std::size_t w = 0; w < words_; ++w) d[w] ^= s[w];
    ++row_ops_;
  }

  void eliminate() {
    if (eliminated_) return;
    pivots_.clear();
    row_ops_ = 0;
    std::size_t next = 0;
    for (std::size_t col = 0; col < unknowns_ && next < rows_; ++col) {
      std::size_t pivot = next;
      while (pivot < rows_ && !bit(pivot, col)) ++pivot;
      if (pivot == rows_) continue;
      swap_rows(next, pivot);
      for (std::size_t r = 0; r < rows_; ++r) {
        if (r != next && bit(r, col)) xor_into(r, next);
      }
      pivots_.push_back(col);
      ++next;
    }
    eliminated_ = true;
  }

  std::size_t unknowns_;
  std::size_t words_;
  std::size_t rows_ = 0;
  std::vector<std::uint64_t> data_;
  std::vector<std::size_t> pivots_;
  std::size_t row_ops_ = 0;
  bool eliminated_ = false;
};

}  // namespace cgr
