#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "cgr/error.hpp"
#include "cgr/gf2.hpp"
#include "cgr/layout.hpp"

namespace cgr {

using BitVector = std::vector<std::uint8_t>;
using CellGrid = std::vector<std::vector<std::uint8_t>>;

struct Codeword {
  CodeArray array;
  BitVector info_bits;  // indexed by VarId
  CellGrid cell_values;
};

/// XOR of the cell's member bits; 0 for an empty cell.
inline std::uint8_t cell_value(const Cell& cell, std::span<const std::uint8_t> bits) {
  std::uint8_t v = 0;
  for (VarId m : cell.members) v ^= bits[m];
  return v;
}

inline CellGrid encode_cells(const CodeArray& array, std::span<const std::uint8_t> bits) {
  CellGrid grid(array.row_count(), std::vector<std::uint8_t>(array.column_count(), 0));
  for (std::size_t r = 0; r < array.row_count(); ++r) {
    for (std::size_t c = 0; c < array.column_count(); ++c) grid[r][c] = cell_value(array.at(r, c), bits);
  }
  return grid;
}

inline Codeword encode(const CodeArray& array, std::span<const std::uint8_t> info_bits) {
  if (info_bits.size() != array.variable_count()) {
    throw Error(ErrorCode::kMissingVertex, "expected " + std::to_string(array.variable_count()) +
                                               " information bits, got " + std::to_string(info_bits.size()));
  }
  BitVector bits(info_bits.begin(), info_bits.end());
  for (auto& b : bits) b &= 1U;
  CellGrid cells = encode_cells(array, bits);
  return {array, std::move(bits), std::move(cells)};
}

inline Codeword encode(const CodeArray& array, const std::map<VarId, std::uint8_t>& info_bits) {
  const std::size_t n = array.variable_count();
  BitVector dense(n, 0);
  for (const auto& [v, bit] : info_bits) {
    if (v >= n) throw Error(ErrorCode::kMissingVertex, "unknown vertex id " + std::to_string(v));
    dense[v] = bit;
  }
  if (info_bits.size() != n) {
    throw Error(ErrorCode::kMissingVertex, "information bits cover " + std::to_string(info_bits.size()) + " of " +
                                               std::to_string(n) + " vertex ids");
  }
  return encode(array, std::span<const std::uint8_t>(dense));
}

/// Set of erased column indices, kept sorted and unique.
class ErasurePattern {
 public:
  ErasurePattern() = default;
  explicit ErasurePattern(std::vector<std::size_t> columns) : columns_(std::move(columns)) {
    std::sort(columns_.begin(), columns_.end());
    columns_.erase(std::unique(columns_.begin(), columns_.end()), columns_.end());
  }

  /// Everything except the given survivors.
  static ErasurePattern complement_of(std::span<const std::size_t> survivors, std::size_t columns) {
    std::vector<std::size_t> erased;
    for (std::size_t c = 0; c < columns; ++c) {
      if (std::find(survivors.begin(), survivors.end(), c) == survivors.end()) erased.push_back(c);
    }
    return ErasurePattern(std::move(erased));
  }

  const std::vector<std::size_t>& columns() const { return columns_; }
  std::size_t size() const { return columns_.size(); }
  bool empty() const { return columns_.empty(); }
  bool contains(std::size_t col) const { return std::binary_search(columns_.begin(), columns_.end(), col); }

  void check(std::size_t column_count) const {
    if (!columns_.empty() && columns_.back() >= column_count) {
      throw Error(ErrorCode::kInvalidArgument, "erased column " + std::to_string(columns_.back()) +
                                                   " out of range for " + std::to_string(column_count) + " columns");
    }
  }

  friend bool operator==(const ErasurePattern&, const ErasurePattern&) = default;

 private:
  std::vector<std::size_t> columns_;
};

struct DecodeReport {
  BitVector recovered;
  bool peeling_sufficed = false;
  /// XORs spent rebuilding the erased symbols: one per information bit
  /// recovered by peeling plus (members - 1) per erased parity cell.
  std::size_t xor_count = 0;
  /// Part of xor_count spent on recovering information bits.
  std::size_t info_xor_count = 0;
  /// Row operations of the elimination fallback; not part of xor_count.
  std::size_t elimination_row_ops = 0;
};

namespace detail {

inline Gf2System surviving_system(const CodeArray& array, const ErasurePattern& pattern, const CellGrid* values) {
  Gf2System sys(array.variable_count());
  for (std::size_t r = 0; r < array.row_count(); ++r) {
    for (std::size_t c = 0; c < array.column_count(); ++c) {
      const Cell& cell = array.at(r, c);
      if (cell.is_empty() || pattern.contains(c)) continue;
      sys.add_equation(std::span<const VarId>(cell.members), values ? (*values)[r][c] : std::uint8_t{0});
    }
  }
  return sys;
}

inline void check_grid(const CodeArray& array, const CellGrid& values) {
  if (values.size() != array.row_count()) throw Error(ErrorCode::kInvalidArgument, "cell grid row count mismatch");
  for (const auto& row : values) {
    if (row.size() != array.column_count()) throw Error(ErrorCode::kInvalidArgument, "cell grid column count mismatch");
  }
}

}  // namespace detail

/// Solves the surviving equations by Gaussian elimination alone. Returns
/// nullopt when they do not determine every variable.
inline std::optional<BitVector> decode_by_elimination(const CodeArray& array, const CellGrid& values,
                                                      const ErasurePattern& pattern, std::size_t* row_ops = nullptr) {
  pattern.check(array.column_count());
  detail::check_grid(array, values);
  Gf2System sys = detail::surviving_system(array, pattern, &values);
  auto x = sys.solve();
  if (row_ops) *row_ops = sys.row_ops();
  return x;
}

/// Recovers all information bits from the cells outside the erased columns.
/// Values inside erased columns are never read.
///
/// Primal arrays are peeled first: surviving info cells seed the known set,
/// then any parity cell with exactly one unknown member resolves it. If
/// peeling stalls the whole surviving system goes through elimination. Dual
/// arrays always use elimination.
inline DecodeReport decode(const CodeArray& array, const CellGrid& values, const ErasurePattern& pattern) {
  pattern.check(array.column_count());
  detail::check_grid(array, values);
  const std::size_t n = array.variable_count();

  DecodeReport report;
  std::vector<std::int8_t> known(n, -1);
  std::size_t known_count = 0;

  if (array.role == CodeRole::kPrimal) {
    struct Equation {
      const Cell* cell;
      std::uint8_t value;
      std::size_t unknown;
    };
    std::vector<Equation> eqs;
    std::vector<std::vector<std::size_t>> eqs_of(n);
    std::deque<VarId> fresh;

    for (std::size_t r = 0; r < array.row_count(); ++r) {
      for (std::size_t c = 0; c < array.column_count(); ++c) {
        const Cell& cell = array.at(r, c);
        if (pattern.contains(c) || cell.is_empty()) continue;
        if (cell.is_info()) {
          const VarId v = cell.members[0];
          if (known[v] < 0) {
            known[v] = static_cast<std::int8_t>(values[r][c] & 1U);
            ++known_count;
            fresh.push_back(v);
          }
          continue;
        }
        eqs.push_back({&cell, static_cast<std::uint8_t>(values[r][c] & 1U), cell.members.size()});
        for (VarId m : cell.members) eqs_of[m].push_back(eqs.size() - 1);
      }
    }

    while (!fresh.empty()) {
      const VarId v = fresh.front();
      fresh.pop_front();
      for (std::size_t e : eqs_of[v]) {
        Equation& eq = eqs[e];
        if (--eq.unknown != 1) continue;
        std::uint8_t acc = eq.value;
        std::optional<VarId> target;
        for (VarId m : eq.cell->members) {
          if (known[m] < 0) {
            target = m;
          } else {
            acc ^= static_cast<std::uint8_t>(known[m]);
          }
        }
        // All members may already be known through a queued variable.
        if (!target) continue;
        known[*target] = static_cast<std::int8_t>(acc);
        ++known_count;
        report.info_xor_count += eq.cell->members.size() - 1;
        fresh.push_back(*target);
      }
    }
    report.peeling_sufficed = known_count == n;
  }

  if (report.peeling_sufficed) {
    report.recovered.resize(n);
    for (std::size_t v = 0; v < n; ++v) report.recovered[v] = static_cast<std::uint8_t>(known[v]);
  } else {
    auto x = decode_by_elimination(array, values, pattern, &report.elimination_row_ops);
    if (!x) {
      throw Error(ErrorCode::kUnrecoverable, "surviving columns do not determine every information bit");
    }
    report.recovered = std::move(*x);
  }

  // Surviving cells must agree with the recovered bits.
  for (std::size_t r = 0; r < array.row_count(); ++r) {
    for (std::size_t c = 0; c < array.column_count(); ++c) {
      if (pattern.contains(c)) continue;
      if (cell_value(array.at(r, c), report.recovered) != (values[r][c] & 1U)) {
        throw Error(ErrorCode::kInvalidArgument, "surviving cells are inconsistent at row " + std::to_string(r) +
                                                     ", column " + std::to_string(c));
      }
    }
  }

  report.xor_count = report.info_xor_count;
  for (std::size_t r = 0; r < array.row_count(); ++r) {
    for (std::size_t c : pattern.columns()) {
      const Cell& cell = array.at(r, c);
      if (cell.is_parity()) report.xor_count += cell.members.size() - 1;
    }
  }
  return report;
}

/// Outcome of an exhaustive erasure check. witness is the first failing
/// pattern in enumeration order.
struct MdsVerdict {
  bool mds = true;
  std::optional<ErasurePattern> witness;
  std::size_t patterns_checked = 0;
};

/// Checks every choice of `survivors` surviving columns (lexicographic order)
/// for full rank over GF(2).
inline MdsVerdict verify_survivor_sets(const CodeArray& array, std::size_t survivors) {
  const std::size_t cols = array.column_count();
  MdsVerdict verdict;
  if (survivors > cols) return verdict;
  std::vector<std::size_t> pick(survivors);
  for (std::size_t i = 0; i < survivors; ++i) pick[i] = i;
  while (true) {
    const ErasurePattern erased = ErasurePattern::complement_of(pick, cols);
    Gf2System sys = detail::surviving_system(array, erased, nullptr);
    ++verdict.patterns_checked;
    if (sys.rank() < array.variable_count()) {
      verdict.mds = false;
      verdict.witness = erased;
      return verdict;
    }
    // next combination
    std::size_t i = survivors;
    while (i > 0 && pick[i - 1] == cols - survivors + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t k = i; k < survivors; ++k) pick[k] = pick[k - 1] + 1;
  }
  return verdict;
}

/// Any two surviving columns determine all v1*v2 information bits.
inline MdsVerdict verify_mds(const CodeArray& array) {
  if (array.role != CodeRole::kPrimal) throw Error(ErrorCode::kInvalidArgument, "verify_mds expects a primal array");
  return verify_survivor_sets(array, 2);
}

}  // namespace cgr
