#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "cgr/error.hpp"
#include "cgr/factorization.hpp"
#include "cgr/graph.hpp"

namespace cgr {

/// Index of an information variable: a vertex id in a primal array, an edge
/// id in a dual array.
using VarId = std::uint32_t;

enum class CellKind : std::uint8_t { kInfo, kParity, kEmpty };

struct Cell {
  CellKind kind = CellKind::kEmpty;
  std::vector<VarId> members;  // ascending; one entry for kInfo, none for kEmpty

  static Cell info(VarId v) { return {CellKind::kInfo, {v}}; }
  static Cell parity(std::vector<VarId> vars) {
    std::sort(vars.begin(), vars.end());
    return {CellKind::kParity, std::move(vars)};
  }
  static Cell parity(Edge e) { return {CellKind::kParity, {e.a, e.b}}; }
  static Cell empty() { return {}; }

  bool is_info() const { return kind == CellKind::kInfo; }
  bool is_parity() const { return kind == CellKind::kParity; }
  bool is_empty() const { return kind == CellKind::kEmpty; }

  friend bool operator==(const Cell&, const Cell&) = default;
};

struct VertexRow {
  std::size_t ring;
  friend bool operator==(const VertexRow&, const VertexRow&) = default;
};
struct RingEdgeRow {
  std::size_t ring;
  friend bool operator==(const RingEdgeRow&, const RingEdgeRow&) = default;
};
struct InterRingRow {
  std::size_t i;
  std::size_t j;
  friend bool operator==(const InterRingRow&, const InterRingRow&) = default;
};
using RowKind = std::variant<VertexRow, RingEdgeRow, InterRingRow>;

/// Per-row left cyclic shift amounts.
struct OffsetVector {
  std::vector<std::uint32_t> values;

  std::size_t size() const { return values.size(); }
  std::uint32_t operator[](std::size_t i) const { return values[i]; }

  /// Entries 0..v1-1 are 0..v1-1 and entries v1..2v1-1 all equal v1.
  bool has_canonical_prefix(std::size_t v1) const {
    if (values.size() < 2 * v1) return false;
    for (std::size_t j = 0; j < v1; ++j) {
      if (values[j] != j || values[v1 + j] != v1) return false;
    }
    return true;
  }

  std::span<const std::uint32_t> inter_ring(std::size_t v1) const {
    return std::span<const std::uint32_t>(values).subspan(std::min(values.size(), 2 * v1));
  }

  friend bool operator==(const OffsetVector&, const OffsetVector&) = default;
};

enum class CodeRole : std::uint8_t { kPrimal, kDual };

/// rows x columns grid of cells; columns are the storage symbols.
struct CodeArray {
  CgrParams params;
  CodeRole role = CodeRole::kPrimal;
  std::vector<std::vector<Cell>> rows;
  OffsetVector offsets;
  std::vector<RowKind> row_kinds;

  std::size_t row_count() const { return rows.size(); }
  std::size_t column_count() const { return params.columns(); }
  const Cell& at(std::size_t row, std::size_t col) const { return rows[row][col]; }

  /// Number of information variables the cells range over.
  std::size_t variable_count() const {
    return role == CodeRole::kPrimal ? params.vertex_count() : params.edge_count();
  }

  friend bool operator==(const CodeArray&, const CodeArray&) = default;
};

/// Row kinds in array order: vertex rows, ring-edge rows, inter-ring rows (i,j) lexicographic.
inline std::vector<RowKind> canonical_row_kinds(const CgrParams& params) {
  std::vector<RowKind> kinds;
  for (std::size_t j = 0; j < params.v1(); ++j) kinds.emplace_back(VertexRow{j});
  for (std::size_t j = 0; j < params.v1(); ++j) kinds.emplace_back(RingEdgeRow{j});
  for (std::size_t i = 0; i < params.v1(); ++i) {
    for (std::size_t j = i + 1; j < params.v1(); ++j) kinds.emplace_back(InterRingRow{i, j});
  }
  return kinds;
}

inline CodeArray map_unshifted(const CgrGraph& graph) {
  const CgrParams& p = graph.params();
  CodeArray out{p, CodeRole::kPrimal, {}, {}, canonical_row_kinds(p)};
  for (const auto& ring : graph.vertex_sets()) {
    std::vector<Cell> row;
    for (VertexId v : ring) row.push_back(Cell::info(v));
    out.rows.push_back(std::move(row));
  }
  for (const auto& ring : graph.ring_edges()) {
    std::vector<Cell> row;
    for (Edge e : ring) row.push_back(Cell::parity(e));
    out.rows.push_back(std::move(row));
  }
  for (const auto& [pair, set] : graph.inter_ring_edges()) {
    std::vector<Cell> row;
    for (Edge e : set) row.push_back(Cell::parity(e));
    out.rows.push_back(std::move(row));
  }
  out.offsets.values.assign(out.rows.size(), 0);
  return out;
}

inline void check_offsets(const CgrParams& params, const OffsetVector& offsets) {
  if (offsets.size() != params.rows()) {
    throw Error(ErrorCode::kLengthMismatch, "offset vector needs " + std::to_string(params.rows()) +
                                                " entries, got " + std::to_string(offsets.size()));
  }
  for (std::size_t r = 0; r < offsets.size(); ++r) {
    if (offsets[r] >= params.v2()) {
      throw Error(ErrorCode::kOffsetOutOfRange, "offset " + std::to_string(offsets[r]) + " at row " +
                                                    std::to_string(r) + " not in [0, " +
                                                    std::to_string(params.v2() - 1) + "]");
    }
  }
}

/// Rotates row r left by offsets[r]. Shifts compose: the result records
/// (array.offsets + offsets) mod v2.
inline CodeArray apply_offsets(const CodeArray& array, const OffsetVector& offsets) {
  check_offsets(array.params, offsets);
  const std::size_t v2 = array.params.v2();
  CodeArray out = array;
  for (std::size_t r = 0; r < out.rows.size(); ++r) {
    auto& row = out.rows[r];
    std::rotate(row.begin(), row.begin() + offsets[r], row.end());
    out.offsets.values[r] = static_cast<std::uint32_t>((array.offsets[r] + offsets[r]) % v2);
  }
  return out;
}

/// Rotates every row left by the same amount: a relabeling of the columns.
inline CodeArray rotate_columns(const CodeArray& array, std::uint32_t shift) {
  return apply_offsets(array, OffsetVector{std::vector<std::uint32_t>(array.row_count(), shift % array.params.v2())});
}

inline CodeArray make_code(const CgrParams& params, const OffsetVector& offsets) {
  return apply_offsets(map_unshifted(build_cgr(params)), offsets);
}

/// Canonical prefix (0..v1-1, then v1 repeated v1 times) followed by
/// the inter-ring offsets read off the factorization.
///
/// `pi` maps each finite factor center c to pi[c]; the factor centered at
/// PosInf always gets v1 + 2. Edges touching a sentinel are dropped.
inline OffsetVector derive_offsets(const Factorization& fact, std::span<const std::uint32_t> pi) {
  const std::size_t v1 = fact.v1;
  if (pi.size() != v1) {
    throw Error(ErrorCode::kInvalidPermutation,
                "pi needs " + std::to_string(v1) + " entries, got " + std::to_string(pi.size()));
  }
  std::vector<bool> used(v1, false);
  for (auto x : pi) {
    if (x >= v1 || used[x]) throw Error(ErrorCode::kInvalidPermutation, "pi is not a bijection onto 0..v1-1");
    used[x] = true;
  }

  std::vector<std::uint32_t> pair_offset(v1 * v1, 0);
  for (const Factor& f : fact.factors) {
    const std::uint32_t offset =
        f.center.kind == Label::Kind::kPosInf ? static_cast<std::uint32_t>(v1 + 2) : pi[f.center.value];
    for (const LabelPair& e : f.diagonals()) {
      if (e.touches_sentinel()) continue;
      pair_offset[e.a.value * v1 + e.b.value] = offset;
    }
  }

  OffsetVector out;
  for (std::uint32_t j = 0; j < v1; ++j) out.values.push_back(j);
  for (std::size_t j = 0; j < v1; ++j) out.values.push_back(static_cast<std::uint32_t>(v1));
  for (std::size_t i = 0; i < v1; ++i) {
    for (std::size_t j = i + 1; j < v1; ++j) out.values.push_back(pair_offset[i * v1 + j]);
  }
  return out;
}

inline std::vector<std::uint32_t> identity_pi(std::size_t v1) {
  std::vector<std::uint32_t> pi(v1);
  for (std::uint32_t i = 0; i < v1; ++i) pi[i] = i;
  return pi;
}

}  // namespace cgr
