#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cgr/codec.hpp"
#include "cgr/error.hpp"
#include "cgr/gf2.hpp"
#include "cgr/layout.hpp"

namespace cgr {

/// Parent column order that lays out the contraction of CGR(K_4, C_7)
/// under (0,1,2,3,4,4,4,4,2,3,6,6,0,1) as the usual (5,2) B_5 array.
inline constexpr std::array<std::size_t, 5> kBCode5Order = {0, 6, 5, 4, 1};

/// B-code obtained by keeping the first vertex of every ring and the edges
/// among those vertices. Each column lists its cells in parent-row order.
struct ContractedArray {
  std::size_t v1 = 0;
  std::size_t v2 = 0;
  std::vector<VertexId> retained;  // j * v2 for j = 0..v1-1
  std::vector<std::vector<Cell>> columns;
  std::vector<std::size_t> source_column_index;

  std::size_t column_count() const { return columns.size(); }
  std::size_t row_count() const { return columns.empty() ? 0 : columns.front().size(); }

  /// Row r holds the r-th cell of every column.
  std::vector<std::vector<Cell>> grid() const {
    std::vector<std::vector<Cell>> out(row_count());
    for (std::size_t r = 0; r < out.size(); ++r) {
      for (const auto& col : columns) out[r].push_back(col.at(r));
    }
    return out;
  }
};

inline std::vector<VertexId> ring_leaders(const CgrParams& params) {
  std::vector<VertexId> out;
  for (std::size_t j = 0; j < params.v1(); ++j) out.push_back(static_cast<VertexId>(j * params.v2()));
  return out;
}

/// Same grid with every cell outside the ring-leader subgraph set to Empty.
inline CodeArray puncture_to_base(const CodeArray& array) {
  if (array.role != CodeRole::kPrimal) throw Error(ErrorCode::kInvalidArgument, "contraction needs a primal array");
  const std::size_t v2 = array.params.v2();
  auto leader = [v2](VarId v) { return v % v2 == 0; };
  CodeArray out = array;
  for (auto& row : out.rows) {
    for (Cell& cell : row) {
      if (cell.is_empty()) continue;
      if (!std::all_of(cell.members.begin(), cell.members.end(), leader)) cell = Cell::empty();
    }
  }
  return out;
}

/// Punctures, drops empty columns and compacts each column vertically.
///
/// Columns come out in ascending parent-column order unless column_order
/// lists the nonempty parent columns in the desired order. Throws
/// CONTRACT_SHAPE unless exactly v1+1 columns of v1/2 cells remain.
inline ContractedArray contract(const CodeArray& array, std::span<const std::size_t> column_order = {}) {
  const CodeArray punctured = puncture_to_base(array);
  const std::size_t v1 = array.params.v1();

  ContractedArray out;
  out.v1 = v1;
  out.v2 = array.params.v2();
  out.retained = ring_leaders(array.params);
  for (std::size_t c = 0; c < punctured.column_count(); ++c) {
    std::vector<Cell> col;
    for (std::size_t r = 0; r < punctured.row_count(); ++r) {
      if (!punctured.at(r, c).is_empty()) col.push_back(punctured.at(r, c));
    }
    if (col.empty()) continue;
    out.columns.push_back(std::move(col));
    out.source_column_index.push_back(c);
  }

  bool balanced = out.columns.size() == v1 + 1;
  for (const auto& col : out.columns) balanced = balanced && col.size() == v1 / 2;
  if (!balanced) {
    std::string shape;
    for (std::size_t i = 0; i < out.columns.size(); ++i) {
      shape += (i ? "," : "") + std::to_string(out.source_column_index[i]) + ":" +
               std::to_string(out.columns[i].size());
    }
    throw Error(ErrorCode::kContractShape, "expected " + std::to_string(v1 + 1) + " columns of " +
                                               std::to_string(v1 / 2) + " cells, got {" + shape + "}");
  }

  if (!column_order.empty()) {
    std::vector<std::size_t> sorted(column_order.begin(), column_order.end());
    std::sort(sorted.begin(), sorted.end());
    if (sorted != out.source_column_index) {
      throw Error(ErrorCode::kInvalidPermutation, "column order must permute the nonempty parent columns");
    }
    ContractedArray reordered = out;
    for (std::size_t i = 0; i < column_order.size(); ++i) {
      const auto at = std::find(out.source_column_index.begin(), out.source_column_index.end(), column_order[i]);
      const auto src = static_cast<std::size_t>(at - out.source_column_index.begin());
      reordered.columns[i] = out.columns[src];
      reordered.source_column_index[i] = column_order[i];
    }
    out = std::move(reordered);
  }
  return out;
}

/// Solves for the retained bits from the cells of the surviving columns.
/// Variables are indexed by ring (vertex j * v2 is variable j).
inline std::optional<BitVector> decode_contracted(const ContractedArray& c, std::span<const std::size_t> survivors,
                                                  const std::vector<std::vector<std::uint8_t>>& column_values) {
  Gf2System sys(c.v1);
  for (std::size_t s : survivors) {
    for (std::size_t k = 0; k < c.columns.at(s).size(); ++k) {
      std::vector<VarId> local;
      for (VarId m : c.columns[s][k].members) local.push_back(static_cast<VarId>(m / c.v2));
      sys.add_equation(std::span<const VarId>(local), column_values.at(s).at(k));
    }
  }
  return sys.solve();
}

/// Every pair of columns determines all v1 retained bits.
inline bool verify_contracted_mds(const ContractedArray& c) {
  if (c.column_count() < 2) {
    throw Error(ErrorCode::kInvalidArgument, "a contracted array needs at least two columns");
  }
  const std::vector<std::vector<std::uint8_t>> zeros = [&] {
    std::vector<std::vector<std::uint8_t>> z;
    for (const auto& col : c.columns) z.emplace_back(col.size(), 0);
    return z;
  }();
  for (std::size_t a = 0; a < c.column_count(); ++a) {
    for (std::size_t b = a + 1; b < c.column_count(); ++b) {
      const std::array<std::size_t, 2> pair{a, b};
      if (!decode_contracted(c, pair, zeros)) return false;
    }
  }
  return true;
}

}  // namespace cgr
