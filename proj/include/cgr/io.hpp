#pragma once

#include <cstddef>
#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "cgr/bcode.hpp"
#include "cgr/error.hpp"
#include "cgr/factorization.hpp"
#include "cgr/layout.hpp"

namespace cgr {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kFormatVersion = "1";
inline constexpr std::string_view kXor = "⊕";

inline const char* kind_name(CellKind kind) {
  switch (kind) {
    case CellKind::kInfo: return "info";
    case CellKind::kParity: return "parity";
    case CellKind::kEmpty: return "empty";
  }
  return "empty";
}

inline Json cell_to_json(const Cell& cell) {
  Json j;
  j["kind"] = kind_name(cell.kind);
  j["vertices"] = cell.members;
  return j;
}

inline Json to_json(const CodeArray& array) {
  Json j;
  j["version"] = kFormatVersion;
  j["role"] = array.role == CodeRole::kPrimal ? "primal" : "dual";
  j["v1"] = array.params.v1();
  j["v2"] = array.params.v2();
  j["offset_vector"] = array.offsets.values;
  Json rows = Json::array();
  for (const auto& row : array.rows) {
    Json cells = Json::array();
    for (const Cell& c : row) cells.push_back(cell_to_json(c));
    rows.push_back(std::move(cells));
  }
  j["rows"] = std::move(rows);
  return j;
}

/// Canonical file form: compact JSON, fixed key order, trailing newline.
inline std::string serialize(const CodeArray& array) { return to_json(array).dump() + "\n"; }

namespace detail {

inline Cell cell_from_json(const Json& j, std::size_t variables) {
  const std::string kind = j.at("kind").get<std::string>();
  auto members = j.at("vertices").get<std::vector<VarId>>();
  for (VarId m : members) {
    if (m >= variables) throw Error(ErrorCode::kParse, "variable id " + std::to_string(m) + " out of range");
  }
  if (kind == "info") {
    if (members.size() != 1) throw Error(ErrorCode::kParse, "info cell must list one variable");
    return Cell::info(members[0]);
  }
  if (kind == "parity") {
    if (members.empty()) throw Error(ErrorCode::kParse, "parity cell must list variables");
    return Cell::parity(std::move(members));
  }
  if (kind == "empty") {
    if (!members.empty()) throw Error(ErrorCode::kParse, "empty cell cannot list variables");
    return Cell::empty();
  }
  throw Error(ErrorCode::kParse, "unknown cell kind '" + kind + "'");
}

}  // namespace detail

inline CodeArray from_json(const Json& j) {
  try {
    if (j.at("version").get<std::string>() != kFormatVersion) {
      throw Error(ErrorCode::kParse, "unsupported format version " + j.at("version").dump());
    }
    const std::string role = j.at("role").get<std::string>();
    if (role != "primal" && role != "dual") throw Error(ErrorCode::kParse, "unknown role '" + role + "'");
    const CgrParams params = CgrParams::make(j.at("v1").get<std::size_t>(), j.at("v2").get<std::size_t>());
    CodeArray array{params, role == "primal" ? CodeRole::kPrimal : CodeRole::kDual, {}, {}, canonical_row_kinds(params)};
    array.offsets.values = j.at("offset_vector").get<std::vector<std::uint32_t>>();
    check_offsets(params, array.offsets);

    const Json& rows = j.at("rows");
    if (!rows.is_array() || rows.size() != params.rows()) {
      throw Error(ErrorCode::kParse, "expected " + std::to_string(params.rows()) + " rows");
    }
    const std::size_t vars = array.variable_count();
    for (const Json& row : rows) {
      if (!row.is_array() || row.size() != params.columns()) {
        throw Error(ErrorCode::kParse, "expected " + std::to_string(params.columns()) + " cells per row");
      }
      std::vector<Cell> cells;
      for (const Json& c : row) cells.push_back(detail::cell_from_json(c, vars));
      array.rows.push_back(std::move(cells));
    }
    return array;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, e.what());
  }
}

inline CodeArray deserialize(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, e.what());
  }
  return from_json(j);
}

inline std::string render_cell(const Cell& cell, CodeRole role) {
  if (cell.is_empty()) return "-";
  const std::string prefix = role == CodeRole::kDual ? "e" : "";
  std::string out;
  for (std::size_t i = 0; i < cell.members.size(); ++i) {
    if (i) out += " " + std::string(kXor) + " ";
    out += prefix + std::to_string(cell.members[i]);
  }
  return out;
}

inline std::string render_grid(const std::vector<std::vector<Cell>>& rows, CodeRole role) {
  std::string out;
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += '\t';
      out += render_cell(row[c], role);
    }
    out += '\n';
  }
  return out;
}

inline std::string join(const std::vector<std::uint32_t>& values, char sep = ',') {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

/// Header, offsets line, then one tab-separated line per row, cells
/// written the way the arrays are usually printed ("4 ⊕ 9").
inline std::string render_text(const CodeArray& array) {
  std::ostringstream os;
  os << "CGR(K_" << array.params.v1() << ", C_" << array.params.v2() << ") "
     << (array.role == CodeRole::kPrimal ? "primal" : "dual") << ' ' << array.row_count() << 'x'
     << array.column_count() << '\n';
  os << "offsets: " << join(array.offsets.values) << '\n';
  os << render_grid(array.rows, array.role);
  return os.str();
}

inline Json to_json(const ContractedArray& c) {
  Json j;
  j["version"] = kFormatVersion;
  j["v1"] = c.v1;
  j["v2"] = c.v2;
  j["retained"] = c.retained;
  j["source_column_index"] = c.source_column_index;
  Json cols = Json::array();
  for (const auto& col : c.columns) {
    Json cells = Json::array();
    for (const Cell& cell : col) cells.push_back(cell_to_json(cell));
    cols.push_back(std::move(cells));
  }
  j["columns"] = std::move(cols);
  return j;
}

inline std::string render_text(const ContractedArray& c) {
  std::ostringstream os;
  os << "B-code from CGR(K_" << c.v1 << ", C_" << c.v2 << ") " << c.row_count() << 'x' << c.column_count() << '\n';
  os << "source columns: " << join(std::vector<std::uint32_t>(c.source_column_index.begin(), c.source_column_index.end()))
     << '\n';
  os << render_grid(c.grid(), CodeRole::kPrimal);
  return os.str();
}

// ---- flag parsing helpers shared by the CLI and tests ----

inline std::vector<std::uint32_t> parse_uint_list(std::string_view text) {
  std::vector<std::uint32_t> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find(',', start), text.size());
    const std::string item(text.substr(start, end - start));
    try {
      std::size_t used = 0;
      const unsigned long v = std::stoul(item, &used);
      if (used != item.size() || item.empty() || item[0] == '-') throw std::invalid_argument(item);
      out.push_back(static_cast<std::uint32_t>(v));
    } catch (const std::exception&) {
      throw Error(ErrorCode::kParse, "not a non-negative integer: '" + item + "'");
    }
    start = end + 1;
  }
  return out;
}

/// Comma-separated rim labels; "inf" or "+inf" names PosInf.
inline std::vector<Label> parse_placement(std::string_view text) {
  std::vector<Label> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find(',', start), text.size());
    const std::string item(text.substr(start, end - start));
    if (item == "inf" || item == "+inf") {
      out.push_back(Label::pos_inf());
    } else {
      out.push_back(Label::finite(parse_uint_list(item).at(0)));
    }
    start = end + 1;
  }
  return out;
}

/// Hex digits, most significant bit first: variable k is bit 3 - k%4 of digit k/4.
inline std::vector<std::uint8_t> parse_hex_bits(std::string_view hex, std::size_t n) {
  if (hex.size() != (n + 3) / 4) {
    throw Error(ErrorCode::kParse, "expected " + std::to_string((n + 3) / 4) + " hex digits for " + std::to_string(n) +
                                       " bits, got " + std::to_string(hex.size()));
  }
  std::vector<std::uint8_t> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    const char ch = hex[k / 4];
    int digit = 0;
    if (ch >= '0' && ch <= '9') digit = ch - '0';
    else if (ch >= 'a' && ch <= 'f') digit = ch - 'a' + 10;
    else if (ch >= 'A' && ch <= 'F') digit = ch - 'A' + 10;
    else throw Error(ErrorCode::kParse, std::string("bad hex digit '") + ch + "'");
    out[k] = static_cast<std::uint8_t>((digit >> (3 - k % 4)) & 1);
  }
  return out;
}

inline std::string to_hex_bits(const std::vector<std::uint8_t>& bits) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::vector<int> nibbles((bits.size() + 3) / 4, 0);
  for (std::size_t k = 0; k < bits.size(); ++k) {
    if (bits[k] & 1U) nibbles[k / 4] |= 1 << (3 - k % 4);
  }
  std::string out;
  for (int n : nibbles) out += kDigits[n];
  return out;
}

}  // namespace cgr
