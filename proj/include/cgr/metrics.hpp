#pragma once

#include <cstddef>
#include <cstdint>

#include <boost/rational.hpp>

#include "cgr/codec.hpp"
#include "cgr/graph.hpp"
#include "cgr/layout.hpp"

namespace cgr {

using Rational = boost::rational<std::int64_t>;

/// (v1 + 1) parity updates per information bit, averaged over the v1*v2
/// information bits.
inline Rational update_complexity(const CgrParams& params) {
  return Rational(static_cast<std::int64_t>(params.v1() + 1), static_cast<std::int64_t>(params.v1() * params.v2()));
}

/// Same quantity written in v2 alone: (v2 - 2) / (v2 (v2 - 3)).
inline Rational update_complexity_in_v2(const CgrParams& params) {
  const auto v2 = static_cast<std::int64_t>(params.v2());
  return Rational(v2 - 2, v2 * (v2 - 3));
}

/// Average number of parity cells containing each information variable,
/// counted on an actual array.
inline Rational parity_updates_per_bit(const CodeArray& array) {
  std::int64_t memberships = 0;
  std::int64_t infos = 0;
  for (const auto& row : array.rows) {
    for (const Cell& cell : row) {
      if (cell.is_parity()) memberships += static_cast<std::int64_t>(cell.members.size());
      if (cell.is_info()) ++infos;
    }
  }
  return infos == 0 ? Rational(0) : Rational(memberships, infos);
}

/// XORs spent per erased symbol, normalized by the v1*v2-bit payload.
/// Zero when nothing was erased.
inline Rational decode_complexity(const DecodeReport& report, const CgrParams& params, const ErasurePattern& pattern) {
  if (pattern.empty()) return Rational(0);
  return Rational(static_cast<std::int64_t>(report.xor_count),
                  static_cast<std::int64_t>(pattern.size() * params.vertex_count()));
}

}  // namespace cgr
