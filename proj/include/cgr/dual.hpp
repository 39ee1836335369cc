#pragma once

#include <vector>

#include "cgr/codec.hpp"
#include "cgr/graph.hpp"
#include "cgr/layout.hpp"

namespace cgr {

/// Swaps the roles of vertices and edges in place.
///
/// Primal to dual: Parity{u,v} becomes Info(edge id of uv) and Info(v)
/// becomes a parity over the v1+1 edges incident to v. Dual to primal
/// reverses both rules, so dualize is an involution.
inline CodeArray dualize(const CodeArray& array) {
  const CgrGraph graph = build_cgr(array.params);
  CodeArray out = array;
  const bool to_dual = array.role == CodeRole::kPrimal;
  out.role = to_dual ? CodeRole::kDual : CodeRole::kPrimal;

  for (auto& row : out.rows) {
    for (Cell& cell : row) {
      if (cell.is_empty()) continue;
      if (to_dual) {
        if (cell.is_info()) {
          const auto& inc = graph.incident_edges(cell.members[0]);
          cell = Cell::parity(std::vector<VarId>(inc.begin(), inc.end()));
        } else {
          if (cell.members.size() != 2) {
            throw Error(ErrorCode::kInvalidArgument, "primal parity cells must cover exactly two vertices");
          }
          cell = Cell::info(graph.edge_id(Edge::of(cell.members[0], cell.members[1])));
        }
        continue;
      }
      if (cell.is_info()) {
        cell = Cell::parity(graph.edges().at(cell.members[0]));
        continue;
      }
      // The common endpoint of the incident edges is the vertex.
      const Edge first = graph.edges().at(cell.members.at(0));
      const Edge second = graph.edges().at(cell.members.at(1));
      const VertexId v = second.touches(first.a) ? first.a : first.b;
      cell = Cell::info(v);
    }
  }
  return out;
}

/// Any two erased columns of a dual array leave every edge bit determined.
inline MdsVerdict verify_dual_mds(const CodeArray& array) {
  const CodeArray dual = array.role == CodeRole::kDual ? array : dualize(array);
  return verify_survivor_sets(dual, dual.column_count() - 2);
}

}  // namespace cgr
