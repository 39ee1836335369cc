#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cgr/error.hpp"

namespace cgr {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

/// Shape of CGR(K_v1, C_v2): v1 rings of v2 vertices each.
///
/// Only v1 even, v1 >= 2 and v2 = v1 + 3 are accepted. These are the
/// configurations that map onto an MDS array of v1*v2/2 rows by v2 columns.
class CgrParams {
 public:
  static CgrParams make(std::size_t v1, std::size_t v2) {
    if (v1 < 2 || v1 % 2 != 0) {
      throw Error(ErrorCode::kInvalidParams, "v1 must be even and >= 2, got " + std::to_string(v1));
    }
    if (v2 != v1 + 3) {
      throw Error(ErrorCode::kInvalidParams,
                  "v2 must equal v1 + 3, got v1=" + std::to_string(v1) + " v2=" + std::to_string(v2));
    }
    return CgrParams(v1, v2);
  }

  static CgrParams from_v1(std::size_t v1) { return make(v1, v1 + 3); }

  std::size_t v1() const { return v1_; }
  std::size_t v2() const { return v2_; }

  std::size_t vertex_count() const { return v1_ * v2_; }
  std::size_t ring_edge_count() const { return v1_ * v2_; }
  std::size_t ring_pair_count() const { return v1_ * (v1_ - 1) / 2; }
  std::size_t inter_ring_edge_count() const { return v2_ * ring_pair_count(); }
  std::size_t edge_count() const { return ring_edge_count() + inter_ring_edge_count(); }
  std::size_t degree() const { return v1_ + 1; }

  std::size_t rows() const { return v1_ * v2_ / 2; }
  std::size_t columns() const { return v2_; }

  friend bool operator==(const CgrParams&, const CgrParams&) = default;

 private:
  CgrParams(std::size_t v1, std::size_t v2) : v1_(v1), v2_(v2) {}

  std::size_t v1_;
  std::size_t v2_;
};

/// Unordered vertex pair, normalized so that a < b.
struct Edge {
  VertexId a = 0;
  VertexId b = 0;

  static Edge of(VertexId x, VertexId y) { return x < y ? Edge{x, y} : Edge{y, x}; }

  bool touches(VertexId v) const { return a == v || b == v; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

using RingPair = std::pair<std::size_t, std::size_t>;

class CgrGraph {
 public:
  const CgrParams& params() const { return params_; }

  /// V_j = {j*v2, ..., (j+1)*v2 - 1}.
  const std::vector<std::vector<VertexId>>& vertex_sets() const { return vertex_sets_; }
  /// E_j: consecutive pairs of ring j, wrap-around pair last.
  const std::vector<std::vector<Edge>>& ring_edges() const { return ring_edges_; }
  /// E_{i,j} for i < j, pairs (i*v2 + k, j*v2 + k) in ascending k.
  const std::map<RingPair, std::vector<Edge>>& inter_ring_edges() const { return inter_ring_edges_; }

  /// All edges in canonical order (ring edges ring by ring, then inter-ring
  /// sets in lexicographic ring-pair order). An edge's position is its EdgeId.
  const std::vector<Edge>& edges() const { return edges_; }

  EdgeId edge_id(Edge e) const {
    auto it = edge_ids_.find(e);
    if (it == edge_ids_.end()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "(" + std::to_string(e.a) + "," + std::to_string(e.b) + ") is not an edge");
    }
    return it->second;
  }

  const std::vector<EdgeId>& incident_edges(VertexId v) const { return incident_.at(v); }
  std::size_t degree(VertexId v) const { return incident_.at(v).size(); }

  std::size_t ring_of(VertexId v) const { return v / params_.v2(); }

  friend CgrGraph build_cgr(const CgrParams& params);

 private:
  explicit CgrGraph(const CgrParams& params) : params_(params) {}

  CgrParams params_;
  std::vector<std::vector<VertexId>> vertex_sets_;
  std::vector<std::vector<Edge>> ring_edges_;
  std::map<RingPair, std::vector<Edge>> inter_ring_edges_;
  std::vector<Edge> edges_;
  std::map<Edge, EdgeId> edge_ids_;
  std::vector<std::vector<EdgeId>> incident_;
};

inline CgrGraph build_cgr(const CgrParams& params) {
  const auto v1 = params.v1();
  const auto v2 = static_cast<VertexId>(params.v2());
  CgrGraph g(params);

  for (std::size_t j = 0; j < v1; ++j) {
    const auto base = static_cast<VertexId>(j) * v2;
    std::vector<VertexId> ring(v2);
    std::vector<Edge> edges;
    edges.reserve(v2);
    for (VertexId k = 0; k < v2; ++k) {
      ring[k] = base + k;
      edges.push_back(Edge::of(base + k, base + (k + 1) % v2));
    }
    g.vertex_sets_.push_back(std::move(ring));
    g.ring_edges_.push_back(std::move(edges));
  }
  for (std::size_t i = 0; i < v1; ++i) {
    for (std::size_t j = i + 1; j < v1; ++j) {
      std::vector<Edge> edges;
      edges.reserve(v2);
      for (VertexId k = 0; k < v2; ++k) {
        edges.push_back(Edge::of(static_cast<VertexId>(i) * v2 + k, static_cast<VertexId>(j) * v2 + k));
      }
      g.inter_ring_edges_.emplace(RingPair{i, j}, std::move(edges));
    }
  }

  for (const auto& ring : g.ring_edges_) g.edges_.insert(g.edges_.end(), ring.begin(), ring.end());
  for (const auto& [pair, set] : g.inter_ring_edges_) g.edges_.insert(g.edges_.end(), set.begin(), set.end());

  g.incident_.resize(params.vertex_count());
  for (EdgeId id = 0; id < g.edges_.size(); ++id) {
    const Edge e = g.edges_[id];
    g.edge_ids_.emplace(e, id);
    g.incident_[e.a].push_back(id);
    g.incident_[e.b].push_back(id);
  }
  return g;
}

}  // namespace cgr
