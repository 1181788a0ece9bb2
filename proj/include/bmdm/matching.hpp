#pragma once

#include <span>
#include <vector>

#include "bmdm/graph.hpp"

namespace bmdm {

/// A b-matching: an edge subset with at most b(v) members at every vertex.
/// The per-vertex load is kept alongside the membership bitmap. Immutable.
class Matching {
 public:
  Matching() = default;

  /// Builds from edge ids. Throws UnknownEdgeId for out-of-range ids and
  /// NotABMatching if some vertex exceeds its capacity. Duplicate ids are
  /// collapsed (the matching is a set).
  static Matching from_edge_ids(const BipartiteGraph& g, std::span<const int> ids);

  bool contains(int e) const { return member_.at(static_cast<std::size_t>(e)) != 0; }
  int load(int v) const { return loads_.at(static_cast<std::size_t>(v)); }
  int size() const noexcept { return size_; }

  /// Member edge ids, ascending.
  const std::vector<int>& edge_ids() const noexcept { return ids_; }

  int vertex_count() const noexcept { return static_cast<int>(loads_.size()); }
  int edge_universe() const noexcept { return static_cast<int>(member_.size()); }

 private:
  std::vector<std::uint8_t> member_;
  std::vector<int> loads_;
  std::vector<int> ids_;
  int size_ = 0;
};

/// True iff the edge id set satisfies every capacity. Throws UnknownEdgeId.
bool is_b_matching(const BipartiteGraph& g, std::span<const int> edge_ids);

/// Maximum-cardinality b-matching. Deterministic: the solver scans vertices
/// and edges in ascending id order, so equal graphs produce equal matchings.
Matching max_b_matching(const BipartiteGraph& g);

/// Vertices of the given side with load strictly below capacity.
/// Throws NotABMatching when the matching does not belong to this graph.
VertexSet loose_vertices(const BipartiteGraph& g, const Matching& m, Side side);

/// Throws NotABMatching unless `m` is structurally consistent with `g`
/// (same vertex/edge universe, loads within capacities).
void require_matching_of(const BipartiteGraph& g, const Matching& m);

}  // namespace bmdm
