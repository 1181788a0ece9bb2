#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <span>
#include <utility>
#include <vector>

#include "bmdm/graph.hpp"
#include "bmdm/matching.hpp"

namespace bmdm {

/// Auxiliary digraph over the graph's vertex id space, restricted to a
/// vertex subset. For classes (w1, w2) and matching M: a matched edge with
/// ends x in w1, y in w2 becomes the arc y -> x, an unmatched edge becomes
/// x -> y. Arcs whose ends leave the domain are dropped.
struct AuxDigraph {
  int n = 0;
  VertexSet domain;
  std::vector<std::pair<int, int>> arcs;

  std::span<const int> out(int v) const {
    auto begin = out_to.data() + out_offsets[static_cast<std::size_t>(v)];
    auto end = out_to.data() + out_offsets[static_cast<std::size_t>(v) + 1];
    return {begin, end};
  }

  std::vector<int> out_offsets;
  std::vector<int> out_to;
};

AuxDigraph build_aux(const BipartiteGraph& g, Side w1, const Matching& m,
                     const VertexSet& restrict_to);

/// All vertices reachable from the side's loose vertices in the auxiliary
/// digraph built with that side first. This is the union of the vertex sets
/// of the inconsistent flexible components hooked up by `side`.
VertexSet inconsistent_unit(const BipartiteGraph& g, const Matching& m, Side side);

struct SccResult {
  /// Components numbered by their smallest contained vertex id, each sorted.
  std::vector<std::vector<int>> components;
  /// vertex -> component index; -1 outside the digraph's domain.
  std::vector<int> scc_of;
  /// Deduplicated arcs of the condensation, sorted.
  std::vector<std::pair<int, int>> condensation_arcs;
};

SccResult strongly_connected_components(const AuxDigraph& d);

enum class ComponentKind {
  Consistent,
  LooseHookedA,
  LooseHookedB,
  InactiveHookedA,
  InactiveHookedB,
};

const char* kind_name(ComponentKind k) noexcept;

inline bool hooked_by(ComponentKind k, Side s) noexcept {
  if (s == Side::A) {
    return k == ComponentKind::LooseHookedA || k == ComponentKind::InactiveHookedA;
  }
  return k == ComponentKind::LooseHookedB || k == ComponentKind::InactiveHookedB;
}

struct FlexComponent {
  int id = 0;
  VertexSet vertices;
  ComponentKind kind = ComponentKind::Consistent;
  bool trivial = false;
};

/// The full decomposition: flexible components partitioning V(G), their
/// kinds, the generating arcs of the canonical partial order, the matching
/// that produced it, and the two inconsistent units. Immutable; the
/// reachability closure behind poset_leq is built once on first use.
class Decomposition {
 public:
  int component_count() const noexcept { return static_cast<int>(components_.size()); }
  const std::vector<FlexComponent>& components() const noexcept { return components_; }
  const FlexComponent& component(int c) const;
  int component_of(int v) const;

  /// Generating arcs (c1, c2) meaning c1 precedes c2; the partial order is
  /// their reflexive-transitive closure.
  const std::vector<std::pair<int, int>>& order_arcs() const noexcept { return order_arcs_; }

  const Matching& matching() const noexcept { return matching_; }
  const VertexSet& ext(Side s) const noexcept { return s == Side::A ? ext_a_ : ext_b_; }

  int a_count() const noexcept { return a_count_; }
  int b_count() const noexcept { return b_count_; }
  int vertex_count() const noexcept { return a_count_ + b_count_; }

  /// Component ids in a topological order of the generating arcs
  /// (ties broken by ascending id).
  const std::vector<int>& topological_order() const noexcept { return topo_order_; }

  /// True iff c2 is reachable from c1 (reflexive).
  bool poset_leq(int c1, int c2) const;

  /// Generating arcs with those implied by longer paths removed.
  std::vector<std::pair<int, int>> transitive_reduction() const;

  friend Decomposition decompose(const BipartiteGraph& g, const Matching& m);

 private:
  Decomposition() = default;

  struct Closure {
    std::size_t words = 0;
    std::vector<std::uint64_t> reach;  // row per component: successors incl. self
  };
  // call_once cell kept behind a pointer so the type stays movable.
  struct ClosureCell {
    std::once_flag once;
    std::unique_ptr<Closure> value;
  };
  const Closure& closure() const;

  std::vector<FlexComponent> components_;
  std::vector<int> comp_of_;
  std::vector<std::pair<int, int>> order_arcs_;
  std::vector<int> topo_order_;
  Matching matching_;
  VertexSet ext_a_;
  VertexSet ext_b_;
  int a_count_ = 0;
  int b_count_ = 0;

  mutable std::unique_ptr<ClosureCell> closure_cell_;
};

/// Computes the decomposition from a maximum b-matching. Maximality is
/// verified through the canonical verifying set (its cost must equal |M|);
/// a submaximal matching raises NotMaximumMatching.
Decomposition decompose(const BipartiteGraph& g, const Matching& m);

/// Capacity of each vertex of component `c` reduced by its inevitable edges
/// leaving the component; pairs (vertex, restricted capacity), ascending.
std::vector<std::pair<int, int>> restricted_capacity(const BipartiteGraph& g,
                                                     const Decomposition& d, int c);

}  // namespace bmdm
