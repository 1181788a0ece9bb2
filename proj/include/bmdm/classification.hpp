#pragma once

#include <utility>
#include <vector>

#include "bmdm/decomposition.hpp"
#include "bmdm/graph.hpp"
#include "bmdm/matching.hpp"

namespace bmdm {

enum class EdgeClass { Forbidden, Inevitable, Flexible };

const char* edge_class_name(EdgeClass c) noexcept;

struct EdgeClassification {
  std::vector<EdgeClass> class_of;  // indexed by edge id
};

/// Classifies every edge. Edges inside a flexible component are flexible;
/// edges joining distinct components are inevitable when matched and
/// forbidden otherwise.
EdgeClassification classify_edges(const BipartiteGraph& g, const Matching& m,
                                  const Decomposition& d);

/// D(G; b): vertices that are loose under at least one maximum b-matching,
/// read off the decomposition as (ext_A n A) u (ext_B n B).
VertexSet loose_attainable(const Decomposition& d);

/// Connected components over allowed (inevitable or flexible) edges;
/// isolated vertices become singletons. Sorted by smallest member.
std::vector<VertexSet> elementary_components(const BipartiteGraph& g,
                                             const EdgeClassification& cls);

/// The two canonical verifying sets:
///   Z1 = (ext_A n A) u (B \ ext_A),  Z2 = (ext_B n B) u (A \ ext_B).
std::pair<VertexSet, VertexSet> canonical_verifying_sets(const Decomposition& d);

}  // namespace bmdm
