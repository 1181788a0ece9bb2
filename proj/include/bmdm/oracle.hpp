#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bmdm/classification.hpp"
#include "bmdm/decomposition.hpp"
#include "bmdm/graph.hpp"

namespace bmdm {

struct OracleLimits {
  int max_edges = 16;
  int max_vertices = 16;
};

/// Ground truth computed by exhaustive enumeration only. Every field comes
/// straight from the definitions: maximum b-matchings from all 2^m edge
/// subsets, edge classes from membership across those matchings, verifying
/// sets from all 2^n vertex subsets. Nothing here touches the fast path.
struct OracleReport {
  int max_size = 0;
  long long min_verifying_cost = 0;
  std::vector<std::vector<int>> all_max_matchings;  // each ascending; family sorted
  std::vector<EdgeClass> edge_class;
  VertexSet d_set;
  std::vector<std::pair<VertexSet, ComponentKind>> components;  // by smallest member
  std::vector<VertexSet> verifying_sets;  // bitmap-lexicographic order
};

/// Throws TooLarge when the instance exceeds the limits.
OracleReport oracle_report(const BipartiteGraph& g, const OracleLimits& limits = {});

struct EquivalenceReport {
  bool ok = true;
  std::string divergence;  // empty when ok; names the first differing field
};

/// Runs the solver/decomposition/classification/enumeration pipeline and the
/// oracle on the same instance and compares max size, edge classes, D(G;b),
/// the component partition with kinds, and the verifying-set family.
EquivalenceReport equivalence_check(const BipartiteGraph& g, const OracleLimits& limits = {});

}  // namespace bmdm
