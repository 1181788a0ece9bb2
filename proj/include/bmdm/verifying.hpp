#pragma once

#include <cstdint>
#include <vector>

#include "bmdm/decomposition.hpp"
#include "bmdm/graph.hpp"
#include "bmdm/matching.hpp"

namespace bmdm {

/// b(V \ Z) + |E[Z]|. The minimum over all Z equals the size of a maximum
/// b-matching, and the sets attaining it are the verifying sets.
long long verifying_cost(const BipartiteGraph& g, const VertexSet& z);

/// True iff Z attains |M|, checked through the slackness conditions:
/// E[Z] is matched, every vertex outside Z is tight, and no matched edge
/// lies entirely outside Z. Requires a maximum matching.
bool is_verifying(const BipartiteGraph& g, const VertexSet& z, const Matching& m);

/// A complementary pair of ideals of the component order: `lower` is a
/// normalized lower ideal (contains every A-hooked inconsistent component,
/// avoids every B-hooked one) and `upper` its complement.
struct NormalizedIdealPair {
  std::vector<int> lower;  // component ids, ascending
  std::vector<int> upper;
};

/// Projective union: A-vertices of the lower ideal's components joined with
/// B-vertices of the upper ideal's. Validates the pair first (NotAnIdeal,
/// NotNormalized, UnknownComponent).
VertexSet ideal_to_verifying(const Decomposition& d, const NormalizedIdealPair& p);

/// Inverse of ideal_to_verifying. Throws NotVerifying when Z does not attain
/// |M| and MalformedSet when Z meets both classes of one component.
NormalizedIdealPair verifying_to_ideal(const BipartiteGraph& g, const Decomposition& d,
                                       const VertexSet& z);

struct VerifyingFamily {
  std::vector<VertexSet> sets;  // deduplicated, bitmap-lexicographic order
  bool truncated = false;       // true when `cap` stopped the enumeration
};

/// Enumerates every verifying set by walking the normalized lower ideals of
/// the component order in topological order. `cap` bounds the number of
/// produced sets; the family is complete iff `truncated` is false.
VerifyingFamily enumerate_verifying_sets(const Decomposition& d, std::int64_t cap);

}  // namespace bmdm
