#pragma once

#include <cstdint>

#include "bmdm/graph.hpp"

namespace bmdm {

/// Shape of the small random instances used for oracle comparisons.
struct RandomSpec {
  int max_a = 4;
  int max_b = 4;
  int max_cap = 2;         // capacities drawn uniformly from 0..max_cap
  double edge_prob = 0.5;  // independent per vertex pair
};

/// Instance `index` of the stream identified by `seed`. Fully deterministic:
/// the same (seed, index, spec) always yields the same graph, on every
/// platform.
BipartiteGraph random_instance(std::uint64_t seed, std::uint64_t index,
                               const RandomSpec& spec = {});

/// Large sparse instance with roughly `target_edges` distinct edges and
/// capacities in 1..3, for scaling measurements. Deterministic per seed.
BipartiteGraph random_bench_graph(std::uint64_t seed, std::size_t target_edges);

}  // namespace bmdm
