#include "bmdm/random_instances.hpp"

#include <random>
#include <unordered_set>

namespace bmdm {

namespace {

// uniform_int_distribution varies between standard libraries; plain modulo
// on the engine output keeps generated instances identical everywhere.
int draw(std::mt19937_64& rng, int bound) {
  return static_cast<int>(rng() % static_cast<std::uint64_t>(bound));
}

bool coin(std::mt19937_64& rng, double prob) {
  constexpr double kScale = 9007199254740992.0;  // 2^53
  return static_cast<double>(rng() >> 11) < prob * kScale;
}

}  // namespace

BipartiteGraph random_instance(std::uint64_t seed, std::uint64_t index,
                               const RandomSpec& spec) {
  if (spec.max_a < 1 || spec.max_b < 1 || spec.max_cap < 0 || spec.edge_prob < 0.0 ||
      spec.edge_prob > 1.0) {
    throw Error(Errc::InvalidArgument, "malformed random instance spec");
  }
  std::seed_seq seq{seed, index};
  std::mt19937_64 rng(seq);

  int a = 1 + draw(rng, spec.max_a);
  int b = 1 + draw(rng, spec.max_b);
  std::vector<int> caps;
  caps.reserve(static_cast<std::size_t>(a + b));
  for (int v = 0; v < a + b; ++v) {
    caps.push_back(draw(rng, spec.max_cap + 1));
  }
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) {
      if (coin(rng, spec.edge_prob)) edges.emplace_back(i, j);
    }
  }
  return build_graph(a, b, edges, caps);
}

BipartiteGraph random_bench_graph(std::uint64_t seed, std::size_t target_edges) {
  std::seed_seq seq{seed, static_cast<std::uint64_t>(target_edges)};
  std::mt19937_64 rng(seq);

  if (target_edges == 0) {
    return build_graph(0, 0, {}, {});
  }
  int per_side = static_cast<int>(std::max<std::size_t>(2, target_edges / 8));
  std::vector<std::pair<int, int>> edges;
  edges.reserve(target_edges);
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(target_edges * 2);
  while (edges.size() < target_edges) {
    int i = draw(rng, per_side);
    int j = draw(rng, per_side);
    std::uint64_t key = (static_cast<std::uint64_t>(i) << 32) | static_cast<std::uint32_t>(j);
    if (seen.insert(key).second) edges.emplace_back(i, j);
  }
  std::vector<int> caps;
  caps.reserve(static_cast<std::size_t>(2 * per_side));
  for (int v = 0; v < 2 * per_side; ++v) {
    caps.push_back(1 + draw(rng, 3));
  }
  return build_graph(per_side, per_side, edges, caps);
}

}  // namespace bmdm
