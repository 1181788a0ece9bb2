#include "bmdm/bench.hpp"

#include <chrono>

#include "bmdm/decomposition.hpp"
#include "bmdm/matching.hpp"
#include "bmdm/random_instances.hpp"

namespace bmdm {

BenchRow bench_decompose(std::size_t target_edges, std::uint64_t seed, int repeats) {
  BipartiteGraph g = random_bench_graph(seed, target_edges);
  Matching m = max_b_matching(g);

  BenchRow row;
  row.target_edges = target_edges;
  row.vertices = static_cast<std::size_t>(g.vertex_count());
  row.edges = static_cast<std::size_t>(g.edge_count());
  row.matching_size = m.size();

  double best = -1.0;
  for (int r = 0; r < std::max(1, repeats); ++r) {
    auto start = std::chrono::steady_clock::now();
    Decomposition d = decompose(g, m);
    auto stop = std::chrono::steady_clock::now();
    (void)d;
    double seconds = std::chrono::duration<double>(stop - start).count();
    if (best < 0.0 || seconds < best) best = seconds;
  }
  row.decompose_seconds = best;
  return row;
}

std::vector<BenchRow> bench_sweep(const std::vector<std::size_t>& sizes,
                                  std::uint64_t seed, int repeats) {
  std::vector<BenchRow> rows;
  rows.reserve(sizes.size());
  for (std::size_t s : sizes) {
    rows.push_back(bench_decompose(s, seed, repeats));
  }
  return rows;
}

}  // namespace bmdm
