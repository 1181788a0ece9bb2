#pragma once

#include <cstdint>
#include <vector>

#include "bmdm/graph.hpp"

namespace bmdm {

struct BenchRow {
  std::size_t target_edges = 0;
  std::size_t vertices = 0;
  std::size_t edges = 0;
  int matching_size = 0;
  double decompose_seconds = 0.0;  // best over `repeats` runs, solver excluded
};

/// Generates a random graph of the requested size, solves it once, then
/// times decompose alone.
BenchRow bench_decompose(std::size_t target_edges, std::uint64_t seed, int repeats);

std::vector<BenchRow> bench_sweep(const std::vector<std::size_t>& sizes,
                                  std::uint64_t seed, int repeats);

}  // namespace bmdm
